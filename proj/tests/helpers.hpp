#pragma once

#include "tropgb/bench.hpp"
#include "tropgb/f5.hpp"
#include "tropgb/parser.hpp"
#include "tropgb/postprocess.hpp"
#include "tropgb/variants.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace th {

using namespace tropgb;

inline PolyRing make_ring(std::vector<std::string> names, ValuationContext ctx, std::vector<mpq_class> weights = {},
                          MonomialOrderKind tiebreak = MonomialOrderKind::grevlex, bool tracked = false) {
  if (weights.empty()) weights.assign(names.size(), mpq_class(0));
  return PolyRing(std::move(names), TropicalOrder(std::move(weights), tiebreak), CoeffField(std::move(ctx), tracked));
}

inline PolyRing xy2() { return make_ring({"x", "y"}, ValuationContext::padic(2)); }

inline Polynomial P(const PolyRing& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline std::vector<Polynomial> Ps(const PolyRing& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  std::stable_sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  return out;
}

inline Monomial M(const PolyRing& ring, const std::string& text) { return P(ring, text).leading_monomial(); }

inline std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(), StorageLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Minimal generators of ⟨LM(G)⟩: the leading monomials of the reduced basis.
inline std::vector<Monomial> reduced_lms(const std::vector<Polynomial>& g) {
  return sorted(minimal_monomials(leading_monomials(g)));
}

inline std::vector<Monomial> oracle_lms(const std::vector<Polynomial>& f, MonomialOrderKind kind = MonomialOrderKind::grevlex) {
  std::vector<ClassicalPolynomial> cf;
  for (const auto& p : f) cf.push_back(to_classical(p, kind));
  std::vector<Monomial> out;
  for (const auto& g : buchberger_oracle(cf, kind)) out.push_back(g.leading_monomial());
  return sorted(out);
}

inline std::string show(const std::vector<Monomial>& ms, const PolyRing& ring) {
  std::string out = "{";
  for (const auto& m : ms) out += (out.size() > 1 ? ", " : "") + format_monomial(m, ring.names());
  return out + "}";
}

/// Owns the ring of a generated system together with its polynomials.
inline ParsedSystem system(const SystemSpec& spec, const ValuationContext& ctx, std::vector<mpq_class> weights = {},
                           std::optional<std::int64_t> precision = std::nullopt) {
  if (weights.empty()) weights.assign(spec.vars.size(), mpq_class(0));
  return load_system(with_field(spec, ctx, std::move(weights), precision));
}

inline mpq_class random_rational(std::mt19937_64& rng, int span = 40) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Monomial m;
  const unsigned d = deg(rng);
  for (unsigned k = 0; k < d; ++k) m = m * Monomial::variable(var(rng));
  return m;
}

/// Dense polynomial of exact degree d with small integer coefficients.
inline Polynomial random_dense(const PolyRing& ring, std::mt19937_64& rng, unsigned d, int span = 5, bool homogeneous = false) {
  std::uniform_int_distribution<int> coef(-span, span);
  std::vector<Term> ts;
  const std::size_t n = ring.nvars();
  std::vector<unsigned> e(n, 0);
  // Enumerate exponent vectors of total degree <= d.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      unsigned deg = 0;
      for (unsigned x : e) deg += x;
      if (homogeneous && deg != d) return;
      int c = coef(rng);
      if (deg == d && c == 0) c = 1;
      if (c != 0) ts.push_back(ring.make_term(Coeff{mpq_class(c)}, Monomial(std::span<const unsigned>(e.data(), n))));
      return;
    }
    for (unsigned x = 0; x <= left; ++x) {
      e[i] = x;
      rec(i + 1, left - x);
    }
    e[i] = 0;
  };
  rec(0, d);
  return ring.make(std::move(ts));
}

inline std::vector<Polynomial> sort_by_degree(std::vector<Polynomial> f) {
  std::stable_sort(f.begin(), f.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  return f;
}

struct Fixture {
  std::vector<std::string> vars;
  std::vector<std::vector<unsigned>> lms;
  std::vector<std::string> polys;
};

inline Fixture read_fixture(const std::string& name) {
  std::ifstream in(std::string(TROPGB_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  Fixture f;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("vars: ", 0) == 0) {
      std::istringstream ss(line.substr(6));
      for (std::string v; ss >> v;) f.vars.push_back(v);
    } else if (line.rfind("lm: ", 0) == 0) {
      std::istringstream ss(line.substr(4));
      std::vector<unsigned> e;
      for (unsigned x; ss >> x;) e.push_back(x);
      f.lms.push_back(e);
    } else if (line.rfind("poly: ", 0) == 0) {
      f.polys.push_back(line.substr(6));
    }
  }
  return f;
}

inline std::vector<Monomial> fixture_lms(const Fixture& f) {
  std::vector<Monomial> out;
  for (const auto& e : f.lms) out.push_back(Monomial(std::span<const unsigned>(e.data(), e.size())));
  return sorted(out);
}

/// Naive exact row space over Q in reduced echelon form, used as a rank oracle.
class SpanOracle {
 public:
  using Vec = std::map<Monomial, mpq_class, StorageLess>;

  static Vec vec(const Polynomial& f) {
    Vec v;
    for (const auto& t : f.terms()) v[t.mon] = t.coef.value;
    return v;
  }

  Vec reduce(Vec v) const {
    for (const auto& [piv, b] : rows_) {
      auto it = v.find(piv);
      if (it == v.end()) continue;
      const mpq_class f = it->second / b.at(piv);
      for (const auto& [m, c] : b) {
        mpq_class& x = v[m];
        x -= f * c;
        if (x == 0) v.erase(m);
      }
    }
    return v;
  }

  bool contains(const Polynomial& f) const { return reduce(vec(f)).empty(); }

  /// Returns whether the rank grew.
  bool insert(const Polynomial& f) {
    Vec v = reduce(vec(f));
    if (v.empty()) return false;
    const auto [pm, pc] = *v.begin();
    for (auto& [piv, b] : rows_) {
      auto it = b.find(pm);
      if (it == b.end()) continue;
      const mpq_class f2 = it->second / pc;
      for (const auto& [m, c] : v) {
        mpq_class& x = b[m];
        x -= f2 * c;
        if (x == 0) b.erase(m);
      }
    }
    rows_.emplace_back(pm, std::move(v));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::vector<std::pair<Monomial, Vec>> rows_;
};

/// Random Macaulay matrix with at most max_rows rows over at most max_cols
/// monomials of degree <= 3 in the ring's variables, with distinct random signatures.
inline MacaulayMatrix random_matrix(const PolyRing& ring, const SignatureOrderContext& ctx, std::mt19937_64& rng,
                                    std::size_t max_rows, std::size_t max_cols) {
  std::vector<Monomial> cols;
  const std::size_t ncols = 1 + rng() % max_cols;
  for (int tries = 0; cols.size() < ncols && tries < 1000; ++tries) {
    const Monomial m = random_monomial(rng, ring.nvars(), 3);
    if (std::find(cols.begin(), cols.end(), m) == cols.end()) cols.push_back(m);
  }
  const std::uint64_t p = ring.valuation_context().is_trivial() ? 7 : ring.valuation_context().prime();
  std::vector<std::pair<Signature, Polynomial>> rows;
  std::vector<Signature> used;
  const std::size_t nrows = 1 + rng() % max_rows;
  for (int tries = 0; rows.size() < nrows && tries < 1000; ++tries) {
    const Signature sig = ctx.signature(random_monomial(rng, ring.nvars(), 2), rng() % ctx.ngenerators());
    if (std::find(used.begin(), used.end(), sig) != used.end()) continue;
    std::vector<Term> ts;
    if (!rows.empty() && rng() % 5 == 0) {
      // Copy or combine earlier rows so that dependencies occur.
      const Polynomial& a = rows[rng() % rows.size()].second;
      const Polynomial& b = rows[rng() % rows.size()].second;
      Polynomial c = ring.add(ring.scale(a, Coeff(mpq_class(static_cast<long>(rng() % 5) - 2))), ring.scale(b, Coeff(mpq_class(static_cast<long>(p)))));
      if (c.is_zero()) continue;
      used.push_back(sig);
      rows.emplace_back(sig, std::move(c));
      continue;
    }
    for (const auto& m : cols) {
      if (rng() % 2) continue;
      mpz_class c = static_cast<long>(rng() % 9) - 4;
      if (c == 0) c = 1;
      for (unsigned k = rng() % 3; k > 0; --k) c *= static_cast<unsigned long>(p);
      ts.push_back(ring.make_term(Coeff(mpq_class(c)), m));
    }
    Polynomial f = ring.make(std::move(ts));
    if (f.is_zero()) continue;
    used.push_back(sig);
    rows.emplace_back(sig, std::move(f));
  }
  return build_matrix(std::move(rows), ring, ctx);
}

/// Prefix spans agree and nonzero output rows have distinct leading monomials.
inline bool lup_contracts_hold(const MacaulayMatrix& in, const MacaulayMatrix& out, const PolyRing& ring, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (in.nrows() != out.nrows()) return fail("row count changed");
  SpanOracle a, b, both;
  std::vector<Monomial> lms;
  for (std::size_t k = 0; k < in.nrows(); ++k) {
    const Polynomial pin = row_polynomial(in, k, ring), pout = row_polynomial(out, k, ring);
    if (!(in.rows[k].sig == out.rows[k].sig)) return fail("signature moved at row " + std::to_string(k));
    a.insert(pin);
    if (!pout.is_zero()) {
      b.insert(pout);
      lms.push_back(pout.leading_monomial());
    }
    both.insert(pin);
    both.insert(pout);
    if (a.rank() != b.rank() || a.rank() != both.rank()) return fail("prefix span differs at row " + std::to_string(k));
  }
  if (sorted(lms).size() != lms.size()) return fail("repeated leading monomial");
  return true;
}

struct Case {
  std::string name;
  ParsedSystem sys;
};

inline ParsedSystem from_text(std::vector<std::string> vars, ValuationContext ctx, const std::vector<std::string>& polys,
                              std::vector<mpq_class> weights = {}) {
  SystemSpec spec;
  spec.ctx = std::move(ctx);
  spec.vars = std::move(vars);
  spec.weights = weights.empty() ? std::vector<mpq_class>(spec.vars.size(), 0) : std::move(weights);
  spec.polys = polys;
  return load_system(spec);
}

/// Random dense system with integer coefficients, as many polynomials as variables.
inline ParsedSystem random_system(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, ValuationContext ctx,
                                  bool homogeneous = false, int span = 5) {
  static const std::vector<std::string> names = {"x", "y", "z", "t", "u", "v"};
  ParsedSystem sys{make_ring(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(nvars)), std::move(ctx)), {}, std::nullopt};
  for (std::size_t i = 0; i < nvars; ++i)
    sys.polys.push_back(random_dense(sys.ring, rng, 1 + static_cast<unsigned>(rng() % max_degree), span, homogeneous));
  sys.polys = sort_by_degree(std::move(sys.polys));
  return sys;
}

/// Small systems shared by the algorithm tests.
inline std::vector<Case> small_suite() {
  std::vector<Case> out;
  out.push_back({"worked-example", from_text({"x", "y"}, ValuationContext::padic(2), {"x + y", "2*x + y"})});
  out.push_back({"katsura2", system(gen_katsura(2), ValuationContext::trivial())});
  out.push_back({"katsura3", system(gen_katsura(3), ValuationContext::trivial())});
  out.push_back({"cyclic3", system(gen_cyclic(3), ValuationContext::trivial())});
  out.push_back({"katsura3-p2", system(gen_katsura(3), ValuationContext::padic(2))});
  out.push_back({"katsura3-p3-alt", system(gen_katsura(3), ValuationContext::padic(3), weight_preset(WeightPreset::alternating, 4))});
  out.push_back({"cyclic3-p2-alt", system(gen_cyclic(3), ValuationContext::padic(2), weight_preset(WeightPreset::alternating, 3))});
  out.push_back({"cyclic4-p2", system(gen_cyclic(4), ValuationContext::padic(2))});
  out.push_back({"cycle-trap", from_text({"x", "y"}, ValuationContext::padic(2), {"x - 2*y", "y - 2*x + x^2"})});
  out.push_back({"redundant", from_text({"x", "y", "z"}, ValuationContext::padic(3), {"x + y", "x*y - z", "x^2 + x*y", "z^2 - 3"})});
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 4; ++k)
    out.push_back({"random-" + std::to_string(k), random_system(rng, 3, 3, k % 2 ? ValuationContext::padic(2) : ValuationContext::trivial())});
  return out;
}

inline ClassicalPolynomial monic(ClassicalPolynomial f) {
  if (f.is_zero()) return f;
  const mpq_class lc = f.terms[0].coef.value;
  for (auto& t : f.terms) t.coef = Coeff(t.coef.value / lc);
  return f;
}

inline std::vector<ClassicalPolynomial> sort_classical(std::vector<ClassicalPolynomial> g, MonomialOrderKind kind) {
  std::sort(g.begin(), g.end(), [&](const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), kind) < 0;
  });
  return g;
}

/// Fixture polynomials as a monic classical basis sorted by increasing leading monomial.
inline std::vector<ClassicalPolynomial> fixture_basis(const Fixture& fx, MonomialOrderKind kind) {
  const PolyRing ring = make_ring(fx.vars, ValuationContext::trivial());
  std::vector<ClassicalPolynomial> out;
  for (const auto& text : fx.polys) out.push_back(monic(to_classical(P(ring, text), kind)));
  return sort_classical(std::move(out), kind);
}

inline std::string show(const std::vector<ClassicalPolynomial>& g, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& f : g) out += format_classical(f, names) + "\n";
  return out;
}

}  // namespace th
