#include "tropgb/postprocess.hpp"

#include "tropgb/macaulay.hpp"
#include "tropgb/parser.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tropgb {

namespace {

using Entries = std::vector<MatrixEntry>;

const Coeff* find_col(const Entries& e, std::uint32_t col) {
  auto it = std::lower_bound(e.begin(), e.end(), col, [](const MatrixEntry& x, std::uint32_t c) { return x.col < c; });
  return (it == e.end() || it->col != col) ? nullptr : &it->coef;
}

// target <- target - f * src; the column `clear` is dropped exactly.
void axpy(Entries& target, const Coeff& f, const Entries& src, std::uint32_t clear, const CoeffField& field) {
  Entries out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].col < src[j].col)) {
      out.push_back(std::move(target[i++]));
      continue;
    }
    if (i == target.size() || src[j].col < target[i].col) {
      if (src[j].col != clear) out.push_back({src[j].col, field.neg(field.mul(f, src[j].coef))});
      ++j;
      continue;
    }
    if (target[i].col != clear) {
      Coeff v = field.sub_mul(target[i].coef, f, src[j].coef);
      if (!v.is_zero()) out.push_back({target[i].col, std::move(v)});
    }
    ++i;
    ++j;
  }
  target = std::move(out);
}

// Reducer rows over a shared column set. Row k never contains the pivot of
// an earlier row; with back substitution it contains no other pivot at all.
struct ReducerSystem {
  std::vector<Monomial> columns;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  std::vector<Entries> rows;
  std::vector<std::uint32_t> pivot;
  std::vector<Coeff> pivot_coef;
  std::vector<std::int32_t> row_of_col;
  // Optional cofactors: row r equals Σ cof[r][k] g_k.
  std::vector<std::vector<Polynomial>> cof;
};

ReducerSystem build_reducers(const PolyRing& ring, const std::vector<Polynomial>& g, const std::vector<Polynomial>& hs,
                             bool with_cofactors, bool back_substitute) {
  const TropicalOrder& ord = ring.order();
  const CoeffField& field = ring.field();
  auto desc = [&ord](const Monomial& a, const Monomial& b) { return ord.compare_monomials(a, b) > 0; };
  std::set<Monomial, decltype(desc)> todo(desc);
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> all;
  auto add = [&](const Polynomial& f, const Monomial& t) {
    for (const auto& term : f.terms()) {
      const Monomial m = term.mon * t;
      if (seen.insert(m).second) {
        todo.insert(m);
        all.push_back(m);
      }
    }
  };
  for (const auto& h : hs) add(h, Monomial{});

  struct Pending {
    std::size_t g;
    Monomial t;
    Monomial lead;
  };
  std::vector<Pending> pending;
  while (!todo.empty()) {
    const Monomial m = *todo.begin();
    todo.erase(todo.begin());
    std::size_t best = g.size();
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].is_zero()) continue;
      const Monomial& lm = g[k].leading_monomial();
      if (!lm.divides(m)) continue;
      if (best == g.size() || ord.compare_monomials(lm, g[best].leading_monomial()) < 0) best = k;
    }
    if (best == g.size()) continue;
    const Monomial t = m / g[best].leading_monomial();
    pending.push_back({best, t, m});
    add(g[best], t);
  }

  ReducerSystem sys;
  sys.columns = std::move(all);
  std::sort(sys.columns.begin(), sys.columns.end(), desc);
  for (std::uint32_t c = 0; c < sys.columns.size(); ++c) sys.index.emplace(sys.columns[c], c);
  sys.row_of_col.assign(sys.columns.size(), -1);

  for (const auto& p : pending) {
    Entries row;
    for (const auto& term : g[p.g].terms()) row.push_back({sys.index.at(term.mon * p.t), term.coef});
    std::sort(row.begin(), row.end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.col < b.col; });
    std::vector<Polynomial> cof;
    if (with_cofactors) {
      cof.resize(g.size());
      std::vector<Term> ts{ring.make_term(Coeff{1}, p.t)};
      cof[p.g] = ring.make(std::move(ts));
    }
    // Forward: clear the pivots of earlier (already fully reduced) rows.
    for (;;) {
      std::int32_t k = -1;
      for (const auto& e : row) {
        if (sys.row_of_col[e.col] >= 0) {
          k = sys.row_of_col[e.col];
          break;
        }
      }
      if (k < 0) break;
      const std::uint32_t c = sys.pivot[k];
      const Coeff f = field.div(*find_col(row, c), sys.pivot_coef[k]);
      axpy(row, f, sys.rows[k], c, field);
      if (with_cofactors) {
        for (std::size_t q = 0; q < g.size(); ++q) {
          if (!sys.cof[k][q].is_zero()) cof[q] = ring.sub(cof[q], ring.scale(sys.cof[k][q], f));
        }
      }
    }
    const std::uint32_t pc = sys.index.at(p.lead);
    const Coeff* lead = find_col(row, pc);
    if (!lead) throw std::logic_error("reducer lost its leading monomial");
    const Coeff lead_coef = *lead;
    const auto r = static_cast<std::int32_t>(sys.rows.size());
    // Backward: clear the new pivot from earlier rows.
    for (std::int32_t k = 0; back_substitute && k < r; ++k) {
      const Coeff* a = find_col(sys.rows[k], pc);
      if (!a) continue;
      const Coeff f = field.div(*a, lead_coef);
      axpy(sys.rows[k], f, row, pc, field);
      if (with_cofactors) {
        for (std::size_t q = 0; q < g.size(); ++q) {
          if (!cof[q].is_zero()) sys.cof[k][q] = ring.sub(sys.cof[k][q], ring.scale(cof[q], f));
        }
      }
    }
    sys.rows.push_back(std::move(row));
    sys.pivot.push_back(pc);
    sys.pivot_coef.push_back(lead_coef);
    sys.row_of_col[pc] = r;
    if (with_cofactors) sys.cof.push_back(std::move(cof));
  }
  return sys;
}

Entries encode(const Polynomial& h, const ReducerSystem& sys) {
  Entries e;
  for (const auto& t : h.terms()) e.push_back({sys.index.at(t.mon), t.coef});
  std::sort(e.begin(), e.end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.col < b.col; });
  return e;
}

Polynomial decode(const Entries& e, const ReducerSystem& sys, const PolyRing& ring) {
  std::vector<Term> ts;
  ts.reserve(e.size());
  for (const auto& x : e) ts.push_back(ring.make_term(x.coef, sys.columns[x.col]));
  return ring.make(std::move(ts));
}

Entries reduce_entries(Entries h, const ReducerSystem& sys, const PolyRing& ring, ReductionMode mode,
                       std::vector<Coeff>* factors) {
  const CoeffField& field = ring.field();
  if (mode == ReductionMode::full) {
    // One pass in row order: row k only reintroduces pivots of later rows.
    for (std::size_t k = 0; k < sys.rows.size() && !h.empty(); ++k) {
      const Coeff* a = find_col(h, sys.pivot[k]);
      if (!a) continue;
      const Coeff f = field.div(*a, sys.pivot_coef[k]);
      axpy(h, f, sys.rows[k], sys.pivot[k], field);
      if (factors) (*factors)[k] = f;
    }
    return h;
  }
  for (;;) {
    if (h.empty()) return h;
    std::size_t best = 0;
    std::int64_t best_val = field.valuation(h[0].coef);
    for (std::size_t i = 1; i < h.size(); ++i) {
      const std::int64_t v = field.valuation(h[i].coef);
      if (ring.order().compare_terms(v, sys.columns[h[i].col], best_val, sys.columns[h[best].col]) > 0) {
        best = i;
        best_val = v;
      }
    }
    const std::int32_t k = sys.row_of_col[h[best].col];
    if (k < 0) return h;
    const Coeff f = field.div(h[best].coef, sys.pivot_coef[k]);
    axpy(h, f, sys.rows[k], sys.pivot[k], field);
  }
}

}  // namespace

LinearReducer::LinearReducer(const PolyRing& ring, std::vector<Polynomial> g) : ring_(ring), g_(std::move(g)) {}

std::vector<Polynomial> LinearReducer::reduce(const std::vector<Polynomial>& hs, ReductionMode mode) const {
  const ReducerSystem sys = build_reducers(ring_, g_, hs, false, mode == ReductionMode::top);
  std::vector<Polynomial> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back(decode(reduce_entries(encode(h, sys), sys, ring_, mode, nullptr), sys, ring_));
  return out;
}

Polynomial LinearReducer::reduce(const Polynomial& h, ReductionMode mode) const {
  return reduce(std::vector<Polynomial>{h}, mode).front();
}

Polynomial LinearReducer::reduce_with_cofactors(const Polynomial& h, std::vector<Polynomial>& cofactors) const {
  const ReducerSystem sys = build_reducers(ring_, g_, {h}, true, false);
  std::vector<Coeff> factors(sys.rows.size());
  const Entries r = reduce_entries(encode(h, sys), sys, ring_, ReductionMode::full, &factors);
  cofactors.assign(g_.size(), Polynomial{});
  for (std::size_t k = 0; k < sys.rows.size(); ++k) {
    if (factors[k].is_zero()) continue;
    for (std::size_t q = 0; q < g_.size(); ++q) {
      if (!sys.cof[k][q].is_zero()) cofactors[q] = ring_.add(cofactors[q], ring_.scale(sys.cof[k][q], factors[k]));
    }
  }
  return decode(r, sys, ring_);
}

Polynomial normal_form(const Polynomial& h, const std::vector<Polynomial>& g, const PolyRing& ring, ReductionMode mode) {
  return LinearReducer(ring, g).reduce(h, mode);
}

namespace {

VerifyReport verify_direct(const std::vector<Polynomial>& nonzero, const std::vector<Polynomial>& f, const PolyRing& ring) {
  VerifyReport report;
  std::vector<Polynomial> targets;
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      SPolynomial s = ring.spol(nonzero[i], nonzero[j]);
      ++report.pairs_checked;
      if (s.s.is_zero()) continue;
      targets.push_back(std::move(s.s));
      labels.emplace_back(i, j);
    }
  }
  const std::size_t npairs = targets.size();
  for (const auto& p : f) targets.push_back(p);
  const std::vector<Polynomial> rem = LinearReducer(ring, nonzero).reduce(targets, ReductionMode::full);
  for (std::size_t t = 0; t < rem.size(); ++t) {
    if (rem[t].is_zero()) continue;
    report.ok = false;
    if (t < npairs) {
      report.witness_pair = labels[t];
      report.reason = "S-polynomial of elements " + std::to_string(labels[t].first) + " and " +
                      std::to_string(labels[t].second) + " has nonzero remainder " + format_polynomial(rem[t], ring);
    } else {
      report.witness_generator = t - npairs;
      report.reason = "generator " + std::to_string(t - npairs) + " has nonzero remainder " + format_polynomial(rem[t], ring);
    }
    return report;
  }
  return report;
}

}  // namespace

bool is_groebner_basis(const std::vector<Polynomial>& g, const std::vector<Polynomial>& f, const PolyRing& ring,
                       std::size_t* pairs_checked) {
  // M: elements whose leading monomials minimally generate ⟨LM(G)⟩. S-pairs of M,
  // the rest of G and F reducing to zero modulo M certify M, hence G.
  std::vector<Polynomial> nonzero;
  for (const auto& p : g) {
    if (!p.is_zero()) nonzero.push_back(p);
  }
  std::vector<bool> in_m(nonzero.size(), true);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const Monomial& li = nonzero[i].leading_monomial();
    for (std::size_t j = 0; j < nonzero.size(); ++j) {
      if (j == i) continue;
      const Monomial& lj = nonzero[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) {
        in_m[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> m;
  std::vector<Polynomial> targets;
  for (std::size_t i = 0; i < nonzero.size(); ++i) (in_m[i] ? m : targets).push_back(nonzero[i]);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      SPolynomial s = ring.spol(m[a], m[b]);
      ++pairs;
      if (!s.s.is_zero()) targets.push_back(std::move(s.s));
    }
  }
  if (pairs_checked) *pairs_checked = pairs;
  for (const auto& p : f) targets.push_back(p);
  const std::vector<Polynomial> rem = LinearReducer(ring, m).reduce(targets, ReductionMode::full);
  return std::all_of(rem.begin(), rem.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VerifyReport verify_gb(const std::vector<Polynomial>& g, const std::vector<Polynomial>& f, const PolyRing& ring) {
  VerifyReport report;
  if (is_groebner_basis(g, f, ring, &report.pairs_checked)) return report;
  // Every pair of G, to name a witness.
  std::vector<Polynomial> nonzero;
  for (const auto& p : g) {
    if (!p.is_zero()) nonzero.push_back(p);
  }
  return verify_direct(nonzero, f, ring);
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& g) {
  std::vector<Monomial> out;
  for (const auto& p : g) {
    if (!p.is_zero()) out.push_back(p.leading_monomial());
  }
  return out;
}

std::vector<Monomial> leading_monomial_set(const std::vector<Polynomial>& g) {
  std::vector<Monomial> out = leading_monomials(g);
  std::sort(out.begin(), out.end(), StorageLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& g, const PolyRing& ring) {
  std::vector<Polynomial> nonzero;
  for (const auto& p : g) {
    if (!p.is_zero()) nonzero.push_back(p);
  }
  std::vector<Monomial> mins = minimal_monomials(leading_monomials(nonzero));
  std::sort(mins.begin(), mins.end(), [&](const Monomial& a, const Monomial& b) { return ring.order().compare_monomials(a, b) < 0; });
  std::vector<Polynomial> ms;
  for (const auto& m : mins) {
    std::vector<Term> ts{ring.make_term(Coeff{1}, m)};
    ms.push_back(ring.make(std::move(ts)));
  }
  const std::vector<Polynomial> nf = LinearReducer(ring, nonzero).reduce(ms, ReductionMode::full);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ms.size(); ++i) out.push_back(ring.sub(ms[i], nf[i]));
  return out;
}

// Classical polynomials ------------------------------------------------------

bool operator==(const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (!(a.terms[i].mon == b.terms[i].mon) || a.terms[i].coef.value != b.terms[i].coef.value) return false;
  }
  return true;
}

ClassicalPolynomial make_classical(std::vector<ClassicalTerm> terms, MonomialOrderKind kind) {
  std::sort(terms.begin(), terms.end(),
            [kind](const ClassicalTerm& a, const ClassicalTerm& b) { return compare_monomials(a.mon, b.mon, kind) > 0; });
  ClassicalPolynomial out;
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().mon == t.mon) {
      out.terms.back().coef.value += t.coef.value;
      out.terms.back().coef.prec = std::min(out.terms.back().coef.prec, t.coef.prec);
    } else {
      out.terms.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms, [](const ClassicalTerm& t) { return t.coef.is_zero(); });
  return out;
}

ClassicalPolynomial to_classical(const Polynomial& f, MonomialOrderKind kind) {
  std::vector<ClassicalTerm> ts;
  for (const auto& t : f.terms()) ts.push_back({t.mon, t.coef});
  return make_classical(std::move(ts), kind);
}

std::string format_classical(const ClassicalPolynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms) {
    std::string s;
    const std::string mon = format_monomial(t.mon, names);
    if (t.mon.is_one()) {
      s = t.coef.value.get_str();
    } else if (t.coef.value == 1) {
      s = mon;
    } else if (t.coef.value == -1) {
      s = "-" + mon;
    } else {
      s = t.coef.value.get_str() + "*" + mon;
    }
    if (out.empty()) {
      out = s;
    } else if (s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

namespace {

using CTerms = std::vector<ClassicalTerm>;

// a - c * t * b, all sorted descending under kind.
CTerms sub_scaled(const CTerms& a, const mpq_class& c, const Monomial& t, const CTerms& b, MonomialOrderKind kind) {
  CTerms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial bm = b[j].mon * t;
    const int cmp = i == a.size() ? -1 : compare_monomials(a[i].mon, bm, kind);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, Coeff{-c * b[j].coef.value}});
      ++j;
    } else {
      mpq_class v = a[i].coef.value - c * b[j].coef.value;
      if (sgn(v) != 0) out.push_back({bm, Coeff{v}});
      ++i;
      ++j;
    }
  }
  return out;
}

CTerms monic_terms(CTerms f) {
  if (f.empty()) return f;
  const mpq_class lc = f[0].coef.value;
  for (auto& t : f) t.coef = Coeff{t.coef.value / lc};
  return f;
}

CTerms classical_reduce(CTerms p, const std::vector<CTerms>& g, MonomialOrderKind kind, bool full) {
  CTerms rem;
  while (!p.empty()) {
    const ClassicalTerm lt = p[0];
    bool reduced = false;
    for (const auto& q : g) {
      if (q.empty() || !q[0].mon.divides(lt.mon)) continue;
      p = sub_scaled(p, lt.coef.value / q[0].coef.value, lt.mon / q[0].mon, q, kind);
      reduced = true;
      break;
    }
    if (reduced) continue;
    if (!full) {
      rem.insert(rem.end(), p.begin(), p.end());
      return rem;
    }
    rem.push_back(lt);
    p.erase(p.begin());
  }
  return rem;
}

}  // namespace

std::vector<ClassicalPolynomial> buchberger_oracle(const std::vector<ClassicalPolynomial>& f, MonomialOrderKind kind) {
  std::vector<CTerms> g;
  for (const auto& p : f) {
    ClassicalPolynomial q = make_classical(p.terms, kind);
    if (!q.is_zero()) g.push_back(monic_terms(std::move(q.terms)));
  }
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(g[i][0].mon, g[j][0].mon)});
  }
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [kind](const Pair& a, const Pair& b) {
      return compare_monomials(a.lcm, b.lcm, kind) < 0;
    });
    const Pair p = *it;
    pairs.erase(it);
    const Monomial& li = g[p.i][0].mon;
    const Monomial& lj = g[p.j][0].mon;
    if (coprime(li, lj)) continue;
    CTerms s = sub_scaled({}, mpq_class(-1), p.lcm / li, g[p.i], kind);
    s = sub_scaled(s, mpq_class(1), p.lcm / lj, g[p.j], kind);
    CTerms r = classical_reduce(std::move(s), g, kind, true);
    if (r.empty()) continue;
    g.push_back(monic_terms(std::move(r)));
    const std::size_t n = g.size() - 1;
    for (std::size_t i = 0; i < n; ++i) pairs.push_back({i, n, lcm(g[i][0].mon, g[n][0].mon)});
  }
  // Minimalise, then interreduce.
  std::vector<CTerms> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j][0].mon.divides(g[i][0].mon) && (!(g[j][0].mon == g[i][0].mon) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<ClassicalPolynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<CTerms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    CTerms tail(minimal[i].begin() + 1, minimal[i].end());
    CTerms r = classical_reduce(std::move(tail), others, kind, true);
    r.insert(r.begin(), minimal[i][0]);
    out.push_back(make_classical(std::move(r), kind));
  }
  std::sort(out.begin(), out.end(), [kind](const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), kind) < 0;
  });
  return out;
}

}  // namespace tropgb
