#include "tropgb/postprocess.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tropgb {

Staircase Staircase::of(const std::vector<Polynomial>& g, std::size_t nvars) {
  const std::vector<Monomial> lms = leading_monomials(g);
  for (std::size_t i = 0; i < nvars; ++i) {
    const bool bounded = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      return m.degree() > 0 && m.degree() == m[i];
    });
    const bool unit = std::any_of(lms.begin(), lms.end(), [](const Monomial& m) { return m.is_one(); });
    if (!bounded && !unit) {
      throw NotZeroDimensional("no leading monomial is a pure power of variable " + std::to_string(i + 1));
    }
  }
  Staircase out;
  std::unordered_set<Monomial, MonomialHash> seen{Monomial{}};
  std::deque<Monomial> queue{Monomial{}};
  while (!queue.empty()) {
    const Monomial m = queue.front();
    queue.pop_front();
    if (std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
    out.monomials.push_back(m);
    for (std::size_t i = 0; i < nvars; ++i) {
      const Monomial next = m * Monomial::variable(i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return out;
}

namespace {

using Vec = std::vector<Coeff>;

struct EchelonRow {
  Vec v;
  std::size_t pivot;
  Vec combo;  // coefficients over the accepted monomials
};

}  // namespace

std::vector<ClassicalPolynomial> fglm_to_lex(const std::vector<Polynomial>& g, const PolyRing& ring) {
  const CoeffField& field = ring.field();
  const std::size_t n = ring.nvars();
  std::vector<Polynomial> nonzero;
  for (const auto& p : g) {
    if (!p.is_zero()) nonzero.push_back(p);
  }
  for (const auto& p : nonzero) {
    if (p.leading_monomial().is_one()) return {make_classical({{Monomial{}, Coeff{1}}}, MonomialOrderKind::lex)};
  }

  Staircase stair = Staircase::of(nonzero, n);
  std::sort(stair.monomials.begin(), stair.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.order().compare_monomials(a, b) < 0; });
  const std::size_t dim = stair.monomials.size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> coord;
  for (std::size_t k = 0; k < dim; ++k) coord.emplace(stair.monomials[k], k);

  auto to_vec = [&](const Polynomial& p) {
    Vec v(dim);
    for (const auto& t : p.terms()) v[coord.at(t.mon)] = t.coef;
    return v;
  };

  // mult[i][k] = NF(x_i · b_k) in staircase coordinates.
  std::vector<Polynomial> products;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& b : stair.monomials) {
      std::vector<Term> ts{ring.make_term(Coeff{1}, b * Monomial::variable(i))};
      products.push_back(ring.make(std::move(ts)));
    }
  }
  const std::vector<Polynomial> nfs = LinearReducer(ring, nonzero).reduce(products, ReductionMode::full);
  std::vector<std::vector<Vec>> mult(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < dim; ++k) mult[i].push_back(to_vec(nfs[i * dim + k]));
  }

  auto lex_less = [](const Monomial& a, const Monomial& b) { return compare_monomials(a, b, MonomialOrderKind::lex) < 0; };
  // Candidate monomial -> (accepted index it extends, variable), or none for 1.
  std::map<Monomial, std::pair<std::size_t, std::size_t>, decltype(lex_less)> todo(lex_less);
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  todo.emplace(Monomial{}, std::pair{kRoot, std::size_t{0}});

  std::vector<Monomial> accepted;
  std::vector<Vec> accepted_vec;
  std::vector<EchelonRow> rows;
  std::vector<Monomial> lex_lms;
  std::vector<ClassicalPolynomial> out;

  while (!todo.empty()) {
    auto it = todo.begin();
    const Monomial m = it->first;
    const auto [from, var] = it->second;
    todo.erase(it);
    if (std::any_of(lex_lms.begin(), lex_lms.end(), [&](const Monomial& l) { return l.divides(m); })) continue;

    Vec v(dim);
    if (from == kRoot) {
      std::vector<Term> ts{ring.make_term(Coeff{1}, Monomial{})};
      v = to_vec(LinearReducer(ring, nonzero).reduce(ring.make(std::move(ts)), ReductionMode::full));
    } else {
      const Vec& src = accepted_vec[from];
      for (std::size_t k = 0; k < dim; ++k) {
        if (src[k].is_zero()) continue;
        const Vec& col = mult[var][k];
        for (std::size_t r = 0; r < dim; ++r) {
          if (!col[r].is_zero()) v[r] = field.add(v[r], field.mul(src[k], col[r]));
        }
      }
    }
    const Vec original = v;
    Vec combo(accepted.size() + 1);
    combo.back() = Coeff{1};
    for (const auto& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      const Coeff f = field.div(v[row.pivot], row.v[row.pivot]);
      for (std::size_t r = 0; r < dim; ++r) {
        if (!row.v[r].is_zero()) v[r] = field.sub_mul(v[r], f, row.v[r]);
      }
      for (std::size_t s = 0; s < row.combo.size(); ++s) {
        if (!row.combo[s].is_zero()) combo[s] = field.sub_mul(combo[s], f, row.combo[s]);
      }
    }

    std::size_t pivot = dim;
    bool any_nonzero = false;
    for (std::size_t r = 0; r < dim; ++r) {
      if (v[r].is_zero()) continue;
      any_nonzero = true;
      if (field.indistinguishable_from_zero(v[r])) continue;
      if (pivot == dim || (field.tracked() && field.valuation(v[r]) < field.valuation(v[pivot]))) pivot = r;
    }
    if (any_nonzero && pivot == dim) {
      throw PrecisionError("FGLM pivot for " + format_monomial(m, ring.names()) + " is indistinguishable from zero");
    }

    if (!any_nonzero) {
      std::vector<ClassicalTerm> ts;
      for (std::size_t s = 0; s < combo.size(); ++s) {
        if (combo[s].is_zero()) continue;
        ts.push_back({s < accepted.size() ? accepted[s] : m, combo[s]});
      }
      out.push_back(make_classical(std::move(ts), MonomialOrderKind::lex));
      lex_lms.push_back(m);
      continue;
    }
    accepted.push_back(m);
    accepted_vec.push_back(original);
    rows.push_back({std::move(v), pivot, std::move(combo)});
    for (auto& row : rows) row.combo.resize(accepted.size() + 1);
    for (std::size_t i = 0; i < n; ++i) todo.try_emplace(m * Monomial::variable(i), accepted.size() - 1, i);
  }
  std::sort(out.begin(), out.end(), [](const ClassicalPolynomial& a, const ClassicalPolynomial& b) {
    return compare_monomials(a.leading_monomial(), b.leading_monomial(), MonomialOrderKind::lex) < 0;
  });
  return out;
}

}  // namespace tropgb
