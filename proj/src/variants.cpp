#include "tropgb/variants.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_set>

namespace tropgb {

F5Result iterative_f5(const std::vector<Polynomial>& f, const PolyRing& ring, const F5Options& opts) {
  F5Engine engine(ring, f, opts, SignatureMode::incr);
  for (std::size_t i = 0; i < f.size(); ++i) engine.run(i, i + 1);
  F5Result out;
  out.stats = engine.stats();
  out.basis = engine.take_basis();
  return out;
}

namespace {

struct F4Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct ProductKey {
  std::size_t g;
  Monomial t;
  friend bool operator==(const ProductKey& a, const ProductKey& b) { return a.g == b.g && a.t == b.t; }
};

struct ProductKeyHash {
  std::size_t operator()(const ProductKey& k) const noexcept { return k.t.hash() * 131 + k.g; }
};

}  // namespace

F5Result f4(const std::vector<Polynomial>& f, const PolyRing& ring, const F4Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  F5Result out;
  std::vector<Polynomial> g;
  const bool exact = !ring.field().tracked();
  auto finish = [&]() {
    for (const auto& p : g) out.basis.push_back({p, Signature{Monomial{}, 0, p.degree()}, true});
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  };

  for (const auto& p : f) {
    if (p.is_zero()) continue;
    if (p.leading_monomial().is_one()) {
      g.assign(1, exact ? ring.constant(1) : p);
      return finish();
    }
    g.push_back(exact ? ring.monic(p) : p);
  }

  std::vector<F4Pair> pairs;
  // Gebauer-Möller style update: chain criterion on old pairs, product
  // criterion on new ones.
  auto add_pairs = [&](std::size_t fresh) {
    const Monomial& ln = g[fresh].leading_monomial();
    std::erase_if(pairs, [&](const F4Pair& p) {
      if (!ln.divides(p.lcm)) return false;
      const bool drop = !(lcm(g[p.i].leading_monomial(), ln) == p.lcm) && !(lcm(g[p.j].leading_monomial(), ln) == p.lcm);
      if (drop) ++out.stats.pairs_eliminated;
      return drop;
    });
    for (std::size_t j = 0; j < fresh; ++j) {
      ++out.stats.pairs_created;
      const Monomial& lj = g[j].leading_monomial();
      if (coprime(lj, ln)) {
        ++out.stats.pairs_eliminated;
        continue;
      }
      pairs.push_back({j, fresh, lcm(lj, ln)});
    }
  };
  for (std::size_t i = 0; i < g.size(); ++i) add_pairs(i);

  const TropicalOrder& ord = ring.order();
  while (!pairs.empty()) {
    unsigned d = std::numeric_limits<unsigned>::max();
    for (const auto& p : pairs) d = std::min(d, p.lcm.degree());
    if (opts.max_degree && d > *opts.max_degree) {
      out.stats.degree_truncated = true;
      break;
    }
    out.stats.max_sugar = std::max(out.stats.max_sugar, d);
    std::vector<F4Pair> batch;
    std::vector<F4Pair> rest;
    for (auto& p : pairs) (p.lcm.degree() == d ? batch : rest).push_back(std::move(p));
    pairs = std::move(rest);

    std::vector<ProductKey> products;
    std::unordered_set<ProductKey, ProductKeyHash> present;
    auto desc = [&ord](const Monomial& a, const Monomial& b) { return ord.compare_monomials(a, b) > 0; };
    std::set<Monomial, decltype(desc)> todo(desc);
    std::unordered_set<Monomial, MonomialHash> seen;
    auto add_product = [&](std::size_t gi, const Monomial& t) {
      ProductKey key{gi, t};
      if (!present.insert(key).second) return false;
      products.push_back(key);
      for (const auto& term : g[gi].terms()) {
        const Monomial m = term.mon * t;
        if (seen.insert(m).second) todo.insert(m);
      }
      return true;
    };
    for (const auto& p : batch) {
      add_product(p.i, p.lcm / g[p.i].leading_monomial());
      add_product(p.j, p.lcm / g[p.j].leading_monomial());
    }
    while (!todo.empty()) {
      const Monomial m = *todo.begin();
      todo.erase(todo.begin());
      std::size_t best = kNoSource;
      for (std::size_t k = 0; k < g.size(); ++k) {
        const Monomial& lm = g[k].leading_monomial();
        if (!lm.divides(m)) continue;
        if (best == kNoSource || ord.compare_monomials(lm, g[best].leading_monomial()) < 0) best = k;
      }
      if (best == kNoSource) continue;
      if (add_product(best, m / g[best].leading_monomial())) ++out.stats.reducer_rows;
    }

    std::stable_sort(products.begin(), products.end(), [&](const ProductKey& a, const ProductKey& b) {
      return ord.compare_monomials(a.t * g[a.g].leading_monomial(), b.t * g[b.g].leading_monomial()) > 0;
    });
    std::vector<Polynomial> rows;
    rows.reserve(products.size());
    for (const auto& k : products) rows.push_back(ring.mul_monomial(g[k.g], k.t));
    const MacaulayMatrix m = build_matrix_unsigned(rows, ring);
    MacaulayMatrix u;
    switch (opts.reduction) {
      case F4Reduction::lup: u = tropical_lup(m, ring); break;
      case F4Reduction::echelon_leading: u = tropical_row_echelon(m, EchelonMode::leading_only, ring); break;
      case F4Reduction::echelon_full: u = tropical_row_echelon(m, EchelonMode::full, ring); break;
    }

    MatrixStats ms;
    ms.degree = d;
    ms.rows = u.nrows();
    ms.cols = u.ncols();
    for (std::size_t r = 0; r < u.nrows(); ++r) {
      const MatrixRow& row = u.rows[r];
      if (row.is_zero()) {
        ++ms.zero_rows;
        ++out.stats.zero_reductions;
        continue;
      }
      const Monomial& lm = u.columns[row.pivot];
      const bool known = std::any_of(g.begin(), g.end(), [&](const Polynomial& p) { return p.leading_monomial().divides(lm); });
      if (known) continue;
      Polynomial p = row_polynomial(u, r, ring);
      g.push_back(exact ? ring.monic(p) : std::move(p));
      ++ms.new_polys;
      add_pairs(g.size() - 1);
    }
    out.stats.matrices.push_back(ms);
  }
  return finish();
}

}  // namespace tropgb
