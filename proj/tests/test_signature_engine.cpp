#include "helpers.hpp"

#include <doctest.h>

using namespace tropgb;
using th::M;
using th::P;

namespace {

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out{Monomial{}};
  for (unsigned k = 0; k < d; ++k) {
    std::vector<Monomial> next = out;
    for (const auto& m : out)
      if (m.degree() == k)
        for (std::size_t i = 0; i < n; ++i) next.push_back(m * Monomial::variable(i));
    out = th::sorted(next);
  }
  return out;
}

struct Row {
  Signature sig;
  Polynomial poly;
};

// Every multiple x^a f_i with sugar <= d, sorted by the context's signature order.
std::vector<Row> macaulay_rows(const std::vector<Polynomial>& f, const PolyRing& ring, const SignatureOrderContext& ctx,
                               unsigned d) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].degree() > d) continue;
    for (const auto& m : monomials_up_to(ring.nvars(), d - f[i].degree()))
      rows.push_back({ctx.signature(m, i), ring.mul_monomial(f[i], m)});
  }
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) { return ctx.less(a.sig, b.sig); });
  return rows;
}

// Checks that each eliminated row lies in the span of the rows of strictly
// smaller signature. Returns the number of eliminated signatures checked.
std::size_t check_elimination(const std::vector<Polynomial>& f, const PolyRing& ring, const SignatureOrderContext& ctx,
                              unsigned dmax) {
  std::size_t checked = 0;
  for (unsigned d = 1; d <= dmax; ++d) {
    th::SpanOracle span;
    for (const auto& row : macaulay_rows(f, ring, ctx, d)) {
      if (row.sig.sugar == d && ctx.eliminated(row.sig, d)) {
        ++checked;
        INFO("signature " << format_signature(row.sig, ring.names()) << " at degree " << d);
        CHECK(span.contains(row.poly));
      }
      span.insert(row.poly);
    }
  }
  return checked;
}

}  // namespace

TEST_CASE("sugar degree") {
  const SignatureOrderContext ctx({2, 1}, SignatureMode::sign);
  CHECK(ctx.sugar_degree(Monomial{1, 1}, 0) == 4);
  CHECK(ctx.sugar_degree(Monomial{}, 1) == 1);
  CHECK(ctx.sugar_degree(Monomial{3, 0}, 1) == 4);
  CHECK(ctx.signature(Monomial{3, 0}, 1).sugar == 4);
}

TEST_CASE("sign_cmp examples") {
  SignatureOrderContext ctx({1, 1}, SignatureMode::sign);
  CHECK(ctx.less(ctx.signature({}, 0), ctx.signature({}, 1)));
  CHECK(ctx.less(ctx.signature({0, 1}, 0), ctx.signature({1, 0}, 0)));
  const SignatureOrderContext c2({2}, SignatureMode::sign);
  CHECK(c2.less(c2.signature({1, 0}, 0), c2.signature({0, 2}, 0)));
  CHECK(c2.compare(c2.signature({1, 0}, 0), c2.signature({1, 0}, 0)) == 0);
}

TEST_CASE("syzygy members come after non-members at equal sugar") {
  const PolyRing r = th::xy2();
  SignatureOrderContext ctx({1, 1}, SignatureMode::sign);
  // Record LM = y for index 0: y e_2 becomes a member, x e_2 does not.
  ctx.record_basis_lm({P(r, "y"), ctx.signature({}, 0), true});
  const Signature xe2 = ctx.signature({1, 0}, 1), ye2 = ctx.signature({0, 1}, 1);
  CHECK(ctx.in_split_set(ye2));
  CHECK_FALSE(ctx.in_split_set(xe2));
  // Without the split, grevlex puts y e_2 below x e_2.
  CHECK(ctx.less(xe2, ye2));
}

TEST_CASE("f5_eliminated examples") {
  const PolyRing r = th::xy2();
  SignatureOrderContext ctx({1, 1}, SignatureMode::sign);
  CHECK_FALSE(ctx.eliminated(ctx.signature({}, 0), 1));
  CHECK_FALSE(ctx.eliminated(ctx.signature({1, 0}, 1), 2));
  ctx.record_basis_lm({P(r, "x + y"), ctx.signature({}, 0), true});
  CHECK(ctx.eliminated(ctx.signature({1, 0}, 1), 2));
  CHECK(ctx.eliminated(ctx.signature({2, 1}, 1), 3));
  CHECK_FALSE(ctx.eliminated(ctx.signature({0, 1}, 1), 2));
  CHECK_FALSE(ctx.eliminated(ctx.signature({1, 0}, 0), 2));

  // A degree fall (sugar above the degree of LM) is not recorded.
  SignatureOrderContext c2({1, 1, 1}, SignatureMode::sign);
  CHECK_FALSE(c2.record_basis_lm({P(r, "x"), c2.signature({0, 1}, 0), true}));
  CHECK_FALSE(c2.eliminated(c2.signature({1, 0}, 1), 2));

  // Retired indices are eliminated everywhere.
  c2.retire(2);
  CHECK(c2.eliminated(c2.signature({}, 2), 1));
}

TEST_CASE("record_basis_lm and frontier minimality") {
  const PolyRing r = th::make_ring({"x", "y"}, ValuationContext::trivial());
  SignatureOrderContext ctx({1, 2, 2}, SignatureMode::sign);
  CHECK(ctx.record_basis_lm({P(r, "x"), ctx.signature({}, 0), true}));
  CHECK(ctx.frontier().entries(0, FrontierSource::koszul).empty());
  CHECK(ctx.frontier().entries(1, FrontierSource::koszul).size() == 1);
  CHECK(ctx.frontier().entries(2, FrontierSource::koszul).size() == 1);

  SyzygyFrontier fr(1);
  CHECK(fr.insert(0, Monomial{2, 0}, FrontierSource::koszul));
  CHECK(fr.insert(0, Monomial{0, 2}, FrontierSource::koszul));
  CHECK_FALSE(fr.insert(0, Monomial{3, 1}, FrontierSource::koszul));
  CHECK(fr.entries(0, FrontierSource::koszul).size() == 2);
  CHECK(fr.insert(0, Monomial{1, 0}, FrontierSource::koszul));
  CHECK(fr.entries(0, FrontierSource::koszul).size() == 2);
  CHECK(fr.contains(0, Monomial{5, 7}));
  CHECK(fr.contains(0, Monomial{0, 3}));
  CHECK_FALSE(fr.contains(0, Monomial{0, 1}));
  CHECK_FALSE(fr.contains(0, Monomial{0, 3}, FrontierSource::zero_reduction));
  CHECK(fr.insert(0, Monomial{0, 1}, FrontierSource::zero_reduction));
  CHECK(fr.contains(0, Monomial{0, 1}));
}

TEST_CASE("frontier queries are monotone under multiplication") {
  std::mt19937_64 rng(31);
  SyzygyFrontier fr(2);
  for (int k = 0; k < 20; ++k) fr.insert(rng() % 2, th::random_monomial(rng, 3, 4), FrontierSource::koszul);
  for (int k = 0; k < 500; ++k) {
    const std::size_t i = rng() % 2;
    const Monomial m = th::random_monomial(rng, 3, 4), g = th::random_monomial(rng, 3, 3);
    if (fr.contains(i, m)) CHECK(fr.contains(i, m * g));
  }
}

TEST_CASE("signature_of_multiple") {
  const Signature s{Monomial{1, 0}, 1, 3};
  const Signature t = signature_of_multiple(Monomial{0, 1}, s);
  CHECK(t.mon == Monomial{1, 1});
  CHECK(t.index == 1);
  CHECK(t.sugar == 4);
  CHECK(signature_of_multiple(Monomial{}, s) == s);
  CHECK(signature_of_multiple(Monomial{}, s).sugar == 3);
  CHECK(signature_of_multiple(Monomial{2, 0}, s).sugar == 5);
  CHECK(format_signature(t, {"x", "y"}) == "x*y*e2");
  CHECK(format_signature(Signature{Monomial{}, 0, 1}, {"x", "y"}) == "1*e1");
}

TEST_CASE("sign order properties") {
  std::mt19937_64 rng(37);
  const PolyRing r = th::make_ring({"x", "y", "z"}, ValuationContext::trivial());
  SignatureOrderContext ctx({2, 2, 3}, SignatureMode::sign);
  ctx.record_basis_lm({P(r, "x^2 + y*z"), ctx.signature({}, 0), true});
  ctx.record_basis_lm({P(r, "y^3 + z"), ctx.signature({0, 1, 0}, 0), true});
  ctx.record_zero_reduction(ctx.signature({0, 0, 2}, 2));
  auto rand_sig = [&] { return ctx.signature(th::random_monomial(rng, 3, 3), rng() % 3); };
  for (int k = 0; k < 3000; ++k) {
    const Signature a = rand_sig(), b = rand_sig(), c = rand_sig();
    CHECK((ctx.compare(a, b) == 0) == (a == b));
    CHECK(ctx.compare(a, b) == -ctx.compare(b, a));
    if (ctx.less(a, b) && ctx.less(b, c)) CHECK(ctx.less(a, c));
    if (a.index == b.index && ctx.less(a, b)) CHECK(a.sugar <= b.sugar);
    const Monomial g = th::random_monomial(rng, 3, 2);
    const Signature ag = signature_of_multiple(g, a), bg = signature_of_multiple(g, b);
    if (a.index == b.index && ctx.in_split_set(a) == ctx.in_split_set(b) && ctx.in_split_set(ag) == ctx.in_split_set(bg))
      CHECK(ctx.compare(ag, bg) == ctx.compare(a, b));
  }
}

TEST_CASE("incr order uses LM(I_{i-1}) and the term order") {
  const PolyRing r = th::make_ring({"x", "y"}, ValuationContext::padic(2));
  SignatureOrderContext ctx({1, 1}, SignatureMode::incr, MonomialOrderKind::grevlex, r.order());
  ctx.set_previous_lms(1, {Monomial{0, 1}});
  CHECK(ctx.in_split_set(ctx.signature({0, 2}, 1)));
  CHECK_FALSE(ctx.in_split_set(ctx.signature({2, 0}, 1)));
  CHECK(ctx.eliminated(ctx.signature({1, 1}, 1), 3));
  CHECK_FALSE(ctx.eliminated(ctx.signature({1, 0}, 1), 2));
  CHECK(ctx.less(ctx.signature({2, 0}, 1), ctx.signature({1, 1}, 1)));
  // record_basis_lm feeds nothing in incr mode.
  CHECK_FALSE(ctx.record_basis_lm({P(r, "x"), ctx.signature({}, 0), true}));
}

TEST_CASE("eliminated rows lie in the span of smaller rows") {
  std::mt19937_64 rng(41);
  std::size_t total = 0;
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const auto ctxv = trial % 3 == 0 ? ValuationContext::trivial() : ValuationContext::padic(trial % 3 == 1 ? 2 : 3);
    std::vector<mpq_class> w(n, 0);
    if (trial % 4 == 3) w[0] = -1;
    const PolyRing ring = th::make_ring(n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"},
                                        ctxv, w);
    std::vector<Polynomial> f;
    for (std::size_t k = 0; k < n; ++k) f.push_back(th::random_dense(ring, rng, 1 + rng() % 3, 4, trial % 5 == 0));
    f = th::sort_by_degree(f);
    F5Engine engine(ring, f, {}, SignatureMode::sign);
    engine.run(0, f.size());
    const unsigned dmax = std::min(5u, engine.stats().max_sugar + 1);
    total += check_elimination(f, ring, engine.context(), dmax);
  }
  CHECK(total > 0);
}

TEST_CASE("a cancellation of two equal-signature elements has a smaller signature") {
  const PolyRing ring = th::make_ring({"x", "y", "z"}, ValuationContext::padic(2));
  const std::vector<Polynomial> f = th::Ps(ring, {"x^2 + 2*y*z - z", "y^2 - x*z + 4*x", "z^2 + x*y - 2*y"});
  F5Engine engine(ring, f, {}, SignatureMode::sign);
  engine.run(0, f.size());
  const SignatureOrderContext& ctx = engine.context();
  std::size_t tested = 0;
  for (const auto& g : engine.basis()) {
    if (g.sig.mon.is_one()) continue;
    // h = x^a f_i has the same signature as g; a multiple of one cancels the
    // other modulo rows of smaller signature.
    const Polynomial h = ring.mul_monomial(f[g.sig.index], g.sig.mon);
    if (h.leading_monomial() == g.poly.leading_monomial()) continue;
    th::SpanOracle below;
    for (const auto& row : macaulay_rows(f, ring, ctx, g.sig.sugar))
      if (ctx.less(row.sig, g.sig)) below.insert(row.poly);
    const auto rg = below.reduce(th::SpanOracle::vec(g.poly));
    const auto rh = below.reduce(th::SpanOracle::vec(h));
    if (rg.empty()) continue;
    REQUIRE_FALSE(rh.empty());
    const mpq_class c = rg.begin()->second / rh.at(rg.begin()->first);
    const Polynomial comb = ring.sub(g.poly, ring.scale(h, Coeff(c)));
    CHECK(below.contains(comb));
    ++tested;
  }
  CHECK(tested > 0);
}

TEST_CASE("minimal_monomials") {
  const auto m = minimal_monomials({Monomial{2, 1}, Monomial{1, 0}, Monomial{0, 3}, Monomial{3, 0}, Monomial{0, 3}});
  CHECK(m.size() == 2);
  CHECK(m[0] == Monomial{1, 0});
  CHECK(m[1] == Monomial{0, 3});
}
