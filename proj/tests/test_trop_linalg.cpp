#include "helpers.hpp"

#include <doctest.h>

using namespace tropgb;
using th::P;

namespace {

std::vector<Polynomial> row_polys(const MacaulayMatrix& m, const PolyRing& ring) {
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < m.nrows(); ++r) out.push_back(row_polynomial(m, r, ring));
  return out;
}

std::vector<Monomial> nonzero_lms(const MacaulayMatrix& m, const PolyRing& ring) {
  std::vector<Monomial> out;
  for (const auto& p : row_polys(m, ring))
    if (!p.is_zero()) out.push_back(p.leading_monomial());
  std::sort(out.begin(), out.end(), StorageLess{});
  return out;
}

struct Example {
  PolyRing ring = th::xy2();
  SignatureOrderContext ctx{{1, 1}, SignatureMode::sign};
  MacaulayMatrix m = build_matrix({{ctx.signature({}, 0), P(ring, "x + y")}, {ctx.signature({}, 1), P(ring, "2*x + y")}},
                                  ring, ctx);
};

}  // namespace

TEST_CASE("build_matrix") {
  Example ex;
  CHECK(ex.m.nrows() == 2);
  REQUIRE(ex.m.ncols() == 2);
  CHECK(ex.m.columns[0] == Monomial{1, 0});
  CHECK(ex.m.columns[1] == Monomial{0, 1});
  CHECK(matrix_entry(ex.m, 1, 0).value == 2);
  CHECK(matrix_entry(ex.m, 1, 1).value == 1);

  // Rows come out sorted by signature whatever the input order.
  const MacaulayMatrix r = build_matrix({{ex.ctx.signature({}, 1), P(ex.ring, "2*x + y")},
                                         {ex.ctx.signature({}, 0), P(ex.ring, "x + y")}},
                                        ex.ring, ex.ctx);
  CHECK(r.rows[0].sig.index == 0);
  CHECK(row_polynomial(r, 0, ex.ring) == P(ex.ring, "x + y"));

  const MacaulayMatrix one = build_matrix({{ex.ctx.signature({}, 0), P(ex.ring, "x^2 + x*y + 1")}}, ex.ring, ex.ctx);
  CHECK(one.nrows() == 1);
  CHECK(one.ncols() == 3);
  CHECK(build_matrix({}, ex.ring, ex.ctx).nrows() == 0);
  CHECK_THROWS_AS(build_matrix({{ex.ctx.signature({}, 0), P(ex.ring, "x")}, {ex.ctx.signature({}, 0), P(ex.ring, "y")}},
                               ex.ring, ex.ctx),
                  std::invalid_argument);
}

TEST_CASE("columns are sorted by the tropical monomial order") {
  std::mt19937_64 rng(43);
  const PolyRing ring = th::make_ring({"x", "y", "z"}, ValuationContext::padic(3), {1, -1, 0});
  const SignatureOrderContext ctx({1, 1, 1}, SignatureMode::sign);
  for (int k = 0; k < 50; ++k) {
    const MacaulayMatrix m = th::random_matrix(ring, ctx, rng, 8, 12);
    for (std::size_t c = 1; c < m.ncols(); ++c) CHECK(ring.order().compare_monomials(m.columns[c - 1], m.columns[c]) > 0);
    for (std::size_t r = 1; r < m.nrows(); ++r) CHECK(ctx.less(m.rows[r - 1].sig, m.rows[r].sig));
  }
}

TEST_CASE("tropical_lup on the worked example") {
  Example ex;
  const MacaulayMatrix u = tropical_lup(ex.m, ex.ring);
  const Polynomial r0 = row_polynomial(u, 0, ex.ring), r1 = row_polynomial(u, 1, ex.ring);
  CHECK(r0.leading_monomial() == Monomial{1, 0});
  REQUIRE(r1.size() == 1);
  CHECK(r1.leading_monomial() == Monomial{0, 1});
  // The second row is a nonzero multiple of (2x + y) - 2(x + y) = -y.
  CHECK(ex.ring.monic(r1) == ex.ring.monic(P(ex.ring, "-y")));
  CHECK(u.rows[0].pivot == 0);
  CHECK(u.rows[1].pivot == 1);
}

TEST_CASE("tropical_lup edge cases") {
  const PolyRing ring = th::xy2();
  const SignatureOrderContext ctx({1, 1}, SignatureMode::sign);
  const MacaulayMatrix id = build_matrix({{ctx.signature({}, 0), P(ring, "x")}, {ctx.signature({}, 1), P(ring, "y")}}, ring, ctx);
  const MacaulayMatrix u = tropical_lup(id, ring);
  CHECK(row_polynomial(u, 0, ring) == P(ring, "x"));
  CHECK(row_polynomial(u, 1, ring) == P(ring, "y"));

  const MacaulayMatrix dup = build_matrix({{ctx.signature({}, 0), P(ring, "x + 3*y")}, {ctx.signature({}, 1), P(ring, "x + 3*y")}},
                                          ring, ctx);
  const MacaulayMatrix d = tropical_lup(dup, ring);
  CHECK_FALSE(d.rows[0].is_zero());
  CHECK(d.rows[1].is_zero());
  CHECK(d.rows[1].pivot == -1);

  CHECK(tropical_lup(MacaulayMatrix{}, ring).nrows() == 0);
}

TEST_CASE("tropical_lup pivots on the greatest term of each reduced row") {
  std::mt19937_64 rng(47);
  const PolyRing ring = th::make_ring({"x", "y", "z"}, ValuationContext::padic(2), {0, 1, -1});
  const SignatureOrderContext ctx({1, 2}, SignatureMode::sign);
  for (int k = 0; k < 60; ++k) {
    const MacaulayMatrix m = th::random_matrix(ring, ctx, rng, 10, 14);
    const MacaulayMatrix u = tropical_lup(m, ring);
    for (const auto& row : u.rows) {
      if (row.is_zero()) continue;
      CHECK(row.pivot == greatest_term_column(row, u, ring));
    }
    CHECK(is_tropical_row_echelon(u, ring));
  }
}

TEST_CASE("tropical_lup preserves prefix spans on random matrices") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 120; ++k) {
    const bool tracked = k % 3 == 2;
    const auto vctx = k % 4 == 0 ? ValuationContext::trivial() : ValuationContext::padic(k % 2 ? 2 : 5);
    const PolyRing ring = th::make_ring({"x", "y", "z"}, vctx, {}, MonomialOrderKind::grevlex, tracked);
    const SignatureOrderContext ctx({1, 1, 2}, SignatureMode::sign);
    const MacaulayMatrix m = th::random_matrix(ring, ctx, rng, 12, 16);
    std::string why;
    CHECK_MESSAGE(th::lup_contracts_hold(m, tropical_lup(m, ring), ring, &why), why);
  }
}

TEST_CASE("tropical_row_echelon") {
  Example ex;
  for (auto mode : {EchelonMode::full, EchelonMode::leading_only}) {
    const MacaulayMatrix e = tropical_row_echelon(ex.m, mode, ex.ring);
    CHECK(nonzero_lms(e, ex.ring) == th::sorted({Monomial{1, 0}, Monomial{0, 1}}));
  }
  MacaulayMatrix zero;
  zero.columns = {Monomial{1, 0}};
  zero.rows.resize(2);
  const MacaulayMatrix z = tropical_row_echelon(zero, EchelonMode::full, ex.ring);
  CHECK(z.nrows() == 2);
  CHECK(z.rows[0].is_zero());
  CHECK(z.rows[1].is_zero());
}

TEST_CASE("row echelon is independent of row order and preserves the row space") {
  std::mt19937_64 rng(59);
  const PolyRing ring = th::make_ring({"x", "y", "z"}, ValuationContext::padic(3), {0, 0, 1});
  const SignatureOrderContext ctx({1, 1, 1}, SignatureMode::sign);
  for (int k = 0; k < 60; ++k) {
    const MacaulayMatrix m = th::random_matrix(ring, ctx, rng, 9, 12);
    std::vector<Polynomial> rows = row_polys(m, ring);
    std::vector<Polynomial> shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto mode : {EchelonMode::full, EchelonMode::leading_only}) {
      const MacaulayMatrix e1 = tropical_row_echelon(build_matrix_unsigned(rows, ring), mode, ring);
      const MacaulayMatrix e2 = tropical_row_echelon(build_matrix_unsigned(shuffled, ring), mode, ring);
      const auto lms = nonzero_lms(e1, ring);
      CHECK(lms == nonzero_lms(e2, ring));
      CHECK(th::sorted(lms).size() == lms.size());
      th::SpanOracle a, b;
      for (const auto& p : rows) a.insert(p);
      for (const auto& p : row_polys(e1, ring))
        if (!p.is_zero()) CHECK(a.contains(p));
      for (const auto& p : row_polys(e1, ring)) b.insert(p);
      CHECK(a.rank() == b.rank());
      // Each pivot is the greatest term of its final row.
      for (const auto& row : e1.rows)
        if (!row.is_zero()) CHECK(row.pivot == greatest_term_column(row, e1, ring));
      if (mode == EchelonMode::full) {
        // No pivot column appears in another row.
        for (std::size_t i = 0; i < e1.nrows(); ++i) {
          if (e1.rows[i].is_zero()) continue;
          for (std::size_t j = 0; j < e1.nrows(); ++j)
            if (j != i) CHECK(matrix_entry(e1, j, static_cast<std::size_t>(e1.rows[i].pivot)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("the degree-2 matrix of the worked example is not in echelon form") {
  Example ex;
  const Polynomial f1 = P(ex.ring, "x + y"), f2 = P(ex.ring, "2*x + y");
  const Monomial x{1, 0}, y{0, 1};
  const SignatureOrderContext& ctx = ex.ctx;
  const MacaulayMatrix m = build_matrix({{ctx.signature(x, 0), ex.ring.mul_monomial(f1, x)},
                                         {ctx.signature(y, 0), ex.ring.mul_monomial(f1, y)},
                                         {ctx.signature(x, 1), ex.ring.mul_monomial(f2, x)},
                                         {ctx.signature(y, 1), ex.ring.mul_monomial(f2, y)}},
                                        ex.ring, ctx);
  CHECK(m.nrows() == 4);
  CHECK(m.ncols() == 3);
  CHECK_FALSE(is_tropical_row_echelon(m, ex.ring));
  const MacaulayMatrix u = tropical_lup(m, ex.ring);
  CHECK(is_tropical_row_echelon(u, ex.ring));
  CHECK(nonzero_lms(u, ex.ring) == th::sorted({Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
}

TEST_CASE("extract_new_polynomials") {
  Example ex;
  const MacaulayMatrix u = tropical_lup(ex.m, ex.ring);
  const std::vector<LabeledPolynomial> g = {{P(ex.ring, "x + y"), ex.ctx.signature({}, 0), true}};
  const ExtractResult r = extract_new_polynomials(u, g, ex.ctx, ex.ring, 1);
  REQUIRE(r.fresh.size() == 1);
  CHECK(r.fresh[0].poly.leading_monomial() == Monomial{0, 1});
  CHECK(r.fresh[0].sig.index == 1);
  CHECK(r.zero_rows.empty());
  CHECK(r.nonzero_rows == 2);

  MacaulayMatrix zero = ex.m;
  for (auto& row : zero.rows) row.entries.clear();
  const ExtractResult z = extract_new_polynomials(zero, g, ex.ctx, ex.ring, 1);
  CHECK(z.fresh.empty());
  CHECK(z.zero_rows.size() == 2);
  CHECK(z.nonzero_rows == 0);

  // A row whose LM is x·LM(g) with a larger signature is already reached.
  const MacaulayMatrix m2 = build_matrix({{ex.ctx.signature({1, 0}, 1), P(ex.ring, "x^2 + 2*y^2")}}, ex.ring, ex.ctx);
  CHECK(extract_new_polynomials(tropical_lup(m2, ex.ring), g, ex.ctx, ex.ring, 2).fresh.empty());
}

TEST_CASE("dump_matrix format") {
  Example ex;
  const std::string text = dump_matrix(ex.m, ex.ring);
  CHECK(text.find("sig=1*e1 | x + y") != std::string::npos);
  CHECK(text.find("sig=1*e2 | y + 2*x") != std::string::npos);
  CHECK(text.rfind("columns: x y", 0) == 0);
}
