#pragma once

#include "tropgb/monomial.hpp"
#include "tropgb/valuation.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tropgb {

/// Tropical term order: a·x^α < b·x^β iff
///   |α| < |β|, or
///   |α| = |β| and val(a) + w·α > val(b) + w·β, or
///   both equal and x^α <₁ x^β.
/// Weights are rational; internally they are scaled by a common denominator
/// so every comparison is an exact integer comparison.
class TropicalOrder {
 public:
  TropicalOrder() = default;
  TropicalOrder(std::vector<mpq_class> weights, MonomialOrderKind tiebreak);

  static TropicalOrder zero_weights(std::size_t nvars, MonomialOrderKind tiebreak = MonomialOrderKind::grevlex);

  std::size_t nvars() const noexcept { return weights_.size(); }
  const std::vector<mpq_class>& weights() const noexcept { return weights_; }
  MonomialOrderKind tiebreak() const noexcept { return tiebreak_; }

  /// W·(w·α) where W is the common denominator of the weights.
  std::int64_t weight_key(const Monomial& m) const;
  /// W·val + W·(w·α); smaller keys are greater terms at equal degree.
  std::int64_t term_key(std::int64_t val, const Monomial& m) const;
  std::int64_t scale() const noexcept { return scale_; }

  /// Order on bare monomials (valuation 0 coefficients): degree, weight, ≤₁.
  /// This is the column order of Macaulay matrices.
  int compare_monomials(const Monomial& a, const Monomial& b) const noexcept;

  /// Three-way comparison of nonzero terms given their valuations.
  /// Returns 0 exactly for the equal class: same monomial, same valuation.
  int compare_terms(std::int64_t val_a, const Monomial& a, std::int64_t val_b, const Monomial& b) const noexcept;

  /// The tie-break ≤₁ alone.
  int compare_monomials_classical(const Monomial& a, const Monomial& b) const noexcept;

 private:
  std::vector<mpq_class> weights_;
  std::vector<std::int64_t> scaled_;
  std::int64_t scale_ = 1;
  MonomialOrderKind tiebreak_ = MonomialOrderKind::grevlex;
};

/// A nonzero term with its cached coefficient valuation.
struct Term {
  Monomial mon;
  Coeff coef;
  std::int64_t val = 0;
};

/// Terms sorted strictly descending under the ring's tropical term order.
/// Only PolyRing builds nonzero polynomials, which keeps the invariant.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mon; }
  const Coeff& leading_coefficient() const { return leading_term().coef; }

  /// Maximal monomial degree; 0 for the zero polynomial.
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mon.degree(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class PolyRing;
  std::vector<Term> terms_;
};

struct SPolynomial {
  Term u1;  // lcm / LT(g1)
  Term u2;  // lcm / LT(g2)
  Polynomial s;
};

/// Ambient ring Q[X_1..X_n] with a valuation and a tropical term order.
class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(std::vector<std::string> names, TropicalOrder order, CoeffField field);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const TropicalOrder& order() const noexcept { return order_; }
  const CoeffField& field() const noexcept { return field_; }
  const ValuationContext& valuation_context() const noexcept { return field_.valuation_context(); }

  Term make_term(Coeff c, Monomial m) const;
  int compare_terms(const Term& a, const Term& b) const noexcept {
    return order_.compare_terms(a.val, a.mon, b.val, b.mon);
  }

  /// Combines duplicate monomials, drops zeros and sorts.
  Polynomial make(std::vector<Term> terms) const;
  Polynomial constant(const mpq_class& c) const;
  Polynomial variable(std::size_t i) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(const Polynomial& f, const Coeff& c) const;
  /// f · c·x^m. Tropical orders are multiplicative, so no re-sort is needed.
  Polynomial mul_term(const Polynomial& f, const Coeff& c, const Monomial& m) const;
  Polynomial mul_monomial(const Polynomial& f, const Monomial& m) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  /// Divides by the leading coefficient.
  Polynomial monic(const Polynomial& f) const;

  /// Spol(g1, g2) = u1·g1 - u2·g2 with u_i = lcm(LM g1, LM g2) / LT(g_i).
  SPolynomial spol(const Polynomial& g1, const Polynomial& g2) const;

  /// Invariant check: strictly descending, no zeros, cached valuations valid.
  bool well_formed(const Polynomial& f) const;

 private:
  void sort_terms(std::vector<Term>& terms) const;

  std::vector<std::string> names_;
  TropicalOrder order_;
  CoeffField field_;
};

}  // namespace tropgb
