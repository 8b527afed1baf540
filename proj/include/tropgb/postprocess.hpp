#pragma once

#include "tropgb/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgb {

enum class ReductionMode {
  top,   // stop as soon as the leading term is irreducible
  full,  // remove every reducible monomial
};

/// Reduction modulo a fixed set G by linear algebra.
///
/// For a batch of inputs it collects one reducer t·g for every monomial of
/// ⟨LM(G)⟩ reachable from their supports (g with the smallest LM, then the
/// earliest), brings the reducers to reduced echelon form with pivots at their
/// leading monomials, and eliminates. Plain leading-term division can cycle
/// under tropical orders, e.g. G = {x - 2y, y - 2x} with p = 2.
class LinearReducer {
 public:
  LinearReducer(const PolyRing& ring, std::vector<Polynomial> g);

  std::vector<Polynomial> reduce(const std::vector<Polynomial>& hs, ReductionMode mode) const;
  Polynomial reduce(const Polynomial& h, ReductionMode mode) const;

  /// Full reduction plus cofactors q with h = NF(h) + Σ q_k g_k (exact mode).
  Polynomial reduce_with_cofactors(const Polynomial& h, std::vector<Polynomial>& cofactors) const;

  const std::vector<Polynomial>& basis() const noexcept { return g_; }

 private:
  const PolyRing& ring_;
  std::vector<Polynomial> g_;
};

Polynomial normal_form(const Polynomial& h, const std::vector<Polynomial>& g, const PolyRing& ring,
                       ReductionMode mode = ReductionMode::top);

struct VerifyReport {
  bool ok = true;
  std::string reason;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<std::size_t> witness_generator;
  std::size_t pairs_checked = 0;
};

/// Checks that every S-polynomial of G and every generator of F reduces to zero.
VerifyReport verify_gb(const std::vector<Polynomial>& g, const std::vector<Polynomial>& f, const PolyRing& ring);

/// True iff G is a tropical Gröbner basis of ⟨G⟩ and F ⊂ ⟨G⟩. Only pairs among
/// the elements carrying minimal leading monomials are formed.
bool is_groebner_basis(const std::vector<Polynomial>& g, const std::vector<Polynomial>& f, const PolyRing& ring,
                       std::size_t* pairs_checked = nullptr);

/// Reduced basis {m - NF(m)} over the minimal generators m of ⟨LM(G)⟩, sorted
/// by increasing leading term. G must be a tropical Gröbner basis.
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& g, const PolyRing& ring);

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& g);
/// Leading monomials sorted by storage order, for set comparisons.
std::vector<Monomial> leading_monomial_set(const std::vector<Polynomial>& g);

/// Polynomial under a classical monomial order; terms strictly descending.
struct ClassicalTerm {
  Monomial mon;
  Coeff coef;
};

struct ClassicalPolynomial {
  std::vector<ClassicalTerm> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const Monomial& leading_monomial() const { return terms.at(0).mon; }
  friend bool operator==(const ClassicalPolynomial& a, const ClassicalPolynomial& b);
};

ClassicalPolynomial to_classical(const Polynomial& f, MonomialOrderKind kind);
ClassicalPolynomial make_classical(std::vector<ClassicalTerm> terms, MonomialOrderKind kind);
std::string format_classical(const ClassicalPolynomial& f, const std::vector<std::string>& names);

/// Textbook Buchberger over Q with classical division; returns the reduced
/// monic basis sorted by increasing leading monomial.
std::vector<ClassicalPolynomial> buchberger_oracle(const std::vector<ClassicalPolynomial>& f, MonomialOrderKind kind);

class NotZeroDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monomials outside ⟨LM(G)⟩; throws NotZeroDimensional if there are infinitely many.
struct Staircase {
  std::vector<Monomial> monomials;  // increasing under the ring's monomial order

  static Staircase of(const std::vector<Polynomial>& g, std::size_t nvars);
};

/// FGLM from a tropical Gröbner basis to the reduced lex basis (X_1 > ... > X_n).
/// In tracked mode throws PrecisionError when a pivot cannot be told from zero.
std::vector<ClassicalPolynomial> fglm_to_lex(const std::vector<Polynomial>& g, const PolyRing& ring);

}  // namespace tropgb
