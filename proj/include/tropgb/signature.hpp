#pragma once

#include "tropgb/polynomial.hpp"

#include <string>
#include <vector>

namespace tropgb {

/// Module monomial x^α·e_i with its cached sugar-degree |x^α f_i|.
/// Indices are 0-based; text output shows them 1-based.
struct Signature {
  Monomial mon;
  std::size_t index = 0;
  unsigned sugar = 0;

  friend bool operator==(const Signature& a, const Signature& b) noexcept {
    return a.index == b.index && a.mon == b.mon;
  }
};

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept { return s.mon.hash() * 31 + s.index; }
};

/// t·S, with sugar deg(t) + sugar(S).
Signature signature_of_multiple(const Monomial& t, const Signature& s);

/// "<mon>*e<i>" with a 1-based index.
std::string format_signature(const Signature& s, const std::vector<std::string>& names);

/// Polynomial with a guessed or certified signature.
struct LabeledPolynomial {
  Polynomial poly;
  Signature sig;
  bool certified = false;
};

enum class FrontierSource { koszul, zero_reduction };

/// Per-index antichains of monomials known to be leading monomials of tame
/// syzygies. Koszul-derived entries and zero-reduction entries are kept apart
/// so each kind can be queried alone.
class SyzygyFrontier {
 public:
  struct Entry {
    Monomial mon;
    unsigned sugar = 0;
  };

  SyzygyFrontier() = default;
  explicit SyzygyFrontier(std::size_t nindices);

  std::size_t nindices() const noexcept { return koszul_.size(); }

  /// Inserts unless already covered by a divisor of the same source; drops
  /// multiples it now covers. Returns whether the frontier changed.
  bool insert(std::size_t index, const Monomial& m, FrontierSource src, unsigned sugar = 0);

  bool contains(std::size_t index, const Monomial& m) const;
  bool contains(std::size_t index, const Monomial& m, FrontierSource src) const;

  const std::vector<Entry>& entries(std::size_t index, FrontierSource src) const;

 private:
  std::vector<std::vector<Entry>>& lists(FrontierSource src) {
    return src == FrontierSource::koszul ? koszul_ : zero_;
  }
  const std::vector<std::vector<Entry>>& lists(FrontierSource src) const {
    return src == FrontierSource::koszul ? koszul_ : zero_;
  }

  std::vector<std::vector<Entry>> koszul_;
  std::vector<std::vector<Entry>> zero_;
};

enum class SignatureMode { sign, incr };

/// Everything needed to compare signatures: generator degrees, the mode,
/// ≤_m, the syzygy frontier and, in incr mode, the sets LM(I_{i-1}).
class SignatureOrderContext {
 public:
  SignatureOrderContext() = default;
  SignatureOrderContext(std::vector<unsigned> generator_degrees, SignatureMode mode,
                        MonomialOrderKind m_order = MonomialOrderKind::grevlex,
                        TropicalOrder term_order = {});

  SignatureMode mode() const noexcept { return mode_; }
  std::size_t ngenerators() const noexcept { return degrees_.size(); }
  unsigned generator_degree(std::size_t i) const { return degrees_.at(i); }
  MonomialOrderKind m_order() const noexcept { return m_order_; }

  unsigned sugar_degree(const Monomial& mon, std::size_t index) const { return mon.degree() + degrees_.at(index); }
  Signature signature(const Monomial& mon, std::size_t index) const { return {mon, index, sugar_degree(mon, index)}; }

  /// Monomial membership used by the third level of the cascade:
  /// LM(TSyz(F)) in sign mode, LM(I_{i-1}) in incr mode.
  bool in_split_set(const Signature& s) const;

  /// Three-way comparison under ≤_sign or ≤_incr.
  int compare(const Signature& a, const Signature& b) const;
  bool less(const Signature& a, const Signature& b) const { return compare(a, b) < 0; }

  /// F5 elimination test for a signature at sugar-degree d ≥ sugar(s).
  bool eliminated(const Signature& s, unsigned d) const;

  /// Feeds LM(g) of a basis element with index j into the frontier of every
  /// index i > j. Only entries satisfying |S(g)| ≤ |LM(g)| are kept, which for
  /// sugar ≥ degree means no degree fall. Returns whether anything was added.
  bool record_basis_lm(const LabeledPolynomial& g);
  /// Records the signature of a row that reduced to zero.
  bool record_zero_reduction(const Signature& s);

  /// Index i is never used again (its generator reduced to zero).
  void retire(std::size_t index);
  bool retired(std::size_t index) const { return retired_.at(index); }

  /// incr mode: minimal generators of LM(I_{i-1}) for the run on index i.
  void set_previous_lms(std::size_t index, std::vector<Monomial> lms);
  const std::vector<Monomial>& previous_lms(std::size_t index) const { return previous_.at(index); }

  const SyzygyFrontier& frontier() const noexcept { return frontier_; }

 private:
  bool divisible_by_previous(std::size_t index, const Monomial& m) const;

  std::vector<unsigned> degrees_;
  SignatureMode mode_ = SignatureMode::sign;
  MonomialOrderKind m_order_ = MonomialOrderKind::grevlex;
  TropicalOrder term_order_;
  SyzygyFrontier frontier_;
  std::vector<bool> retired_;
  std::vector<std::vector<Monomial>> previous_;
};

/// Keeps only minimal elements under divisibility, in first-seen order.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> mons);

}  // namespace tropgb
