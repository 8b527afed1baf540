#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace tropgb {

inline constexpr std::size_t kMaxVars = 16;

/// x^u = X_1^{u_1} ... X_n^{u_n} with a fixed-width exponent array.
/// Unused trailing slots stay zero so comparisons never depend on n.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(std::span<const unsigned> exps);

  static Monomial variable(std::size_t i, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Throws std::overflow_error if an exponent exceeds 16 bits.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  bool divides(const Monomial& other) const noexcept;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  /// Plain lexicographic comparison of exponent arrays; a fast total order for
  /// containers, unrelated to any term order.
  friend bool storage_less(const Monomial& a, const Monomial& b) noexcept {
    return a.exp_ < b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct StorageLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return storage_less(a, b); }
};

/// Classical monomial orders usable as the tie-break ≤₁ (and as ≤_m).
enum class MonomialOrderKind { grevlex, lex, glex };

MonomialOrderKind parse_order_kind(std::string_view name);
std::string_view order_name(MonomialOrderKind kind);

/// Three-way comparison under a classical order with X_1 > X_2 > ... > X_n.
int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrderKind kind) noexcept;

std::string format_monomial(const Monomial& m, std::span<const std::string> names);

}  // namespace tropgb
