#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tropgb {

/// Stands for +infinity in valuations and absolute precisions.
inline constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

/// Saturating sum on Z ∪ {+inf}.
constexpr std::int64_t ext_add(std::int64_t a, std::int64_t b) noexcept {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

/// Raised when a tracked-precision value cannot be told apart from zero.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

/// A valuation on Q: either p-adic for a prime p, or trivial.
class ValuationContext {
 public:
  static ValuationContext trivial() { return ValuationContext{}; }
  static ValuationContext padic(std::uint64_t p);

  bool is_trivial() const noexcept { return prime_ == 0; }
  std::uint64_t prime() const noexcept { return prime_; }

  /// v(num) - v(den) for p-adic, 0 for trivial; kInfinity for zero.
  std::int64_t valuation(const mpq_class& a) const;
  std::int64_t valuation(const mpz_class& a) const;

  std::string describe() const;

  friend bool operator==(const ValuationContext& a, const ValuationContext& b) {
    return a.prime_ == b.prime_;
  }

 private:
  std::uint64_t prime_ = 0;
  mpz_class prime_z_;
};

/// Exact rational, plus an absolute precision N meaning "known modulo p^N".
/// Exact elements carry prec == kInfinity.
struct Coeff {
  mpq_class value;
  std::int64_t prec = kInfinity;

  Coeff() = default;
  Coeff(mpq_class v, std::int64_t p = kInfinity) : value(std::move(v)), prec(p) {
    value.canonicalize();
  }
  bool is_zero() const { return sgn(value) == 0; }
  bool is_exact() const { return prec == kInfinity; }
};

/// Coefficient arithmetic over Q with a valuation.
///
/// In tracked mode precision is propagated with the zealous absolute model:
///   a + b : min(N_a, N_b)
///   a * b : min(v(a) + N_b, v(b) + N_a)
///   a / b : min(N_a - v(b), N_b + v(a) - 2 v(b))
/// Values stay exact; precision is metadata only.
class CoeffField {
 public:
  CoeffField() = default;
  explicit CoeffField(ValuationContext ctx, bool tracked = false)
      : ctx_(std::move(ctx)), tracked_(tracked && !ctx_.is_trivial()) {}

  const ValuationContext& valuation_context() const noexcept { return ctx_; }
  bool tracked() const noexcept { return tracked_; }

  std::int64_t valuation(const Coeff& a) const { return ctx_.valuation(a.value); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const { return Coeff{-a.value, a.prec}; }

  /// a - f*b without materialising f*b twice.
  Coeff sub_mul(const Coeff& a, const Coeff& f, const Coeff& b) const;

  /// Tracked mode: nonzero value whose valuation reaches its precision.
  bool indistinguishable_from_zero(const Coeff& a) const;

 private:
  ValuationContext ctx_;
  bool tracked_ = false;
};

/// m = N - prec(output), clamped at 0; 0 for exact outputs.
std::int64_t precision_loss(std::int64_t input_precision, const Coeff& output);

std::string to_string(const mpq_class& q);

}  // namespace tropgb
