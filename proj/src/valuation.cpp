#include "tropgb/valuation.hpp"

#include <algorithm>
#include <array>

namespace tropgb {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases cover every 64-bit integer.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ValuationContext ValuationContext::padic(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  ValuationContext ctx;
  ctx.prime_ = p;
  ctx.prime_z_ = mpz_class(static_cast<unsigned long>(p));
  return ctx;
}

std::int64_t ValuationContext::valuation(const mpz_class& a) const {
  if (sgn(a) == 0) return kInfinity;
  if (is_trivial()) return 0;
  if (prime_ == 2) return static_cast<std::int64_t>(mpz_scan1(a.get_mpz_t(), 0));
  if (!mpz_divisible_p(a.get_mpz_t(), prime_z_.get_mpz_t())) return 0;
  mpz_class rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime_z_.get_mpz_t()));
}

std::int64_t ValuationContext::valuation(const mpq_class& a) const {
  if (sgn(a) == 0) return kInfinity;
  if (is_trivial()) return 0;
  return valuation(a.get_num()) - valuation(a.get_den());
}

std::string ValuationContext::describe() const {
  return is_trivial() ? "trivial" : "padic " + std::to_string(prime_);
}

Coeff CoeffField::add(const Coeff& a, const Coeff& b) const {
  Coeff r{a.value + b.value};
  if (tracked_) r.prec = std::min(a.prec, b.prec);
  return r;
}

Coeff CoeffField::sub(const Coeff& a, const Coeff& b) const {
  Coeff r{a.value - b.value};
  if (tracked_) r.prec = std::min(a.prec, b.prec);
  return r;
}

Coeff CoeffField::mul(const Coeff& a, const Coeff& b) const {
  Coeff r{a.value * b.value};
  if (tracked_) {
    r.prec = std::min(ext_add(valuation(a), b.prec), ext_add(valuation(b), a.prec));
  }
  return r;
}

Coeff CoeffField::div(const Coeff& a, const Coeff& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Coeff r{a.value / b.value};
  if (tracked_) {
    const std::int64_t vb = valuation(b);
    if (vb >= b.prec) throw PrecisionError("divisor indistinguishable from zero at current precision");
    const std::int64_t va = valuation(a);
    const std::int64_t left = a.prec == kInfinity ? kInfinity : a.prec - vb;
    const std::int64_t right = (b.prec == kInfinity || va == kInfinity) ? kInfinity : b.prec + va - 2 * vb;
    r.prec = std::min(left, right);
  }
  return r;
}

Coeff CoeffField::sub_mul(const Coeff& a, const Coeff& f, const Coeff& b) const {
  if (!tracked_) {
    Coeff r;
    r.value = a.value - f.value * b.value;
    return r;
  }
  return sub(a, mul(f, b));
}

bool CoeffField::indistinguishable_from_zero(const Coeff& a) const {
  if (!tracked_ || a.is_zero()) return false;
  return valuation(a) >= a.prec;
}

std::int64_t precision_loss(std::int64_t input_precision, const Coeff& output) {
  if (output.prec == kInfinity || input_precision == kInfinity) return 0;
  return std::max<std::int64_t>(0, input_precision - output.prec);
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace tropgb
