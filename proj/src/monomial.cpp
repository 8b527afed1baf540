#include "tropgb/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropgb {

namespace {

constexpr unsigned kMaxExponent = 0xFFFF;

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (b.exp_[i] > a.exp_[i]) throw std::invalid_argument("monomial does not divide");
    r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrderKind parse_order_kind(std::string_view name) {
  if (name == "grevlex" || name == "degrevlex") return MonomialOrderKind::grevlex;
  if (name == "lex") return MonomialOrderKind::lex;
  if (name == "glex" || name == "deglex" || name == "graded-lex") return MonomialOrderKind::glex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

std::string_view order_name(MonomialOrderKind kind) {
  switch (kind) {
    case MonomialOrderKind::grevlex: return "grevlex";
    case MonomialOrderKind::lex: return "lex";
    case MonomialOrderKind::glex: return "glex";
  }
  return "grevlex";
}

int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrderKind kind) noexcept {
  if (kind != MonomialOrderKind::lex && a.degree() != b.degree()) {
    return a.degree() < b.degree() ? -1 : 1;
  }
  if (kind == MonomialOrderKind::grevlex) {
    // Smaller exponent in the last differing variable is the larger monomial.
    for (std::size_t i = kMaxVars; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::string format_monomial(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace tropgb
