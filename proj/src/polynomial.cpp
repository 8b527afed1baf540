#include "tropgb/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tropgb {

namespace {

std::int64_t checked_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("weight does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

TropicalOrder::TropicalOrder(std::vector<mpq_class> weights, MonomialOrderKind tiebreak)
    : weights_(std::move(weights)), tiebreak_(tiebreak) {
  if (weights_.size() > kMaxVars) throw std::invalid_argument("too many variables");
  mpz_class den = 1;
  for (auto& w : weights_) {
    w.canonicalize();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
  }
  scale_ = checked_int64(den);
  scaled_.reserve(weights_.size());
  for (const auto& w : weights_) {
    mpq_class s = w * den;
    scaled_.push_back(checked_int64(s.get_num()));
  }
}

TropicalOrder TropicalOrder::zero_weights(std::size_t nvars, MonomialOrderKind tiebreak) {
  return TropicalOrder(std::vector<mpq_class>(nvars, mpq_class(0)), tiebreak);
}

std::int64_t TropicalOrder::weight_key(const Monomial& m) const {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < scaled_.size(); ++i) k += scaled_[i] * static_cast<std::int64_t>(m[i]);
  return k;
}

std::int64_t TropicalOrder::term_key(std::int64_t val, const Monomial& m) const {
  return scale_ * val + weight_key(m);
}

int TropicalOrder::compare_monomials(const Monomial& a, const Monomial& b) const noexcept {
  return compare_terms(0, a, 0, b);
}

int TropicalOrder::compare_terms(std::int64_t val_a, const Monomial& a, std::int64_t val_b,
                                 const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const std::int64_t ka = term_key(val_a, a);
  const std::int64_t kb = term_key(val_b, b);
  if (ka != kb) return ka > kb ? -1 : 1;
  return compare_monomials_classical(a, b);
}

int TropicalOrder::compare_monomials_classical(const Monomial& a, const Monomial& b) const noexcept {
  return tropgb::compare_monomials(a, b, tiebreak_);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mon == b.terms_[i].mon) || a.terms_[i].coef.value != b.terms_[i].coef.value) return false;
  }
  return true;
}

PolyRing::PolyRing(std::vector<std::string> names, TropicalOrder order, CoeffField field)
    : names_(std::move(names)), order_(std::move(order)), field_(std::move(field)) {
  if (names_.size() != order_.nvars()) throw std::invalid_argument("weight vector length does not match variable count");
  if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables");
}

Term PolyRing::make_term(Coeff c, Monomial m) const {
  Term t{m, std::move(c), 0};
  t.val = field_.valuation(t.coef);
  return t;
}

void PolyRing::sort_terms(std::vector<Term>& terms) const {
  std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) { return compare_terms(a, b) > 0; });
}

Polynomial PolyRing::make(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return storage_less(a.mon, b.mon); });
  Polynomial out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mon == t.mon) {
      out.terms_.back().coef = field_.add(out.terms_.back().coef, t.coef);
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.coef.is_zero(); });
  for (auto& t : out.terms_) t.val = field_.valuation(t.coef);
  sort_terms(out.terms_);
  return out;
}

Polynomial PolyRing::constant(const mpq_class& c) const {
  std::vector<Term> ts;
  ts.push_back(make_term(Coeff{c}, Monomial{}));
  return make(std::move(ts));
}

Polynomial PolyRing::variable(std::size_t i) const {
  if (i >= nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> ts;
  ts.push_back(make_term(Coeff{1}, Monomial::variable(i)));
  return make(std::move(ts));
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  std::vector<Term> ts;
  ts.reserve(f.size() + g.size());
  ts.insert(ts.end(), f.terms().begin(), f.terms().end());
  ts.insert(ts.end(), g.terms().begin(), g.terms().end());
  return make(std::move(ts));
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const { return add(f, neg(g)); }

Polynomial PolyRing::neg(const Polynomial& f) const {
  Polynomial out = f;
  for (auto& t : out.terms_) t.coef = field_.neg(t.coef);
  return out;
}

Polynomial PolyRing::scale(const Polynomial& f, const Coeff& c) const {
  return mul_term(f, c, Monomial{});
}

Polynomial PolyRing::mul_term(const Polynomial& f, const Coeff& c, const Monomial& m) const {
  Polynomial out;
  if (c.is_zero()) return out;
  out.terms_.reserve(f.size());
  for (const auto& t : f.terms()) {
    Term r{t.mon * m, field_.mul(t.coef, c), 0};
    r.val = field_.valuation(r.coef);
    out.terms_.push_back(std::move(r));
  }
  return out;
}

Polynomial PolyRing::mul_monomial(const Polynomial& f, const Monomial& m) const {
  Polynomial out = f;
  for (auto& t : out.terms_) t.mon = t.mon * m;
  return out;
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  std::vector<Term> ts;
  ts.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) ts.push_back(Term{a.mon * b.mon, field_.mul(a.coef, b.coef), 0});
  }
  return make(std::move(ts));
}

Polynomial PolyRing::monic(const Polynomial& f) const {
  if (f.is_zero()) return f;
  const Coeff lc = f.leading_coefficient();
  Polynomial out;
  out.terms_.reserve(f.size());
  for (const auto& t : f.terms()) {
    Term r{t.mon, field_.div(t.coef, lc), 0};
    r.val = field_.valuation(r.coef);
    out.terms_.push_back(std::move(r));
  }
  return out;
}

SPolynomial PolyRing::spol(const Polynomial& g1, const Polynomial& g2) const {
  const Term& lt1 = g1.leading_term();
  const Term& lt2 = g2.leading_term();
  const Monomial l = lcm(lt1.mon, lt2.mon);
  SPolynomial out;
  out.u1 = make_term(field_.div(Coeff{1}, lt1.coef), l / lt1.mon);
  out.u2 = make_term(field_.div(Coeff{1}, lt2.coef), l / lt2.mon);
  out.s = sub(mul_term(g1, out.u1.coef, out.u1.mon), mul_term(g2, out.u2.coef, out.u2.mon));
  return out;
}

bool PolyRing::well_formed(const Polynomial& f) const {
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    const Term& t = f.terms_[i];
    if (t.coef.is_zero() || t.val != field_.valuation(t.coef)) return false;
    if (i > 0 && compare_terms(f.terms_[i - 1], t) <= 0) return false;
  }
  return true;
}

}  // namespace tropgb
