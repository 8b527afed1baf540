#include "tropgb/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropgb {

Signature signature_of_multiple(const Monomial& t, const Signature& s) {
  return {t * s.mon, s.index, s.sugar + t.degree()};
}

std::string format_signature(const Signature& s, const std::vector<std::string>& names) {
  return format_monomial(s.mon, names) + "*e" + std::to_string(s.index + 1);
}

SyzygyFrontier::SyzygyFrontier(std::size_t nindices) : koszul_(nindices), zero_(nindices) {}

bool SyzygyFrontier::insert(std::size_t index, const Monomial& m, FrontierSource src, unsigned sugar) {
  auto& list = lists(src).at(index);
  for (const auto& e : list) {
    if (e.mon.divides(m)) return false;
  }
  std::erase_if(list, [&](const Entry& e) { return m.divides(e.mon); });
  list.push_back({m, sugar});
  return true;
}

bool SyzygyFrontier::contains(std::size_t index, const Monomial& m, FrontierSource src) const {
  const auto& list = lists(src).at(index);
  return std::any_of(list.begin(), list.end(), [&](const Entry& e) { return e.mon.divides(m); });
}

bool SyzygyFrontier::contains(std::size_t index, const Monomial& m) const {
  return contains(index, m, FrontierSource::koszul) || contains(index, m, FrontierSource::zero_reduction);
}

const std::vector<SyzygyFrontier::Entry>& SyzygyFrontier::entries(std::size_t index, FrontierSource src) const {
  return lists(src).at(index);
}

SignatureOrderContext::SignatureOrderContext(std::vector<unsigned> generator_degrees, SignatureMode mode,
                                             MonomialOrderKind m_order, TropicalOrder term_order)
    : degrees_(std::move(generator_degrees)),
      mode_(mode),
      m_order_(m_order),
      term_order_(std::move(term_order)),
      frontier_(degrees_.size()),
      retired_(degrees_.size(), false),
      previous_(degrees_.size()) {}

bool SignatureOrderContext::divisible_by_previous(std::size_t index, const Monomial& m) const {
  const auto& lms = previous_.at(index);
  return std::any_of(lms.begin(), lms.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool SignatureOrderContext::in_split_set(const Signature& s) const {
  if (mode_ == SignatureMode::incr) return divisible_by_previous(s.index, s.mon);
  return frontier_.contains(s.index, s.mon);
}

int SignatureOrderContext::compare(const Signature& a, const Signature& b) const {
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  if (a.sugar != b.sugar) return a.sugar < b.sugar ? -1 : 1;
  if (a.mon == b.mon) return 0;
  const bool ma = in_split_set(a);
  const bool mb = in_split_set(b);
  if (ma != mb) return ma ? 1 : -1;
  if (mode_ == SignatureMode::incr) return term_order_.compare_monomials(a.mon, b.mon);
  // ≤_m refined by the weight vector; plain ≤_m when w = 0.
  const std::int64_t ka = term_order_.weight_key(a.mon);
  const std::int64_t kb = term_order_.weight_key(b.mon);
  if (ka != kb) return ka > kb ? -1 : 1;
  return compare_monomials(a.mon, b.mon, m_order_);
}

bool SignatureOrderContext::eliminated(const Signature& s, unsigned /*d*/) const {
  if (retired_.at(s.index)) return true;
  if (mode_ == SignatureMode::incr) {
    return divisible_by_previous(s.index, s.mon) ||
           frontier_.contains(s.index, s.mon, FrontierSource::zero_reduction);
  }
  return frontier_.contains(s.index, s.mon);
}

bool SignatureOrderContext::record_basis_lm(const LabeledPolynomial& g) {
  if (mode_ == SignatureMode::incr || g.poly.is_zero()) return false;
  const Monomial& lm = g.poly.leading_monomial();
  if (g.sig.sugar > lm.degree()) return false;
  bool changed = false;
  for (std::size_t i = g.sig.index + 1; i < degrees_.size(); ++i) {
    changed |= frontier_.insert(i, lm, FrontierSource::koszul, g.sig.sugar);
  }
  return changed;
}

bool SignatureOrderContext::record_zero_reduction(const Signature& s) {
  return frontier_.insert(s.index, s.mon, FrontierSource::zero_reduction, s.sugar);
}

void SignatureOrderContext::retire(std::size_t index) { retired_.at(index) = true; }

void SignatureOrderContext::set_previous_lms(std::size_t index, std::vector<Monomial> lms) {
  previous_.at(index) = minimal_monomials(std::move(lms));
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> mons) {
  std::vector<Monomial> out;
  for (const auto& m : mons) {
    if (std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); })) continue;
    std::erase_if(out, [&](const Monomial& o) { return m.divides(o); });
    out.push_back(m);
  }
  return out;
}

}  // namespace tropgb
