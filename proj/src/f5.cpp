#include "tropgb/f5.hpp"

#include "tropgb/postprocess.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tropgb {

void F5Stats::merge(const F5Stats& o) {
  matrices.insert(matrices.end(), o.matrices.begin(), o.matrices.end());
  zero_reductions += o.zero_reductions;
  koszul_zero_reductions += o.koszul_zero_reductions;
  pairs_created += o.pairs_created;
  pairs_equal_signature += o.pairs_equal_signature;
  pairs_eliminated += o.pairs_eliminated;
  rewritten_substitutions += o.rewritten_substitutions;
  reducer_rows += o.reducer_rows;
  retired_generators += o.retired_generators;
  seconds += o.seconds;
  degree_truncated = degree_truncated || o.degree_truncated;
  certificate_stop = certificate_stop || o.certificate_stop;
  max_sugar = std::max(max_sugar, o.max_sugar);
}

std::vector<Polynomial> F5Result::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.poly);
  return out;
}

bool is_admissible(const CriticalPair& pair, unsigned d, const SignatureOrderContext& ctx, bool use_criterion,
                   std::size_t min_index) {
  if (pair.sig1 == pair.sig2) return false;
  if (!use_criterion) return true;
  if (pair.sig1.index >= min_index && ctx.eliminated(pair.sig1, d)) return false;
  if (pair.sig2.index >= min_index && ctx.eliminated(pair.sig2, d)) return false;
  return true;
}

std::vector<CriticalPair> make_pairs(std::size_t fresh, const std::vector<LabeledPolynomial>& g, const PolyRing& ring,
                                     std::size_t sugar_from, std::size_t* dropped_equal) {
  std::vector<CriticalPair> out;
  const LabeledPolynomial& a = g.at(fresh);
  const Term& lta = a.poly.leading_term();
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (j == fresh) continue;
    const LabeledPolynomial& b = g[j];
    const Term& ltb = b.poly.leading_term();
    CriticalPair cp;
    cp.g1 = fresh;
    cp.g2 = j;
    cp.lcm = lcm(lta.mon, ltb.mon);
    cp.u1 = ring.make_term(Coeff{1 / lta.coef.value}, cp.lcm / lta.mon);
    cp.u2 = ring.make_term(Coeff{1 / ltb.coef.value}, cp.lcm / ltb.mon);
    cp.sig1 = signature_of_multiple(cp.u1.mon, a.sig);
    cp.sig2 = signature_of_multiple(cp.u2.mon, b.sig);
    if (cp.sig1 == cp.sig2) {
      if (dropped_equal) ++*dropped_equal;
      continue;
    }
    const bool q1 = cp.sig1.index >= sugar_from;
    const bool q2 = cp.sig2.index >= sugar_from;
    if (q1 && !q2) {
      cp.sugar = cp.sig1.sugar;
    } else if (q2 && !q1) {
      cp.sugar = cp.sig2.sugar;
    } else {
      cp.sugar = std::max(cp.sig1.sugar, cp.sig2.sugar);
    }
    cp.sugar = std::max(cp.sugar, cp.lcm.degree());
    out.push_back(std::move(cp));
  }
  return out;
}

PreprocessResult symbolic_preprocessing(const std::vector<Product>& p, const std::vector<LabeledPolynomial>& g,
                                        unsigned d, const SignatureOrderContext& ctx, const PolyRing& ring,
                                        const PreprocessOptions& opts) {
  PreprocessResult out;
  std::vector<std::pair<Signature, Polynomial>> rows;
  std::unordered_set<Signature, SignatureHash> sigs;

  const TropicalOrder& ord = ring.order();
  auto desc = [&ord](const Monomial& a, const Monomial& b) { return ord.compare_monomials(a, b) > 0; };
  std::set<Monomial, decltype(desc)> todo(desc);
  std::unordered_set<Monomial, MonomialHash> seen;
  auto add_monomials = [&](const Polynomial& f) {
    for (const auto& t : f.terms()) {
      if (seen.insert(t.mon).second) todo.insert(t.mon);
    }
  };

  for (const auto& q : p) {
    std::size_t src = q.source;
    Monomial t = q.t;
    if (opts.rewritten && src != kNoSource) {
      for (std::size_t k = g.size(); k-- > 0;) {
        const Signature& s = g[k].sig;
        if (s.index == q.sig.index && s.mon.divides(q.sig.mon)) {
          if (k != src) ++out.rewritten_substitutions;
          src = k;
          t = q.sig.mon / s.mon;
          break;
        }
      }
    }
    if (!sigs.insert(q.sig).second) {
      ++out.duplicates;
      continue;
    }
    Polynomial poly = src == kNoSource ? q.poly : ring.mul_monomial(g[src].poly, t);
    add_monomials(poly);
    rows.emplace_back(q.sig, std::move(poly));
  }

  while (!todo.empty()) {
    const Monomial m = *todo.begin();
    todo.erase(todo.begin());
    std::size_t best = kNoSource;
    Signature best_sig;
    Monomial best_delta;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const Monomial& lm = g[k].poly.leading_monomial();
      if (!lm.divides(m)) continue;
      const Monomial delta = m / lm;
      const Signature s = signature_of_multiple(delta, g[k].sig);
      const bool exempt = g[k].sig.index < opts.exempt_below;
      if (!exempt && s.sugar > d) continue;
      if (sigs.contains(s)) continue;
      if (!exempt && opts.f5_criterion && ctx.eliminated(s, d)) continue;
      if (best != kNoSource) {
        const int c = ctx.compare(s, best_sig);
        if (c > 0) continue;
        if (c == 0) {
          if (delta.degree() > best_delta.degree()) continue;
          if (delta.degree() == best_delta.degree() && compare_monomials(delta, best_delta, ctx.m_order()) > 0) continue;
        }
      }
      best = k;
      best_sig = s;
      best_delta = delta;
    }
    if (best == kNoSource) continue;
    sigs.insert(best_sig);
    Polynomial poly = ring.mul_monomial(g[best].poly, best_delta);
    add_monomials(poly);
    rows.emplace_back(best_sig, std::move(poly));
    ++out.reducers;
  }

  out.matrix = build_matrix(std::move(rows), ring, ctx);
  return out;
}

F5Engine::F5Engine(const PolyRing& ring, std::vector<Polynomial> generators, F5Options opts, SignatureMode mode)
    : ring_(ring), gens_(std::move(generators)), opts_(opts) {
  std::vector<unsigned> degrees;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0 && gens_[i].degree() < gens_[i - 1].degree()) {
      throw std::invalid_argument("generators must be sorted by increasing degree");
    }
    degrees.push_back(gens_[i].degree());
  }
  ctx_ = SignatureOrderContext(std::move(degrees), mode, opts_.m_order, ring_.order());
}

void F5Engine::add_element(LabeledPolynomial h) {
  if (!ring_.field().tracked()) h.poly = ring_.monic(h.poly);
  const Monomial& lm = h.poly.leading_monomial();
  if (std::none_of(g_.begin(), g_.end(), [&](const LabeledPolynomial& e) { return e.poly.leading_monomial().divides(lm); }))
    ++lm_growth_;
  h.certified = true;
  g_.push_back(std::move(h));
  const std::size_t idx = g_.size() - 1;
  ctx_.record_basis_lm(g_[idx]);
  auto pairs = make_pairs(idx, g_, ring_, exempt_below_, &stats_.pairs_equal_signature);
  stats_.pairs_created += pairs.size();
  for (auto& cp : pairs) queue_.push_back(std::move(cp));
}

void F5Engine::run(std::size_t first, std::size_t last) {
  const auto start = std::chrono::steady_clock::now();
  const bool incr = ctx_.mode() == SignatureMode::incr;
  if (incr) {
    exempt_below_ = first;
    std::vector<Monomial> lms;
    for (const auto& h : g_) lms.push_back(h.poly.leading_monomial());
    for (std::size_t i = first; i < last; ++i) ctx_.set_previous_lms(i, lms);
  }
  std::size_t next = first;
  unsigned d = 0;
  for (;;) {
    const bool have_gen = next < last;
    if (!have_gen && queue_.empty()) break;
    unsigned dn = have_gen ? gens_[next].degree() : std::numeric_limits<unsigned>::max();
    for (const auto& cp : queue_) dn = std::min(dn, cp.sugar);
    d = std::max(d, dn);
    if (opts_.max_degree && d > *opts_.max_degree) {
      stats_.degree_truncated = true;
      break;
    }
    stats_.max_sugar = std::max(stats_.max_sugar, d);

    const std::size_t growth_before = lm_growth_;
    std::vector<Product> prods;
    std::vector<std::size_t> injected;
    while (next < last && gens_[next].degree() <= d) {
      prods.push_back({ctx_.signature(Monomial{}, next), Monomial{}, kNoSource, gens_[next]});
      injected.push_back(next);
      ++next;
    }
    std::vector<CriticalPair> popped;
    std::vector<CriticalPair> kept;
    for (auto& cp : queue_) (cp.sugar <= d ? popped : kept).push_back(std::move(cp));
    queue_ = std::move(kept);
    for (const auto& cp : popped) {
      if (!is_admissible(cp, d, ctx_, opts_.f5_criterion, exempt_below_)) {
        ++stats_.pairs_eliminated;
        continue;
      }
      prods.push_back({cp.sig1, cp.u1.mon, cp.g1, {}});
      prods.push_back({cp.sig2, cp.u2.mon, cp.g2, {}});
    }
    if (prods.empty()) continue;

    PreprocessResult pre =
        symbolic_preprocessing(prods, g_, d, ctx_, ring_, {opts_.rewritten, opts_.f5_criterion, exempt_below_});
    stats_.rewritten_substitutions += pre.rewritten_substitutions;
    stats_.reducer_rows += pre.reducers;
    const MacaulayMatrix u = tropical_lup(pre.matrix, ring_);

    MatrixStats ms;
    ms.degree = d;
    ms.index = incr ? first : 0;
    ms.rows = u.nrows();
    ms.cols = u.ncols();

    auto is_generator_row = [&](const Signature& s) {
      return s.mon.is_one() && std::find(injected.begin(), injected.end(), s.index) != injected.end();
    };
    for (const auto& row : u.rows) {
      if (!row.is_zero()) continue;
      ++ms.zero_rows;
      ++stats_.zero_reductions;
      if (ctx_.frontier().contains(row.sig.index, row.sig.mon, FrontierSource::koszul)) ++stats_.koszul_zero_reductions;
      if (is_generator_row(row.sig)) {
        ctx_.retire(row.sig.index);
        ++stats_.retired_generators;
      } else if (opts_.record_zero_syzygies && row.sig.sugar == d && row.sig.index >= exempt_below_) {
        ctx_.record_zero_reduction(row.sig);
      }
    }
    for (std::size_t r = 0; r < u.nrows(); ++r) {
      const MatrixRow& row = u.rows[r];
      if (row.is_zero()) continue;
      const Monomial& lm = u.columns[row.pivot];
      bool fresh = is_generator_row(row.sig);
      if (!fresh) {
        fresh = true;
        for (const auto& h : g_) {
          const Monomial& hlm = h.poly.leading_monomial();
          if (!hlm.divides(lm)) continue;
          const Signature s = signature_of_multiple(lm / hlm, h.sig);
          if (s.sugar > d && h.sig.index >= exempt_below_) continue;
          if (ctx_.compare(s, row.sig) <= 0) {
            fresh = false;
            break;
          }
        }
      }
      if (!fresh) continue;
      ++ms.new_polys;
      add_element({row_polynomial(u, r, ring_), row.sig, true});
    }
    stats_.matrices.push_back(ms);

    // At most one check per growth of ⟨LM(G)⟩.
    if (opts_.certificate_stop && next == last && !queue_.empty() && lm_growth_ == growth_before &&
        certified_at_ != lm_growth_ && !ring_.field().valuation_context().is_trivial()) {
      certified_at_ = lm_growth_;
      std::vector<Polynomial> polys;
      for (const auto& h : g_) polys.push_back(h.poly);
      const std::vector<Polynomial> gens(gens_.begin(), gens_.begin() + static_cast<std::ptrdiff_t>(last));
      if (is_groebner_basis(polys, gens, ring_)) {
        stats_.certificate_stop = true;
        queue_.clear();
        break;
      }
    }
  }
  stats_.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

F5Result f5(const std::vector<Polynomial>& f, const PolyRing& ring, const F5Options& opts) {
  F5Engine engine(ring, f, opts, SignatureMode::sign);
  engine.run(0, f.size());
  F5Result out;
  out.stats = engine.stats();
  out.basis = engine.take_basis();
  return out;
}

}  // namespace tropgb
