#include "tropgb/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace tropgb {

namespace {

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += t;
  }
  return out;
}

std::vector<mpq_class> zeros(std::size_t n) { return std::vector<mpq_class>(n, mpq_class(0)); }

void exponents_up_to(unsigned nvars, unsigned d, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= d; ++e) {
    cur.push_back(e);
    exponents_up_to(nvars, d - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SystemSpec gen_katsura(unsigned n) {
  if (n < 1) throw std::invalid_argument("katsura needs n >= 1");
  SystemSpec s;
  s.ctx = ValuationContext::trivial();
  for (unsigned i = 0; i <= n; ++i) s.vars.push_back("u" + std::to_string(i));
  s.weights = zeros(n + 1);
  std::vector<std::string> lin{"u0"};
  for (unsigned i = 1; i <= n; ++i) lin.push_back("2*u" + std::to_string(i));
  s.polys.push_back(join_terms(lin) + " - 1");
  const int ni = static_cast<int>(n);
  for (int m = 0; m < ni; ++m) {
    std::vector<std::string> terms;
    for (int l = -ni; l <= ni; ++l) {
      const int a = std::abs(l);
      const int b = std::abs(m - l);
      if (b > ni) continue;
      terms.push_back("u" + std::to_string(a) + "*u" + std::to_string(b));
    }
    s.polys.push_back(join_terms(terms) + " - u" + std::to_string(m));
  }
  return s;
}

SystemSpec gen_cyclic(unsigned n) {
  if (n < 2) throw std::invalid_argument("cyclic needs n >= 2");
  SystemSpec s;
  s.ctx = ValuationContext::trivial();
  for (unsigned i = 1; i <= n; ++i) s.vars.push_back("x" + std::to_string(i));
  s.weights = zeros(n);
  for (unsigned k = 1; k < n; ++k) {
    std::vector<std::string> terms;
    for (unsigned i = 0; i < n; ++i) {
      std::string t;
      for (unsigned j = 0; j < k; ++j) {
        if (j) t += "*";
        t += s.vars[(i + j) % n];
      }
      terms.push_back(t);
    }
    s.polys.push_back(join_terms(terms));
  }
  std::string prod;
  for (unsigned i = 0; i < n; ++i) prod += (i ? "*" : "") + s.vars[i];
  s.polys.push_back(prod + " - 1");
  return s;
}

SystemSpec gen_random_padic(const std::vector<unsigned>& degrees, std::uint64_t p, std::int64_t precision,
                            std::uint64_t seed) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (precision < 1) throw std::invalid_argument("precision must be at least 1");
  if (degrees.empty()) throw std::invalid_argument("need at least one degree");
  SystemSpec s;
  s.ctx = ValuationContext::padic(p);
  const auto nvars = static_cast<unsigned>(degrees.size());
  for (unsigned i = 1; i <= nvars; ++i) s.vars.push_back("x" + std::to_string(i));
  s.weights = zeros(nvars);
  s.precision = precision;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> digit(0, p - 1);
  const mpz_class pz(std::to_string(p));
  for (unsigned d : degrees) {
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur;
    exponents_up_to(nvars, d, cur, exps);
    std::vector<std::string> terms;
    for (const auto& e : exps) {
      // Base-p digits, least significant first.
      mpz_class c = 0;
      mpz_class scale = 1;
      for (std::int64_t k = 0; k < precision; ++k) {
        c += scale * mpz_class(std::to_string(digit(rng)));
        scale *= pz;
      }
      if (c == 0) continue;
      std::string t = c.get_str();
      for (unsigned i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        t += "*" + s.vars[i];
        if (e[i] > 1) t += "^" + std::to_string(e[i]);
      }
      terms.push_back(t);
    }
    s.polys.push_back(terms.empty() ? "0" : join_terms(terms));
  }
  return s;
}

std::vector<mpq_class> weight_preset(WeightPreset preset, std::size_t nvars) {
  std::vector<mpq_class> w = zeros(nvars);
  if (preset == WeightPreset::alternating) {
    mpq_class v = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
      w[i] = v;
      v *= -2;
    }
  }
  return w;
}

WeightPreset parse_weight_preset(std::string_view name) {
  if (name == "zero") return WeightPreset::zero;
  if (name == "alt") return WeightPreset::alternating;
  throw std::invalid_argument("unknown weight preset '" + std::string(name) + "' (expected zero or alt)");
}

SystemSpec with_field(SystemSpec spec, const ValuationContext& ctx, std::vector<mpq_class> weights,
                      std::optional<std::int64_t> precision) {
  spec.ctx = ctx;
  spec.weights = std::move(weights);
  spec.precision = precision;
  return spec;
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "f5") return Algorithm::f5;
  if (name == "f5it") return Algorithm::f5it;
  if (name == "f4") return Algorithm::f4;
  if (name == "buchberger") return Algorithm::buchberger;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::f5: return "f5";
    case Algorithm::f5it: return "f5it";
    case Algorithm::f4: return "f4";
    case Algorithm::buchberger: return "buchberger";
  }
  return "?";
}

LossSummary gb_precision_loss(const std::vector<Polynomial>& g, const PolyRing& ring, std::int64_t precision) {
  LossSummary s;
  double total = 0.0;
  for (const auto& p : g) {
    std::int64_t vmin = kInfinity;
    for (const auto& t : p.terms()) vmin = std::min(vmin, ring.field().valuation(t.coef));
    for (const auto& t : p.terms()) {
      Coeff c = t.coef;
      if (c.prec != kInfinity) c.prec -= vmin;
      const std::int64_t loss = precision_loss(precision, c);
      total += static_cast<double>(loss);
      s.max = std::max(s.max, loss);
      ++s.coefficients;
    }
  }
  if (s.coefficients) s.mean = total / static_cast<double>(s.coefficients);
  return s;
}

LossSummary lex_precision_loss(const std::vector<ClassicalPolynomial>& g, std::int64_t precision) {
  LossSummary s;
  double total = 0.0;
  for (const auto& p : g) {
    for (std::size_t i = 1; i < p.terms.size(); ++i) {
      const std::int64_t loss = precision_loss(precision, p.terms[i].coef);
      total += static_cast<double>(loss);
      s.max = std::max(s.max, loss);
      ++s.coefficients;
    }
  }
  if (s.coefficients) s.mean = total / static_cast<double>(s.coefficients);
  return s;
}

std::vector<Polynomial> compute_basis(const std::vector<Polynomial>& f, const PolyRing& ring,
                                      const ExperimentOptions& opts, F5Stats* stats) {
  F5Result r;
  switch (opts.algo) {
    case Algorithm::f5: r = f5(f, ring, opts.f5); break;
    case Algorithm::f5it: r = iterative_f5(f, ring, opts.f5); break;
    case Algorithm::f4: r = f4(f, ring, {opts.f4_reduction, opts.f5.max_degree}); break;
    case Algorithm::buchberger: {
      // The classical basis is a tropical one only when the two orders agree.
      const bool classical = ring.valuation_context().is_trivial() &&
                             std::all_of(ring.order().weights().begin(), ring.order().weights().end(),
                                         [](const mpq_class& w) { return sgn(w) == 0; });
      if (!classical) throw std::invalid_argument("buchberger needs the trivial valuation and zero weights");
      const auto start = std::chrono::steady_clock::now();
      const MonomialOrderKind kind = ring.order().tiebreak();
      std::vector<ClassicalPolynomial> cf;
      for (const auto& p : f) cf.push_back(to_classical(p, kind));
      std::vector<Polynomial> out;
      for (const auto& c : buchberger_oracle(cf, kind)) {
        std::vector<Term> ts;
        for (const auto& t : c.terms) ts.push_back(ring.make_term(t.coef, t.mon));
        out.push_back(ring.make(std::move(ts)));
      }
      if (stats) stats->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return out;
    }
  }
  if (stats) *stats = r.stats;
  return r.polynomials();
}

ExperimentReport run_experiment(const ParsedSystem& sys, const ExperimentOptions& opts, std::string name) {
  const PolyRing& ring = sys.ring;
  ExperimentReport rep;
  rep.system = std::move(name);
  rep.algo = opts.algo;
  rep.precision = sys.precision;

  const std::vector<Polynomial> g = compute_basis(sys.polys, ring, opts, &rep.stats);
  rep.gb_seconds = rep.stats.seconds;
  rep.basis_size = g.size();
  for (const auto& p : g) rep.basis.push_back(format_polynomial(p, ring));
  std::vector<Monomial> lms = minimal_monomials(leading_monomials(g));
  std::sort(lms.begin(), lms.end(), [&](const Monomial& a, const Monomial& b) { return ring.order().compare_monomials(a, b) < 0; });
  for (const auto& m : lms) rep.leading_monomials.push_back(format_monomial(m, ring.names()));

  if (sys.precision) rep.f5_loss = gb_precision_loss(g, ring, *sys.precision);

  if (opts.verify && !rep.stats.degree_truncated) {
    const VerifyReport v = verify_gb(g, sys.polys, ring);
    rep.verified = v.ok;
    rep.verify_reason = v.reason;
  }
  if (opts.fglm && !rep.stats.degree_truncated) {
    const auto start = std::chrono::steady_clock::now();
    try {
      const std::vector<ClassicalPolynomial> lex = fglm_to_lex(g, ring);
      for (const auto& p : lex) rep.lex_basis.push_back(format_classical(p, ring.names()));
      if (sys.precision) rep.fglm_loss = lex_precision_loss(lex, *sys.precision);
    } catch (const PrecisionError& e) {
      rep.fglm_precision_error = true;
      rep.fglm_error = e.what();
      if (sys.precision) rep.fglm_loss = LossSummary{static_cast<double>(*sys.precision), *sys.precision, 0};
    } catch (const NotZeroDimensional& e) {
      rep.fglm_error = e.what();
    }
    rep.fglm_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return rep;
}

namespace {

nlohmann::json loss_json(const LossSummary& l) {
  return {{"mean", l.mean}, {"max", l.max}, {"coefficients", l.coefficients}};
}

}  // namespace

nlohmann::json to_json(const F5Stats& s, bool include_timing) {
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& m : s.matrices) {
    mats.push_back({{"degree", m.degree}, {"index", m.index}, {"rows", m.rows}, {"cols", m.cols},
                    {"zero_rows", m.zero_rows}, {"new_polys", m.new_polys}});
  }
  nlohmann::json j = {{"matrices", mats},
                      {"matrix_count", s.matrix_count()},
                      {"zero_reductions", s.zero_reductions},
                      {"koszul_zero_reductions", s.koszul_zero_reductions},
                      {"pairs_created", s.pairs_created},
                      {"pairs_equal_signature", s.pairs_equal_signature},
                      {"pairs_eliminated", s.pairs_eliminated},
                      {"rewritten_substitutions", s.rewritten_substitutions},
                      {"reducer_rows", s.reducer_rows},
                      {"retired_generators", s.retired_generators},
                      {"degree_truncated", s.degree_truncated},
                      {"certificate_stop", s.certificate_stop},
                      {"max_sugar", s.max_sugar}};
  if (include_timing) j["seconds"] = s.seconds;
  return j;
}

nlohmann::json to_json(const ExperimentReport& r, bool include_timing) {
  nlohmann::json j = {{"system", r.system},
                      {"algorithm", std::string(algorithm_name(r.algo))},
                      {"basis_size", r.basis_size},
                      {"leading_monomials", r.leading_monomials},
                      {"basis", r.basis},
                      {"stats", to_json(r.stats, include_timing)}};
  if (include_timing) {
    j["timing"] = {{"gb_seconds", r.gb_seconds}, {"fglm_seconds", r.fglm_seconds}};
  }
  if (r.verified) {
    j["verify"] = {{"ok", *r.verified}, {"reason", r.verify_reason}};
  }
  if (r.precision) {
    j["precision"] = {{"input", *r.precision}, {"f5_stage", loss_json(r.f5_loss)}};
    if (r.fglm_loss) j["precision"]["fglm_stage"] = loss_json(*r.fglm_loss);
  }
  if (!r.lex_basis.empty() || !r.fglm_error.empty()) {
    j["fglm"] = {{"lex_basis", r.lex_basis}, {"precision_error", r.fglm_precision_error}, {"error", r.fglm_error}};
  }
  return j;
}

BatchSummary summarize(const std::vector<ExperimentReport>& runs) {
  BatchSummary b;
  b.runs = runs.size();
  double f5_sum = 0.0;
  double fglm_sum = 0.0;
  std::size_t fglm_runs = 0;
  LossSummary fglm;
  for (const auto& r : runs) {
    f5_sum += r.f5_loss.mean;
    b.f5_loss.max = std::max(b.f5_loss.max, r.f5_loss.max);
    b.f5_loss.coefficients += r.f5_loss.coefficients;
    if (r.fglm_precision_error) ++b.fglm_precision_errors;
    if (r.fglm_loss) {
      fglm_sum += r.fglm_loss->mean;
      fglm.max = std::max(fglm.max, r.fglm_loss->max);
      fglm.coefficients += r.fglm_loss->coefficients;
      ++fglm_runs;
    }
  }
  if (b.runs) b.f5_loss.mean = f5_sum / static_cast<double>(b.runs);
  if (fglm_runs) {
    fglm.mean = fglm_sum / static_cast<double>(fglm_runs);
    b.fglm_loss = fglm;
  }
  return b;
}

nlohmann::json to_json(const BatchSummary& b) {
  nlohmann::json j = {{"runs", b.runs}, {"f5_stage", loss_json(b.f5_loss)}, {"fglm_precision_errors", b.fglm_precision_errors}};
  if (b.fglm_loss) j["fglm_stage"] = loss_json(*b.fglm_loss);
  return j;
}

}  // namespace tropgb
