#pragma once

#include "tropgb/f5.hpp"
#include "tropgb/parser.hpp"
#include "tropgb/postprocess.hpp"
#include "tropgb/variants.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropgb {

/// Katsura-n in u0..un: u0 + 2(u1 + ... + un) - 1 and, for m = 0..n-1,
/// Σ_{l=-n..n} u_|l| u_|m-l| - u_m (indices beyond n vanish).
SystemSpec gen_katsura(unsigned n);

/// Cyclic-n in x1..xn: the cyclic elementary sums of orders 1..n-1 and x1⋯xn - 1.
SystemSpec gen_cyclic(unsigned n);

/// Dense polynomials in as many variables as degrees, with coefficients uniform
/// in [0, p^N) at precision N. Deterministic in the seed.
SystemSpec gen_random_padic(const std::vector<unsigned>& degrees, std::uint64_t p, std::int64_t precision,
                            std::uint64_t seed);

enum class WeightPreset { zero, alternating };

/// zero, or w_i = (-2)^(i-1).
std::vector<mpq_class> weight_preset(WeightPreset preset, std::size_t nvars);
WeightPreset parse_weight_preset(std::string_view name);

/// Replaces the field, weights and precision of a generated system.
SystemSpec with_field(SystemSpec spec, const ValuationContext& ctx, std::vector<mpq_class> weights,
                      std::optional<std::int64_t> precision = std::nullopt);

enum class Algorithm { f5, f5it, f4, buchberger };
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

struct ExperimentOptions {
  Algorithm algo = Algorithm::f5;
  F5Options f5;
  F4Reduction f4_reduction = F4Reduction::lup;
  bool verify = false;
  bool fglm = false;
};

struct LossSummary {
  double mean = 0.0;
  std::int64_t max = 0;
  std::size_t coefficients = 0;
};

struct ExperimentReport {
  std::string system;
  Algorithm algo = Algorithm::f5;
  std::size_t basis_size = 0;
  std::vector<std::string> leading_monomials;  // of the reduced basis when available
  std::vector<std::string> basis;
  F5Stats stats;
  double gb_seconds = 0.0;
  double fglm_seconds = 0.0;
  std::optional<bool> verified;
  std::string verify_reason;
  std::optional<std::int64_t> precision;
  LossSummary f5_loss;
  std::optional<LossSummary> fglm_loss;
  bool fglm_precision_error = false;
  std::string fglm_error;
  std::vector<std::string> lex_basis;
};

/// Loss after removing the content p^vmin of each polynomial.
LossSummary gb_precision_loss(const std::vector<Polynomial>& g, const PolyRing& ring, std::int64_t precision);
/// Loss over the non-leading coefficients of monic polynomials.
LossSummary lex_precision_loss(const std::vector<ClassicalPolynomial>& g, std::int64_t precision);

std::vector<Polynomial> compute_basis(const std::vector<Polynomial>& f, const PolyRing& ring,
                                      const ExperimentOptions& opts, F5Stats* stats = nullptr);

ExperimentReport run_experiment(const ParsedSystem& sys, const ExperimentOptions& opts, std::string name = {});

nlohmann::json to_json(const ExperimentReport& r, bool include_timing = true);
nlohmann::json to_json(const F5Stats& s, bool include_timing = true);

struct BatchSummary {
  std::size_t runs = 0;
  LossSummary f5_loss;                  // mean of per-run means, max of maxima
  std::optional<LossSummary> fglm_loss;
  std::size_t fglm_precision_errors = 0;
};

BatchSummary summarize(const std::vector<ExperimentReport>& runs);
nlohmann::json to_json(const BatchSummary& b);

}  // namespace tropgb
