#pragma once

#include "tropgb/macaulay.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace tropgb {

struct F5Options {
  bool f5_criterion = true;
  bool rewritten = true;
  bool record_zero_syzygies = true;
  std::optional<unsigned> max_degree;
  MonomialOrderKind m_order = MonomialOrderKind::grevlex;
  /// Nontrivial valuation only: once all generators are in and a degree step adds
  /// no new minimal leading monomial, stop if the polynomials certify as a tropical
  /// Gröbner basis. Remaining pairs are dropped.
  bool certificate_stop = true;
};

struct MatrixStats {
  unsigned degree = 0;
  std::size_t index = 0;  // generator index of an iterative step, 0 otherwise
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t zero_rows = 0;
  std::size_t new_polys = 0;
};

struct F5Stats {
  std::vector<MatrixStats> matrices;
  std::size_t zero_reductions = 0;
  std::size_t koszul_zero_reductions = 0;
  std::size_t pairs_created = 0;
  std::size_t pairs_equal_signature = 0;
  std::size_t pairs_eliminated = 0;
  std::size_t rewritten_substitutions = 0;
  std::size_t reducer_rows = 0;
  std::size_t retired_generators = 0;
  double seconds = 0.0;
  bool degree_truncated = false;
  bool certificate_stop = false;  // pairs were left when the basis certified
  unsigned max_sugar = 0;

  std::size_t matrix_count() const noexcept { return matrices.size(); }
  void merge(const F5Stats& other);
};

struct F5Result {
  std::vector<LabeledPolynomial> basis;
  F5Stats stats;

  std::vector<Polynomial> polynomials() const;
};

/// S-pair between G[g1] and G[g2] with cofactors u_i = lcm / LT(g_i).
struct CriticalPair {
  std::size_t g1 = 0;
  std::size_t g2 = 0;
  Term u1;
  Term u2;
  Monomial lcm;
  unsigned sugar = 0;
  Signature sig1;
  Signature sig2;
};

/// Neither guessed signature is eliminated at degree d and they differ.
/// Halves whose index is below min_index are not tested for elimination.
bool is_admissible(const CriticalPair& pair, unsigned d, const SignatureOrderContext& ctx, bool use_criterion = true,
                   std::size_t min_index = 0);

/// Pairs of G[fresh] with every other element of G. Pairs whose guessed
/// signatures coincide are dropped and counted in dropped_equal. The pair
/// sugar is the max over halves whose index is at least sugar_from.
std::vector<CriticalPair> make_pairs(std::size_t fresh, const std::vector<LabeledPolynomial>& g, const PolyRing& ring,
                                     std::size_t sugar_from = 0, std::size_t* dropped_equal = nullptr);

inline constexpr std::size_t kNoSource = std::numeric_limits<std::size_t>::max();

/// A row to place in a matrix: t·G[source], or an explicit polynomial when source is kNoSource.
struct Product {
  Signature sig;
  Monomial t;
  std::size_t source = kNoSource;
  Polynomial poly;
};

struct PreprocessOptions {
  bool rewritten = true;
  bool f5_criterion = true;
  std::size_t exempt_below = 0;  // elements with smaller index skip the sugar bound and elimination
};

struct PreprocessResult {
  MacaulayMatrix matrix;
  std::size_t rewritten_substitutions = 0;
  std::size_t reducers = 0;
  std::size_t duplicates = 0;
};

/// Rewrites each product to the latest element of G reaching its signature,
/// keeps one product per signature, then closes the monomial set with
/// reducers of smallest available signature.
PreprocessResult symbolic_preprocessing(const std::vector<Product>& p, const std::vector<LabeledPolynomial>& g,
                                        unsigned d, const SignatureOrderContext& ctx, const PolyRing& ring,
                                        const PreprocessOptions& opts = {});

/// Degree-by-degree signature engine shared by the complete and iterative drivers.
class F5Engine {
 public:
  F5Engine(const PolyRing& ring, std::vector<Polynomial> generators, F5Options opts, SignatureMode mode);

  /// Injects generators [first, last) and runs until no pair is left. In
  /// incr mode the current basis is taken as complete for indices < first.
  void run(std::size_t first, std::size_t last);

  const std::vector<LabeledPolynomial>& basis() const noexcept { return g_; }
  std::vector<LabeledPolynomial> take_basis() { return std::move(g_); }
  const F5Stats& stats() const noexcept { return stats_; }
  SignatureOrderContext& context() noexcept { return ctx_; }

 private:
  void add_element(LabeledPolynomial h);

  const PolyRing& ring_;
  std::vector<Polynomial> gens_;
  F5Options opts_;
  SignatureOrderContext ctx_;
  std::vector<LabeledPolynomial> g_;
  std::vector<CriticalPair> queue_;
  std::size_t exempt_below_ = 0;
  std::size_t lm_growth_ = 0;  // elements whose LM was outside ⟨LM(G)⟩ when added
  std::size_t certified_at_ = 0;
  F5Stats stats_;
};

/// Complete tropical F5. Generators must be sorted by increasing degree.
F5Result f5(const std::vector<Polynomial>& f, const PolyRing& ring, const F5Options& opts = {});

}  // namespace tropgb
