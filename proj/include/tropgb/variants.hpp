#pragma once

#include "tropgb/f5.hpp"

#include <optional>
#include <vector>

namespace tropgb {

/// One F5 run per generator index under ≤_incr; elimination uses LM(I_{i-1}).
F5Result iterative_f5(const std::vector<Polynomial>& f, const PolyRing& ring, const F5Options& opts = {});

enum class F4Reduction { lup, echelon_leading, echelon_full };

struct F4Options {
  F4Reduction reduction = F4Reduction::lup;
  std::optional<unsigned> max_degree;
};

/// Tropical F4 with the normal strategy: all pairs of the lowest lcm degree
/// are reduced together with their reducers in one matrix. Signatures in the
/// returned basis are placeholders.
F5Result f4(const std::vector<Polynomial>& f, const PolyRing& ring, const F4Options& opts = {});

}  // namespace tropgb
