#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powerlaw/process.hpp"

namespace powerlaw {

/// Excess cross entropy of a memorizing predictor on a Santa Fe source.
///
/// The predictor knows the narration marginal and, for each type, the bit
/// recorded on its first appearance. It codes x = (k, z) with
/// -log2 p_k plus 0 bits for a recorded fact or 1 bit for an unrecorded
/// one. A test block of s tokens is coded jointly, so facts revealed
/// earlier in the block are recorded too; facts from outside the training
/// prefix X_1^t and the block itself are not.
///
/// Each replicate scores `blocks` disjoint test blocks at offsets
/// t, t+s, ..., all against the same training prefix. The narration term
/// is removed exactly (its mean is h), leaving
///   excess = (1/s) sum_i [-log2 Q(x_i) + log2 p_{k_i}],
/// whose expectation is (V(t+s) - V(t))/s.
struct MemorizerOptions {
  std::size_t replicates = 50;
  std::size_t blocks = 10;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct MemorizerCurve {
  std::vector<Length> t;
  std::vector<double> excess_mean;
  std::vector<double> excess_stderr;
  std::vector<double> exact;  // (V(t+s) - V(t)) / s
  Length s = 0;
  std::size_t replicates = 0;
};

/// Throws unless the narration is IID and the knowledge bits are fair, or
/// for s = 0, an empty grid, or fewer than 2 replicates.
MemorizerCurve memorizer_cross_entropy(const SantaFeConfig& config, std::span<const Length> grid,
                                       Length s, const MemorizerOptions& options);

}  // namespace powerlaw
