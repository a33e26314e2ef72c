#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powerlaw/occupancy.hpp"
#include "powerlaw/process.hpp"

namespace powerlaw {

/// Empirical V^(t), V^(t|m) for m <= m_max, and dV^(t) = [token t+1 is new]
/// (NaN at t = sequence length), in one streaming pass.
///
/// Throws for an empty stream or a grid that is not increasing or runs past
/// the end of the stream.
OccupancyCurve vocabulary_curve(std::span<const Token> tokens, std::span<const Length> grid,
                                std::size_t m_max = 0);

/// Monte Carlo mean and standard error of the empirical curve.
struct ReplicatedCurve {
  std::vector<Length> t;
  std::vector<double> V_mean, V_stderr;
  std::vector<double> dV_mean, dV_stderr;
  std::vector<std::vector<double>> spectrum_mean, spectrum_stderr;  // [m-1][i]
  std::size_t replicates = 0;
};

struct ReplicateOptions {
  std::size_t replicates = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware parallelism
};

/// Replicate r samples grid.back() + 1 tokens under derive_seed(seed, r).
ReplicatedCurve simulate_vocabulary(const ProcessSpec& spec, std::span<const Length> grid,
                                    std::size_t m_max, const ReplicateOptions& options);

}  // namespace powerlaw
