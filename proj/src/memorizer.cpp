#include "powerlaw/memorizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "powerlaw/occupancy.hpp"
#include "powerlaw/parallel.hpp"
#include "powerlaw/sampling.hpp"
#include "powerlaw/seeding.hpp"

namespace powerlaw {

MemorizerCurve memorizer_cross_entropy(const SantaFeConfig& config, std::span<const Length> grid,
                                       Length s, const MemorizerOptions& options) {
  const DiscreteLaw* law = config.narration.iid_law();
  if (law == nullptr) throw std::invalid_argument("memorizer: narration must be IID");
  if (std::abs(config.knowledge_entropy - 1.0) > 1e-12) {
    throw std::invalid_argument("memorizer: knowledge bits must be fair");
  }
  if (s == 0) throw std::invalid_argument("memorizer: test length must be positive");
  if (grid.empty()) throw std::invalid_argument("memorizer: empty grid");
  if (options.replicates < 2) throw std::invalid_argument("memorizer: need at least 2 replicates");
  if (options.blocks == 0) throw std::invalid_argument("memorizer: need at least one test block");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw std::invalid_argument("memorizer: grid must increase");
  }

  const Length length = grid.back() + s * options.blocks;
  const std::size_t types = law->size();
  constexpr Length kNever = std::numeric_limits<Length>::max();

  // excess[rep][i]
  std::vector<std::vector<double>> excess(options.replicates);
  parallel_for(options.replicates, options.threads, [&](std::size_t rep) {
    const auto stream = sample_santa_fe(config, length, derive_seed(options.seed, rep));
    // first[k]: position of the first occurrence of type k, with its bit.
    std::vector<Length> first(types + 1, kNever);
    std::vector<std::uint8_t> recorded(types + 1, 0);
    for (Length i = 0; i < length; ++i) {
      const SantaFeToken x = stream[i];
      if (first[x.k] == kNever) {
        first[x.k] = i;
        recorded[x.k] = x.bit;
      }
    }
    // stamp[k] marks facts already revealed inside the current block.
    std::vector<std::uint64_t> stamp(types + 1, 0);
    std::uint64_t block_id = 0;
    auto& out = excess[rep];
    for (Length t : grid) {
      double bits = 0.0;
      for (std::size_t b = 0; b < options.blocks; ++b) {
        ++block_id;
        const Length start = t + b * s;
        for (Length i = start; i < start + s; ++i) {
          const SantaFeToken x = stream[i];
          const double pk = law->mass(x.k);
          double bit_prob = 0.5;
          if (first[x.k] < t) {
            bit_prob = recorded[x.k] == x.bit ? 1.0 : 0.0;
          } else if (stamp[x.k] == block_id) {
            bit_prob = 1.0;  // revealed earlier in this block
          } else {
            stamp[x.k] = block_id;
          }
          bits += -std::log2(pk * bit_prob) + std::log2(pk);
        }
      }
      out.push_back(bits / static_cast<double>(s * options.blocks));
    }
  });

  MemorizerCurve curve;
  curve.t.assign(grid.begin(), grid.end());
  curve.s = s;
  curve.replicates = options.replicates;
  std::vector<double> column(options.replicates);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t rep = 0; rep < options.replicates; ++rep) column[rep] = excess[rep][i];
    const MeanError me = mean_and_stderr(column);
    curve.excess_mean.push_back(me.mean);
    curve.excess_stderr.push_back(me.std_error);
    curve.exact.push_back(new_types(*law, grid[i], s) / static_cast<double>(s));
  }
  return curve;
}

}  // namespace powerlaw
