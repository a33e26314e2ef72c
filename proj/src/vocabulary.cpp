#include "powerlaw/vocabulary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "powerlaw/parallel.hpp"
#include "powerlaw/sampling.hpp"
#include "powerlaw/seeding.hpp"

namespace powerlaw {

namespace {

constexpr Token kDenseLimit = Token{1} << 26;

// Type -> count, dense when the alphabet is small enough.
class TypeCounter {
 public:
  explicit TypeCounter(Token max_token) {
    if (max_token < kDenseLimit) dense_.assign(static_cast<std::size_t>(max_token) + 1, 0);
  }

  // Returns the count before the increment.
  std::uint64_t bump(Token k) {
    if (!dense_.empty()) return dense_[k]++;
    return sparse_[k]++;
  }
  [[nodiscard]] std::uint64_t count(Token k) const {
    if (!dense_.empty()) return dense_[k];
    const auto it = sparse_.find(k);
    return it == sparse_.end() ? 0 : it->second;
  }

 private:
  std::vector<std::uint32_t> dense_;
  std::unordered_map<Token, std::uint64_t> sparse_;
};

}  // namespace

OccupancyCurve vocabulary_curve(std::span<const Token> tokens, std::span<const Length> grid,
                                std::size_t m_max) {
  if (tokens.empty()) throw std::invalid_argument("vocabulary curve: empty token stream");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw std::invalid_argument("vocabulary curve: grid must be strictly increasing");
    }
  }
  if (!grid.empty() && grid.back() > tokens.size()) {
    throw std::invalid_argument("vocabulary curve: grid exceeds stream length");
  }

  const Token max_token = *std::max_element(tokens.begin(), tokens.end());
  TypeCounter counts(max_token);
  std::vector<std::uint64_t> freq_of_freq(m_max + 2, 0);

  OccupancyCurve curve;
  curve.t.assign(grid.begin(), grid.end());
  curve.V.reserve(grid.size());
  curve.dV.reserve(grid.size());
  curve.spectrum.assign(m_max, std::vector<double>(grid.size(), 0.0));

  std::uint64_t distinct = 0;
  Length consumed = 0;
  auto emit = [&](std::size_t gi) {
    curve.V.push_back(static_cast<double>(distinct));
    if (consumed < tokens.size()) {
      curve.dV.push_back(counts.count(tokens[consumed]) == 0 ? 1.0 : 0.0);
    } else {
      curve.dV.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    for (std::size_t m = 1; m <= m_max; ++m) {
      curve.spectrum[m - 1][gi] = static_cast<double>(freq_of_freq[m]);
    }
  };

  std::size_t gi = 0;
  while (gi < grid.size() && grid[gi] == 0) emit(gi++);
  for (Token k : tokens) {
    if (gi == grid.size()) break;
    const std::uint64_t before = counts.bump(k);
    if (before == 0) ++distinct;
    if (before >= 1 && before <= m_max) --freq_of_freq[before];
    if (before + 1 <= m_max) ++freq_of_freq[before + 1];
    ++consumed;
    if (grid[gi] == consumed) emit(gi++);
  }
  return curve;
}

ReplicatedCurve simulate_vocabulary(const ProcessSpec& spec, std::span<const Length> grid,
                                    std::size_t m_max, const ReplicateOptions& options) {
  if (grid.empty()) throw std::invalid_argument("simulate: empty grid");
  if (options.replicates == 0) throw std::invalid_argument("simulate: need at least one replicate");
  const NarrationSampler sampler(spec);
  const Length length = grid.back() + 1;

  std::vector<OccupancyCurve> runs(options.replicates);
  parallel_for(options.replicates, options.threads, [&](std::size_t r) {
    const auto tokens = sampler.generate(length, derive_seed(options.seed, r));
    runs[r] = vocabulary_curve(tokens, grid, m_max);
  });

  ReplicatedCurve out;
  out.t.assign(grid.begin(), grid.end());
  out.replicates = options.replicates;
  out.spectrum_mean.assign(m_max, {});
  out.spectrum_stderr.assign(m_max, {});
  std::vector<double> column(options.replicates);
  auto reduce = [&](auto&& pick, std::vector<double>& mean, std::vector<double>& err) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t r = 0; r < runs.size(); ++r) column[r] = pick(runs[r], i);
      const MeanError me = mean_and_stderr(column);
      mean.push_back(me.mean);
      err.push_back(me.std_error);
    }
  };
  reduce([](const OccupancyCurve& c, std::size_t i) { return c.V[i]; }, out.V_mean, out.V_stderr);
  reduce([](const OccupancyCurve& c, std::size_t i) { return c.dV[i]; }, out.dV_mean,
         out.dV_stderr);
  for (std::size_t m = 0; m < m_max; ++m) {
    reduce([m](const OccupancyCurve& c, std::size_t i) { return c.spectrum[m][i]; },
           out.spectrum_mean[m], out.spectrum_stderr[m]);
  }
  return out;
}

}  // namespace powerlaw
