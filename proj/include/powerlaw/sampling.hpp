#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "powerlaw/discrete_law.hpp"
#include "powerlaw/process.hpp"
#include "powerlaw/seeding.hpp"

namespace powerlaw {

/// Walker alias table over a mass vector; sample() returns a type in 1..K.
class AliasTable {
 public:
  explicit AliasTable(std::span<const double> masses);

  Token sample(Rng& rng) const {
    const double scaled = rng.uniform() * static_cast<double>(prob_.size());
    const std::size_t slot = std::min(static_cast<std::size_t>(scaled), prob_.size() - 1);
    const double u = rng.uniform();
    return static_cast<Token>((u < prob_[slot] ? slot : alias_[slot]) + 1);
  }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

/// Reusable generator for one ProcessSpec; tables are built once and the
/// generator itself is immutable, so it can be shared across threads.
class NarrationSampler {
 public:
  explicit NarrationSampler(const ProcessSpec& spec);

  /// t tokens; deterministic in (spec, seed). Markov narrations start from
  /// the stationary vector. Throws for t = 0.
  [[nodiscard]] std::vector<Token> generate(Length t, std::uint64_t seed) const;

 private:
  std::vector<AliasTable> emission_;
  std::vector<AliasTable> transition_;  // one row per state
  std::vector<AliasTable> initial_;     // stationary vector, Markov only
};

struct SantaFeToken {
  Token k;
  std::uint8_t bit;
  friend bool operator==(const SantaFeToken&, const SantaFeToken&) = default;
};

std::vector<Token> sample_narration(const ProcessSpec& spec, Length t, std::uint64_t seed);

/// Knowledge key for a Santa Fe run: every (base_seed, seed) pair draws an
/// independent knowledge sequence, held fixed across the whole stream.
std::uint64_t knowledge_key(const SantaFeConfig& config, std::uint64_t seed);

/// Pairs (K_i, Z_{K_i}). Narration and knowledge use unrelated streams.
std::vector<SantaFeToken> sample_santa_fe(const SantaFeConfig& config, Length t,
                                          std::uint64_t seed);

/// Dense symbol 2(k-1) + bit + 1 for Santa Fe pairs (alphabet 2K).
constexpr Token santa_fe_symbol(SantaFeToken x) { return 2 * (x.k - 1) + x.bit + 1; }

}  // namespace powerlaw
