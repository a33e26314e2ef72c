#pragma once

#include <cstdint>
#include <random>

namespace powerlaw {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of replicate `index` under `base`: hash(base, index).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Top 53 bits of a 64-bit word as a double in [0, 1).
constexpr double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Thin wrapper over mt19937_64. The engine is fully specified by the
/// standard, so streams are identical across platforms; we avoid the
/// std:: distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return unit_interval(engine_()); }

 private:
  std::mt19937_64 engine_;
};

/// Keyed, counter-based bit source for Santa Fe knowledge: Z_k is a pure
/// function of (key, k), so every occurrence of k reads the same bit
/// without the sequence ever being materialized.
class Knowledge {
 public:
  /// `entropy_bits` in (0, 1] selects P(Z_k = 1) = q <= 1/2 with binary
  /// entropy h(q) = entropy_bits.
  Knowledge(std::uint64_t key, double entropy_bits);

  [[nodiscard]] std::uint8_t bit(std::uint64_t k) const {
    return unit_interval(splitmix64(key_ ^ splitmix64(k))) < one_probability_ ? 1 : 0;
  }
  [[nodiscard]] double one_probability() const { return one_probability_; }
  [[nodiscard]] double entropy_bits() const { return entropy_bits_; }

 private:
  std::uint64_t key_;
  double entropy_bits_;
  double one_probability_;
};

/// Binary entropy in bits.
double binary_entropy(double q);

}  // namespace powerlaw
