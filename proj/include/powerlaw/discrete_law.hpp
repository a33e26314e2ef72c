#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace powerlaw {

/// Natural-number token; type indices start at 1.
using Token = std::uint32_t;

/// Sequence length / position counter.
using Length = std::uint64_t;

/// Probability mass over the types 1..K.
///
/// Masses are stored densely: masses()[k - 1] is P(K = k). Zero masses are
/// allowed (shifted supports for disjoint emissions), negative ones are not,
/// and the total must equal 1 within kMassTolerance.
class DiscreteLaw {
 public:
  static constexpr double kMassTolerance = 1e-12;

  struct ZipfDescriptor {
    double beta;        // tail exponent of the rank law, p_k ∝ k^{-1/beta}
    std::size_t kmax;   // truncation point
    double tail_mass;   // mass the untruncated law puts on k > kmax
  };

  /// Takes masses as-is; throws std::invalid_argument unless they already
  /// form a probability vector.
  static DiscreteLaw from_masses(std::vector<double> masses);

  /// Scales non-negative weights to unit total.
  static DiscreteLaw normalized(std::vector<double> weights);

  /// Truncated Zipf law p_k ∝ k^{-1/beta}, k = 1..kmax, renormalized.
  static DiscreteLaw zipf(double beta, std::size_t kmax);

  /// p_k ∝ ratio^k, k = 1..kmax.
  static DiscreteLaw geometric(double ratio, std::size_t kmax);

  static DiscreteLaw uniform(std::size_t n);

  /// All mass on the single type k.
  static DiscreteLaw point_mass(Token k = 1);

  /// Same masses moved to types offset+1 .. offset+K.
  [[nodiscard]] DiscreteLaw shifted(std::size_t offset) const;

  [[nodiscard]] std::span<const double> masses() const { return masses_; }
  [[nodiscard]] double mass(Token k) const {
    return (k >= 1 && k <= masses_.size()) ? masses_[k - 1] : 0.0;
  }
  /// Largest type index carried (including trailing zero masses).
  [[nodiscard]] std::size_t size() const { return masses_.size(); }
  [[nodiscard]] std::size_t support_size() const;
  [[nodiscard]] double min_positive_mass() const;
  [[nodiscard]] double entropy_bits() const;

  [[nodiscard]] const std::optional<ZipfDescriptor>& zipf_descriptor() const {
    return zipf_;
  }

 private:
  explicit DiscreteLaw(std::vector<double> masses) : masses_(std::move(masses)) {}

  std::vector<double> masses_;
  std::optional<ZipfDescriptor> zipf_;
};

/// Deterministic sum with a fixed pairwise tree; the result does not depend
/// on how callers chunk the work.
double pairwise_sum(std::span<const double> values);

}  // namespace powerlaw
