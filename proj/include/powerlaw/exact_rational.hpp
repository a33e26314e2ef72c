#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "powerlaw/discrete_law.hpp"
#include "powerlaw/occupancy.hpp"

namespace powerlaw {

using Rational = boost::multiprecision::cpp_rational;

/// Taylor elements and exact spectra are computed only up to this length;
/// the rationals grow with t and the alternating sums are the point.
inline constexpr Length kExactLengthLimit = 64;

/// Law with rational masses w_k / sum(w).
class RationalLaw {
 public:
  /// Throws unless every weight is non-negative and at least one is positive.
  static RationalLaw from_weights(std::span<const std::uint64_t> weights);

  [[nodiscard]] std::span<const Rational> masses() const { return masses_; }
  [[nodiscard]] DiscreteLaw to_double() const;

 private:
  std::vector<Rational> masses_;
};

/// V(0), V(1), ..., V(t_max) exactly.
std::vector<Rational> exact_types_sequence(const RationalLaw& law, Length t_max);

/// V(t|m) exactly; 1 <= m <= t <= kExactLengthLimit.
Rational exact_spectrum_element(const RationalLaw& law, Length t, Length m);

/// v(t||m) = (-1)^(m+1) C(t,m) Delta^m v(t-m) over v(0..t).
/// Throws for m outside [1, t], t > kExactLengthLimit, or a short sequence.
Rational taylor_element(std::span<const Rational> v, Length t, Length m);

/// Same over a floating curve sampled at 0, 1, ..., t: each double is taken
/// as the exact rational it represents.
Rational taylor_element(const OccupancyCurve& curve, Length t, Length m);

/// C(n, k) as an exact integer.
boost::multiprecision::cpp_int exact_binomial(Length n, Length k);

}  // namespace powerlaw
