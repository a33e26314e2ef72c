#pragma once

#include <cstddef>
#include <span>

namespace powerlaw {

/// y ≈ e^intercept · x^exponent, fitted by least squares on (ln x, ln y).
struct FitResult {
  double exponent = 0.0;
  double intercept = 0.0;  // natural log
  double r_squared = 0.0;
  double residual_std = 0.0;
  std::size_t n_points = 0;
};

/// Throws for fewer than 3 points, mismatched lengths, non-positive values,
/// or xs that are all equal.
FitResult fit_power_law(std::span<const double> xs, std::span<const double> ys);

}  // namespace powerlaw
