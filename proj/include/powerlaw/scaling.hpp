#pragma once

#include <optional>
#include <span>

#include "powerlaw/power_fit.hpp"

namespace powerlaw {

/// Largest admissible test length under a training budget (t, c) and a
/// parameter budget n. Budgets are entropies in bits; an infinite n (or t)
/// removes that branch.
struct TestLength {
  std::optional<double> t_branch;  // t y / (1 - y), present when y < 1
  std::optional<double> n_branch;  // (n / (1 - beta))^(1/beta)
  double value = 0.0;              // min of the present branches
  double y = 0.0;                  // sqrt(c t^-beta / (1 - beta))
};

/// Throws for beta outside (0, 1), non-positive budgets, or when neither
/// branch is present ("no admissible test length").
TestLength s_max(double t, double n, double c, double beta);

struct ScalingPoint {
  double t = 0.0;
  double n = 0.0;
  double c = 0.0;
  double beta = 0.5;
  double c9 = 1.0;
  TestLength smax;
  std::optional<double> bound_t;
  std::optional<double> bound_n;
  double bound = 0.0;  // C9 times the max of the present branches
};

/// Lower bound on the excess cross entropy rate (bits per token) at budgets
/// (t, n, c):
///
///   t-branch  t^(beta-1) ((1-y)/(1+y))^(1-beta) - (c/t)(1-y)/(2y)
///   n-branch  ((2^beta - 1 + beta)/2) (n/(1-beta))^(1-1/beta)
ScalingPoint scaling_lower_bound(double t, double n, double c, double beta, double c9 = 1.0);

/// Log-log slopes of the two branches against the exponent caps
/// gamma_T <= 1 - beta and gamma_N <= 1/beta - 1. The t-branch is fitted
/// at the given compute budget with n infinite, the n-branch with t
/// infinite.
struct ExponentReport {
  double beta = 0.5;
  double c = 1e-12;
  double gamma_t_cap = 0.0;
  double gamma_n_cap = 0.0;
  FitResult t_fit;
  FitResult n_fit;
  [[nodiscard]] double gamma_t() const { return -t_fit.exponent; }
  [[nodiscard]] double gamma_n() const { return -n_fit.exponent; }
};

ExponentReport exponent_report(double beta, std::span<const double> t_grid,
                               std::span<const double> n_grid, double c = 1e-12);

}  // namespace powerlaw
