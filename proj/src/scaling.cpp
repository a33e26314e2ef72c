#include "powerlaw/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace powerlaw {

namespace {

void require_budgets(double t, double n, double c, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("scaling: beta must lie in (0, 1)");
  if (!(t > 0.0) || !(n > 0.0) || !(c > 0.0)) {
    throw std::invalid_argument("scaling: budgets t, n, c must be positive");
  }
}

}  // namespace

TestLength s_max(double t, double n, double c, double beta) {
  require_budgets(t, n, c, beta);
  TestLength out;
  out.y = std::isinf(t) ? 0.0 : std::sqrt(c * std::pow(t, -beta) / (1.0 - beta));
  if (std::isfinite(t) && out.y < 1.0) out.t_branch = t * out.y / (1.0 - out.y);
  if (std::isfinite(n)) out.n_branch = std::pow(n / (1.0 - beta), 1.0 / beta);
  if (!out.t_branch && !out.n_branch) {
    throw std::invalid_argument("scaling: no admissible test length");
  }
  out.value = std::min(out.t_branch.value_or(std::numeric_limits<double>::infinity()),
                       out.n_branch.value_or(std::numeric_limits<double>::infinity()));
  return out;
}

ScalingPoint scaling_lower_bound(double t, double n, double c, double beta, double c9) {
  ScalingPoint p;
  p.t = t;
  p.n = n;
  p.c = c;
  p.beta = beta;
  p.c9 = c9;
  p.smax = s_max(t, n, c, beta);
  if (p.smax.t_branch) {
    const double y = p.smax.y;
    p.bound_t = std::pow(t, beta - 1.0) * std::pow((1.0 - y) / (1.0 + y), 1.0 - beta) -
                (c / t) * (1.0 - y) / (2.0 * y);
  }
  if (p.smax.n_branch) {
    p.bound_n = (std::pow(2.0, beta) - 1.0 + beta) / 2.0 *
                std::pow(n / (1.0 - beta), 1.0 - 1.0 / beta);
  }
  const double best = std::max(p.bound_t.value_or(-std::numeric_limits<double>::infinity()),
                               p.bound_n.value_or(-std::numeric_limits<double>::infinity()));
  p.bound = c9 * best;
  return p;
}

ExponentReport exponent_report(double beta, std::span<const double> t_grid,
                               std::span<const double> n_grid, double c) {
  const double inf = std::numeric_limits<double>::infinity();
  ExponentReport r;
  r.beta = beta;
  r.c = c;
  r.gamma_t_cap = 1.0 - beta;
  r.gamma_n_cap = 1.0 / beta - 1.0;

  std::vector<double> bt;
  for (double t : t_grid) {
    const ScalingPoint p = scaling_lower_bound(t, inf, c, beta);
    if (!p.bound_t) throw std::invalid_argument("exponent report: t-branch absent on the grid");
    bt.push_back(*p.bound_t);
  }
  std::vector<double> bn;
  for (double n : n_grid) bn.push_back(*scaling_lower_bound(inf, n, c, beta).bound_n);
  r.t_fit = fit_power_law(t_grid, bt);
  r.n_fit = fit_power_law(n_grid, bn);
  return r;
}

}  // namespace powerlaw
