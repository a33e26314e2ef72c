#include "powerlaw/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace powerlaw {

namespace {

// log(1 - p) with log1p(-1) = -inf handled by callers.
double log_complement(double p) { return std::log1p(-p); }

// 1 - (1 - p)^t
double hit_probability(double p, Length t) {
  if (t == 0 || p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(t) * log_complement(p));
}

template <class Fn>
double sum_over_law(const DiscreteLaw& law, Fn&& term) {
  const auto masses = law.masses();
  std::vector<double> terms(masses.size());
  std::transform(masses.begin(), masses.end(), terms.begin(), term);
  return pairwise_sum(terms);
}

}  // namespace

double survival(double p, Length t) {
  if (t == 0) return 1.0;
  if (p >= 1.0) return 0.0;
  if (p <= 0.0) return 1.0;
  return std::exp(static_cast<double>(t) * log_complement(p));
}

double expected_types(const DiscreteLaw& law, Length t) {
  return sum_over_law(law, [t](double p) { return hit_probability(p, t); });
}

double type_increment(const DiscreteLaw& law, Length t) {
  return sum_over_law(law, [t](double p) { return p > 0.0 ? p * survival(p, t) : 0.0; });
}

double new_types(const DiscreteLaw& law, Length t, Length s) {
  return sum_over_law(law, [t, s](double p) {
    return p > 0.0 ? survival(p, t) * hit_probability(p, s) : 0.0;
  });
}

double log_binomial(Length t, Length m) {
  if (m > t) throw std::invalid_argument("log_binomial: m exceeds t");
  const Length k = std::min(m, t - m);
  constexpr Length kExactTerms = 4096;
  if (k <= kExactTerms) {
    double acc = 0.0;
    for (Length i = 1; i <= k; ++i) {
      acc += std::log(static_cast<double>(t - k + i) / static_cast<double>(i));
    }
    return acc;
  }
  return std::lgamma(static_cast<double>(t) + 1.0) - std::lgamma(static_cast<double>(m) + 1.0) -
         std::lgamma(static_cast<double>(t - m) + 1.0);
}

double spectrum_element(const DiscreteLaw& law, Length t, Length m) {
  if (m < 1 || m > t) {
    throw std::invalid_argument("spectrum element: need 1 <= m <= t, got m=" +
                                std::to_string(m) + ", t=" + std::to_string(t));
  }
  const double lb = log_binomial(t, m);
  return sum_over_law(law, [=](double p) {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return m == t ? 1.0 : 0.0;
    return std::exp(lb + static_cast<double>(m) * std::log(p) +
                    static_cast<double>(t - m) * log_complement(p));
  });
}

std::vector<double> spectrum(const DiscreteLaw& law, Length t, std::size_t m_max) {
  const std::size_t top = static_cast<std::size_t>(std::min<Length>(t, m_max));
  std::vector<double> lb(top + 1, 0.0);
  for (std::size_t m = 1; m <= top; ++m) lb[m] = log_binomial(t, m);

  const auto masses = law.masses();
  std::vector<std::vector<double>> terms(top, std::vector<double>(masses.size(), 0.0));
  for (std::size_t k = 0; k < masses.size(); ++k) {
    const double p = masses[k];
    if (p <= 0.0) continue;
    if (p >= 1.0) {
      if (t >= 1 && t <= top) terms[t - 1][k] = 1.0;
      continue;
    }
    const double lp = std::log(p);
    const double lq = log_complement(p);
    for (std::size_t m = 1; m <= top; ++m) {
      terms[m - 1][k] = std::exp(lb[m] + static_cast<double>(m) * lp +
                                 static_cast<double>(t - m) * lq);
    }
  }
  std::vector<double> out(m_max, 0.0);
  for (std::size_t m = 1; m <= top; ++m) out[m - 1] = pairwise_sum(terms[m - 1]);
  return out;
}

OccupancyCurve exact_occupancy_curve(const DiscreteLaw& law, std::span<const Length> grid,
                                     std::size_t m_max) {
  OccupancyCurve curve;
  curve.t.assign(grid.begin(), grid.end());
  curve.spectrum.assign(m_max, std::vector<double>(grid.size(), 0.0));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw std::invalid_argument("occupancy curve: grid must be strictly increasing");
    }
    curve.V.push_back(expected_types(law, grid[i]));
    curve.dV.push_back(type_increment(law, grid[i]));
    if (m_max > 0 && grid[i] > 0) {
      const auto col = spectrum(law, grid[i], m_max);
      for (std::size_t m = 0; m < m_max; ++m) curve.spectrum[m][i] = col[m];
    }
  }
  return curve;
}

double HausdorffMeasure::total_mass() const {
  double total = mass_at_zero + mass_at_one;
  for (const auto& a : atoms) total += a.mass;
  return total;
}

HausdorffMeasure hausdorff_atoms(const DiscreteLaw& law) {
  struct Group {
    double p;
    std::size_t count;
  };
  std::vector<double> ps;
  for (double p : law.masses()) {
    if (p > 0.0) ps.push_back(p);
  }
  std::sort(ps.begin(), ps.end());

  HausdorffMeasure mu;
  std::size_t i = 0;
  while (i < ps.size()) {
    std::size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    const double p = ps[i];
    const auto count = static_cast<double>(j - i);
    if (p >= 1.0) {
      mu.mass_at_one += count * p;
    } else {
      mu.atoms.push_back({p, count * p});
    }
    i = j;
  }
  return mu;
}

double reconstruct_from_hausdorff(const HausdorffMeasure& measure, Length t) {
  if (t == 0) return 0.0;
  std::vector<double> terms;
  terms.reserve(measure.atoms.size() + 2);
  terms.push_back(static_cast<double>(t) * measure.mass_at_zero);
  for (const auto& a : measure.atoms) {
    terms.push_back(a.mass * hit_probability(a.location, t) / a.location);
  }
  terms.push_back(measure.mass_at_one);
  return pairwise_sum(terms);
}

TailConstants zipf_tail_constants(const DiscreteLaw& law, double beta,
                                  std::optional<double> p_lower) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("tail constants: beta must lie in (0, 1)");
  }
  std::vector<double> ps;
  for (double p : law.masses()) {
    if (p > 0.0) ps.push_back(p);
  }
  std::sort(ps.begin(), ps.end());

  TailConstants out;
  out.p_floor = ps.front();
  out.p_lower = p_lower.value_or(out.p_floor);
  if (!(out.p_lower > 0.0 && out.p_lower <= 1.0)) {
    throw std::invalid_argument("tail constants: p_lower must lie in (0, 1]");
  }

  // Distinct atoms ascending with the mass strictly below each one.
  struct Level {
    double p;
    std::size_t at_least;  // #{k : p_k >= p}
    double below;          // sum of p_k < p
  };
  std::vector<Level> levels;
  double below = 0.0;
  for (std::size_t i = 0; i < ps.size();) {
    std::size_t j = i;
    double group = 0.0;
    while (j < ps.size() && ps[j] == ps[i]) group += ps[j++];
    levels.push_back({ps[i], ps.size() - i, below});
    below += group;
    i = j;
  }

  for (const auto& lv : levels) {
    const double v = static_cast<double>(lv.at_least) * std::pow(lv.p, beta);
    if (v > out.c0) {
      out.c0 = v;
      out.c0_at = lv.p;
    }
  }

  // On [p_lower, 1] the partial sum is a step function and p^(beta-1) is
  // decreasing, so the infimum sits at the right end of each step.
  out.c2 = 1.0;  // S(1) * 1^(beta-1)
  out.c2_at = 1.0;
  for (const auto& lv : levels) {
    if (lv.p <= out.p_lower || lv.p > 1.0) continue;
    const double v = lv.below * std::pow(lv.p, beta - 1.0);
    if (v < out.c2) {
      out.c2 = v;
      out.c2_at = lv.p;
    }
  }
  return out;
}

}  // namespace powerlaw
