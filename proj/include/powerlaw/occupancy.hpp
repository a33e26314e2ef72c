#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "powerlaw/discrete_law.hpp"

namespace powerlaw {

/// (1 - p)^t as exp(t log1p(-p)), with 0^0 = 1.
double survival(double p, Length t);

/// V(t) = sum_k 1 - (1 - p_k)^t, expected number of distinct types in t IID draws.
double expected_types(const DiscreteLaw& law, Length t);

/// Delta V(t) = V(t+1) - V(t) = sum_k p_k (1 - p_k)^t, evaluated directly.
double type_increment(const DiscreteLaw& law, Length t);

/// V(t+s) - V(t) = sum_k (1 - p_k)^t (1 - (1 - p_k)^s), without cancellation.
double new_types(const DiscreteLaw& law, Length t, Length s);

/// log C(t, m); exact summation for small min(m, t-m), log-gamma beyond.
double log_binomial(Length t, Length m);

/// V(t|m) = sum_k C(t,m) p_k^m (1-p_k)^(t-m): expected number of types seen
/// exactly m times. Throws unless 1 <= m <= t.
double spectrum_element(const DiscreteLaw& law, Length t, Length m);

/// V(t|1), ..., V(t|m_max) in one pass over the law (m_max clipped to t).
std::vector<double> spectrum(const DiscreteLaw& law, Length t, std::size_t m_max);

/// Grid of lengths with V, Delta V and optional spectrum columns.
/// spectrum[m - 1][i] holds V(t_i | m); entries with m > t_i are 0.
struct OccupancyCurve {
  std::vector<Length> t;
  std::vector<double> V;
  std::vector<double> dV;
  std::vector<std::vector<double>> spectrum;

  [[nodiscard]] std::size_t m_max() const { return spectrum.size(); }
};

OccupancyCurve exact_occupancy_curve(const DiscreteLaw& law, std::span<const Length> grid,
                                     std::size_t m_max = 0);

/// Atomic measure on [0, 1] representing a Hausdorff sequence.
struct HausdorffMeasure {
  struct Atom {
    double location;  // in (0, 1)
    double mass;
  };
  std::vector<Atom> atoms;  // sorted by location, locations distinct
  double mass_at_zero = 0.0;
  double mass_at_one = 0.0;

  [[nodiscard]] double total_mass() const;
};

/// Measure of V(t) for an IID law: mass p_k at location p_k, coincident
/// locations merged.
HausdorffMeasure hausdorff_atoms(const DiscreteLaw& law);

/// v(t) = t mu{0} + sum_atoms w (1 - (1-p)^t) / p + mu{1} [t >= 1].
///
/// The point mass at 1 uses the same kernel as interior atoms
/// ((1 - 0^t)/1 = [t >= 1]), which keeps v(0) = 0 for laws with p_k = 1.
double reconstruct_from_hausdorff(const HausdorffMeasure& measure, Length t);

/// Tail constants of the two Zipf-type hypotheses
///
///   #{k : p_k >= p}           <= C0 p^-beta        (all p > 0)
///   sum_k p_k [p_k <= p]      >= C2 p^(1-beta)     (p in [p_lower, 1])
///
/// C0 is the maximum over atoms; C2 is an infimum, attained as a left limit
/// at the atom (or at 1) closing each constant stretch of the partial sum.
struct TailConstants {
  double c0 = 0.0;
  double c2 = 0.0;
  double p_floor = 0.0;   // smallest positive mass (truncation floor)
  double p_lower = 0.0;   // lower end of the range C2 was extremized over
  double c0_at = 0.0;     // maximizing p
  double c2_at = 0.0;     // minimizing p (left limit when it is an atom)
};

/// Throws unless beta in (0, 1). `p_lower` defaults to the truncation floor.
TailConstants zipf_tail_constants(const DiscreteLaw& law, double beta,
                                  std::optional<double> p_lower = std::nullopt);

}  // namespace powerlaw
