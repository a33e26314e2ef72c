#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerlaw/block_entropy.hpp"
#include "powerlaw/occupancy.hpp"
#include "powerlaw/process.hpp"

namespace powerlaw {

enum class Verdict { pass, fail, not_applicable };

const char* to_string(Verdict v);

/// Relative tolerance applied to every pointwise comparison.
inline constexpr double kVerifyTolerance = 1e-9;

/// Pointwise check lhs (relation) rhs over a grid.
///
/// For Monte Carlo inputs `slack` holds the one-sided 3 sigma allowance
/// granted to each point; exact checks leave it empty. `margin` is the
/// smallest signed distance to the bound (negative means violated).
struct VerificationReport {
  std::string law;
  std::string relation;  // "<=" or ">="
  Verdict verdict = Verdict::pass;
  std::vector<Length> t;
  std::vector<double> lhs;
  std::vector<double> rhs;
  std::vector<double> slack;
  double margin = 0.0;
  std::optional<std::size_t> violating_index;
  std::map<std::string, double> constants;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const { return verdict == Verdict::pass; }
};

/// Monte Carlo settings for non-IID sources.
struct MonteCarloOptions {
  std::size_t replicates = 200;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

/// Delta V(t) <= C1 t^(beta-1), C1 = Gamma(1-beta) C0. Grid points must be
/// positive; points past 1/p_floor are noted as outside the range the
/// truncated law represents.
VerificationReport check_upper_heaps(const DiscreteLaw& law, double beta,
                                     std::span<const Length> grid);

/// Constants of the lower differential Heaps law for a grid ending at
/// t_max: C2 over [1/(4 C3 t_max), 1], C3, C4 = (4 C3)^(beta-1) C2 / 2.
/// `applicable` is false when C2 is not positive or decays by more than a
/// factor 2 over the last two decades of the range, the signature of a
/// tail lighter than p^(1-beta).
struct LowerHeapsConstants {
  double c2 = 0.0;
  double c3 = 1.0;
  double c4 = 0.0;
  double p_lower = 0.0;
  double c2_two_decades_up = 0.0;
  bool applicable = false;
  std::string reason;
};

LowerHeapsConstants lower_heaps_constants(const ProcessSpec& spec, double beta, Length t_max);

/// Delta V(t) >= C4 t^(beta-1): exact for IID, Monte Carlo with 3 sigma
/// slack otherwise.
VerificationReport check_lower_heaps(const ProcessSpec& spec, double beta,
                                     std::span<const Length> grid,
                                     const MonteCarloOptions& mc = {});

/// V(t|1)/t <= Delta V(ceil(t/2)) for t >= 2. Exact for IID; otherwise the
/// per-replicate difference of the two sides is averaged and granted 3
/// sigma slack.
VerificationReport check_hapax_bound(const ProcessSpec& spec, std::span<const Length> grid,
                                     const MonteCarloOptions& mc = {});

/// Excess conditional rate of a Santa Fe source over its narration entropy,
/// H(Z)(V(t+s)-V(t))/s, against C7 C4 (t+s)^(beta-1) with C7 = H(Z).
VerificationReport check_hilberg_from_heaps(const SantaFeConfig& config, double beta,
                                            std::span<const Length> grid, Length s);

/// f(0) = 0 when 0 is on the grid, f non-decreasing, f concave (divided
/// differences non-increasing), f(t)/t non-increasing.
VerificationReport check_shape(std::span<const Length> t, std::span<const double> f,
                               const std::string& name = "curve");
VerificationReport check_shape(const OccupancyCurve& curve);
VerificationReport check_shape(const EntropyCurve& curve);

}  // namespace powerlaw
