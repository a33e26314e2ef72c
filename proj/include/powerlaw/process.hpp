#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "powerlaw/discrete_law.hpp"

namespace powerlaw {

/// Hidden finite-state chain with per-state emission laws. Transitions are
/// strictly positive, so the chain is irreducible and aperiodic and has a
/// unique stationary vector.
class MarkovChain {
 public:
  static constexpr double kRowTolerance = 1e-12;
  static constexpr double kStationaryTolerance = 1e-10;

  /// Throws std::invalid_argument on a non-square or non-stochastic matrix,
  /// a non-positive entry, or a state/emission count mismatch.
  MarkovChain(Eigen::MatrixXd transition, std::vector<DiscreteLaw> emissions);

  [[nodiscard]] std::size_t states() const { return emissions_.size(); }
  [[nodiscard]] const Eigen::MatrixXd& transition() const { return transition_; }
  [[nodiscard]] const Eigen::VectorXd& stationary() const { return stationary_; }
  [[nodiscard]] const std::vector<DiscreteLaw>& emissions() const { return emissions_; }

  /// P^t by repeated squaring.
  [[nodiscard]] Eigen::MatrixXd power(Length t) const;

 private:
  Eigen::MatrixXd transition_;
  Eigen::VectorXd stationary_;
  std::vector<DiscreteLaw> emissions_;
};

/// Narration process: IID over a law, or Markov-modulated.
class ProcessSpec {
 public:
  static ProcessSpec iid(DiscreteLaw law) { return ProcessSpec(std::move(law)); }
  static ProcessSpec markov(Eigen::MatrixXd transition, std::vector<DiscreteLaw> emissions) {
    return ProcessSpec(MarkovChain(std::move(transition), std::move(emissions)));
  }

  [[nodiscard]] bool is_iid() const { return std::holds_alternative<DiscreteLaw>(variant_); }
  /// nullptr unless is_iid().
  [[nodiscard]] const DiscreteLaw* iid_law() const { return std::get_if<DiscreteLaw>(&variant_); }
  /// nullptr if is_iid().
  [[nodiscard]] const MarkovChain* chain() const { return std::get_if<MarkovChain>(&variant_); }

  /// One past the largest type index any state can emit.
  [[nodiscard]] std::size_t alphabet_size() const;

 private:
  explicit ProcessSpec(DiscreteLaw law) : variant_(std::move(law)) {}
  explicit ProcessSpec(MarkovChain chain) : variant_(std::move(chain)) {}

  std::variant<DiscreteLaw, MarkovChain> variant_;
};

/// Santa Fe source X_t = (K_t, Z_{K_t}).
struct SantaFeConfig {
  ProcessSpec narration;
  double knowledge_entropy = 1.0;  // bits per knowledge position, in (0, 1]
  std::uint64_t base_seed = 0;
};

/// Stationary marginal P(K_0 = k).
DiscreteLaw marginal_law(const ProcessSpec& spec);

/// p_k(t) / p_k with p_k(t) = P(K_t = k | K_0 = k). Throws for t = 0 or a
/// type with zero marginal mass.
double pair_correlation(const ProcessSpec& spec, Token k, Length t);

/// Smallest T with max_{s,s'} |P^T(s,s') / pi(s') - 1| < 1e-9; 0 for IID.
Length mixing_horizon(const ProcessSpec& spec);

/// C_3 = sup_{k,t} p_k(t)/p_k, bounded by max_{s,s',t <= T} P^t(s,s')/pi(s').
/// The bound is attained by chains whose states emit disjoint types.
double mixing_constant(const ProcessSpec& spec);

}  // namespace powerlaw
