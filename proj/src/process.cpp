#include "powerlaw/process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace powerlaw {

namespace {

constexpr double kMixingTolerance = 1e-9;
constexpr Length kMaxMixingHorizon = 1'000'000;

Eigen::VectorXd solve_stationary(const Eigen::MatrixXd& p) {
  const Eigen::Index n = p.rows();
  // pi (P - I) = 0 with one equation replaced by sum(pi) = 1.
  Eigen::MatrixXd a = p.transpose() - Eigen::MatrixXd::Identity(n, n);
  a.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(n - 1) = 1.0;
  Eigen::VectorXd pi = a.colPivHouseholderQr().solve(b);
  return pi;
}

}  // namespace

MarkovChain::MarkovChain(Eigen::MatrixXd transition, std::vector<DiscreteLaw> emissions)
    : transition_(std::move(transition)), emissions_(std::move(emissions)) {
  const Eigen::Index n = transition_.rows();
  if (n == 0 || transition_.cols() != n) {
    throw std::invalid_argument("markov chain: transition matrix must be square and non-empty");
  }
  if (static_cast<std::size_t>(n) != emissions_.size()) {
    throw std::invalid_argument("markov chain: " + std::to_string(n) + " states but " +
                                std::to_string(emissions_.size()) + " emission laws");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!(transition_(i, j) > 0.0)) {
        throw std::invalid_argument("markov chain: transition entries must be strictly positive");
      }
    }
    if (std::abs(transition_.row(i).sum() - 1.0) > kRowTolerance) {
      throw std::invalid_argument("markov chain: row " + std::to_string(i + 1) +
                                  " does not sum to 1");
    }
  }
  stationary_ = solve_stationary(transition_);
  const double residual = (stationary_.transpose() * transition_ - stationary_.transpose())
                              .cwiseAbs()
                              .maxCoeff();
  if (residual > kStationaryTolerance || stationary_.minCoeff() <= 0.0) {
    throw std::invalid_argument("markov chain: stationary vector did not converge");
  }
}

Eigen::MatrixXd MarkovChain::power(Length t) const {
  const Eigen::Index n = transition_.rows();
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd base = transition_;
  while (t > 0) {
    if (t & 1U) result = result * base;
    t >>= 1U;
    if (t > 0) base = base * base;
  }
  return result;
}

std::size_t ProcessSpec::alphabet_size() const {
  if (const auto* law = iid_law()) return law->size();
  std::size_t n = 0;
  for (const auto& e : chain()->emissions()) n = std::max(n, e.size());
  return n;
}

DiscreteLaw marginal_law(const ProcessSpec& spec) {
  if (const auto* law = spec.iid_law()) return *law;
  const MarkovChain& chain = *spec.chain();
  std::vector<double> mix(spec.alphabet_size(), 0.0);
  for (std::size_t s = 0; s < chain.states(); ++s) {
    const double w = chain.stationary()(static_cast<Eigen::Index>(s));
    const auto masses = chain.emissions()[s].masses();
    for (std::size_t k = 0; k < masses.size(); ++k) mix[k] += w * masses[k];
  }
  return DiscreteLaw::normalized(std::move(mix));
}

double pair_correlation(const ProcessSpec& spec, Token k, Length t) {
  if (t == 0) throw std::invalid_argument("pair correlation: lag must be at least 1");
  const DiscreteLaw marginal = marginal_law(spec);
  if (!(marginal.mass(k) > 0.0)) {
    throw std::invalid_argument("pair correlation: type " + std::to_string(k) +
                                " has zero marginal mass");
  }
  if (spec.is_iid()) return 1.0;

  const MarkovChain& chain = *spec.chain();
  const auto n = static_cast<Eigen::Index>(chain.states());
  Eigen::VectorXd emit(n);
  for (Eigen::Index s = 0; s < n; ++s) emit(s) = chain.emissions()[s].mass(k);
  const Eigen::VectorXd joint = chain.stationary().cwiseProduct(emit);
  const double pk = joint.sum();
  const double numer = joint.dot(chain.power(t) * emit);
  return numer / (pk * pk);
}

namespace {

double max_ratio(const Eigen::MatrixXd& pt, const Eigen::VectorXd& pi) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < pt.cols(); ++j) {
    best = std::max(best, pt.col(j).maxCoeff() / pi(j));
  }
  return best;
}

double max_deviation(const Eigen::MatrixXd& pt, const Eigen::VectorXd& pi) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < pt.cols(); ++j) {
    worst = std::max(worst, (pt.col(j).array() / pi(j) - 1.0).abs().maxCoeff());
  }
  return worst;
}

}  // namespace

Length mixing_horizon(const ProcessSpec& spec) {
  if (spec.is_iid()) return 0;
  const MarkovChain& chain = *spec.chain();
  Eigen::MatrixXd pt = chain.transition();
  for (Length t = 1; t <= kMaxMixingHorizon; ++t) {
    if (max_deviation(pt, chain.stationary()) < kMixingTolerance) return t;
    pt = pt * chain.transition();
  }
  throw std::invalid_argument("markov chain: not mixing within " +
                              std::to_string(kMaxMixingHorizon) + " steps");
}

double mixing_constant(const ProcessSpec& spec) {
  if (spec.is_iid()) return 1.0;
  const MarkovChain& chain = *spec.chain();
  const Length horizon = mixing_horizon(spec);
  Eigen::MatrixXd pt = chain.transition();
  double best = 1.0;
  for (Length t = 1; t <= horizon; ++t) {
    best = std::max(best, max_ratio(pt, chain.stationary()));
    pt = pt * chain.transition();
  }
  return best;
}

}  // namespace powerlaw
