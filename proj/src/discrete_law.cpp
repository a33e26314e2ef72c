#include "powerlaw/discrete_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace powerlaw {

namespace {

void validate_masses(const std::vector<double>& masses) {
  if (masses.empty()) {
    throw std::invalid_argument("discrete law: empty mass vector");
  }
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!std::isfinite(masses[i]) || masses[i] < 0.0) {
      throw std::invalid_argument("discrete law: mass of type " + std::to_string(i + 1) +
                                  " is negative or not finite");
    }
  }
  const double total = pairwise_sum(masses);
  if (std::abs(total - 1.0) > DiscreteLaw::kMassTolerance) {
    throw std::invalid_argument("discrete law: masses sum to " + std::to_string(total) +
                                ", not 1");
  }
}

// Euler-Maclaurin estimate of sum_{k > n} k^{-a}, a > 1.
double zeta_tail(double a, double n) {
  const double n1 = n + 1.0;
  return std::pow(n1, 1.0 - a) / (a - 1.0) + 0.5 * std::pow(n1, -a) +
         a / 12.0 * std::pow(n1, -a - 1.0);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 64;
  if (values.size() <= kLeaf) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

DiscreteLaw DiscreteLaw::from_masses(std::vector<double> masses) {
  validate_masses(masses);
  return DiscreteLaw(std::move(masses));
}

DiscreteLaw DiscreteLaw::normalized(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("discrete law: no weights");
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("discrete law: weights must be finite and non-negative");
    }
  }
  const double total = pairwise_sum(weights);
  if (!(total > 0.0)) throw std::invalid_argument("discrete law: weights sum to zero");
  for (double& w : weights) w /= total;
  return DiscreteLaw(std::move(weights));
}

DiscreteLaw DiscreteLaw::zipf(double beta, std::size_t kmax) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("zipf law: beta must lie in (0, 1)");
  }
  if (kmax == 0) throw std::invalid_argument("zipf law: kmax must be positive");
  const double alpha = 1.0 / beta;
  std::vector<double> w(kmax);
  for (std::size_t k = 0; k < kmax; ++k) {
    w[k] = std::pow(static_cast<double>(k + 1), -alpha);
  }
  const double head = pairwise_sum(w);
  const double tail = zeta_tail(alpha, static_cast<double>(kmax));
  DiscreteLaw law = normalized(std::move(w));
  law.zipf_ = ZipfDescriptor{beta, kmax, tail / (head + tail)};
  return law;
}

DiscreteLaw DiscreteLaw::geometric(double ratio, std::size_t kmax) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("geometric law: ratio must lie in (0, 1)");
  }
  if (kmax == 0) throw std::invalid_argument("geometric law: kmax must be positive");
  std::vector<double> w(kmax);
  double v = 1.0;
  for (auto& x : w) {
    v *= ratio;
    x = v;
  }
  return normalized(std::move(w));
}

DiscreteLaw DiscreteLaw::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform law: n must be positive");
  return DiscreteLaw(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteLaw DiscreteLaw::point_mass(Token k) {
  if (k == 0) throw std::invalid_argument("point mass: types start at 1");
  std::vector<double> m(k, 0.0);
  m[k - 1] = 1.0;
  return DiscreteLaw(std::move(m));
}

DiscreteLaw DiscreteLaw::shifted(std::size_t offset) const {
  std::vector<double> m(offset, 0.0);
  m.insert(m.end(), masses_.begin(), masses_.end());
  DiscreteLaw out(std::move(m));
  return out;
}

std::size_t DiscreteLaw::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(masses_.begin(), masses_.end(), [](double p) { return p > 0.0; }));
}

double DiscreteLaw::min_positive_mass() const {
  double lo = std::numeric_limits<double>::infinity();
  for (double p : masses_) {
    if (p > 0.0) lo = std::min(lo, p);
  }
  return lo;
}

double DiscreteLaw::entropy_bits() const {
  std::vector<double> terms;
  terms.reserve(masses_.size());
  for (double p : masses_) {
    terms.push_back(p > 0.0 ? -p * std::log2(p) : 0.0);
  }
  return pairwise_sum(terms);
}

}  // namespace powerlaw
