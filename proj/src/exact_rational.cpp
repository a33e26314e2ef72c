#include "powerlaw/exact_rational.hpp"

#include <stdexcept>
#include <string>

namespace powerlaw {

using boost::multiprecision::cpp_int;

namespace {

void check_exact_range(Length t, Length m) {
  if (m < 1 || m > t) {
    throw std::invalid_argument("exact occupancy: need 1 <= m <= t, got m=" +
                                std::to_string(m) + ", t=" + std::to_string(t));
  }
  if (t > kExactLengthLimit) {
    throw std::invalid_argument("exact occupancy: t=" + std::to_string(t) +
                                " exceeds the exact-arithmetic limit " +
                                std::to_string(kExactLengthLimit));
  }
}

Rational pow_rational(const Rational& base, Length e) {
  Rational r = 1;
  for (Length i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

cpp_int exact_binomial(Length n, Length k) {
  if (k > n) return 0;
  cpp_int r = 1;
  for (Length i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

RationalLaw RationalLaw::from_weights(std::span<const std::uint64_t> weights) {
  cpp_int total = 0;
  for (auto w : weights) total += w;
  if (weights.empty() || total == 0) {
    throw std::invalid_argument("rational law: weights must have a positive total");
  }
  RationalLaw law;
  for (auto w : weights) law.masses_.emplace_back(cpp_int(w), total);
  return law;
}

DiscreteLaw RationalLaw::to_double() const {
  std::vector<double> m;
  m.reserve(masses_.size());
  for (const auto& p : masses_) m.push_back(static_cast<double>(p));
  return DiscreteLaw::normalized(std::move(m));
}

std::vector<Rational> exact_types_sequence(const RationalLaw& law, Length t_max) {
  std::vector<Rational> v(t_max + 1, Rational(0));
  for (const auto& p : law.masses()) {
    const Rational q = 1 - p;
    Rational qt = 1;
    for (Length t = 1; t <= t_max; ++t) {
      qt *= q;
      v[t] += 1 - qt;
    }
  }
  return v;
}

Rational exact_spectrum_element(const RationalLaw& law, Length t, Length m) {
  check_exact_range(t, m);
  Rational acc = 0;
  for (const auto& p : law.masses()) {
    acc += pow_rational(p, m) * pow_rational(1 - p, t - m);
  }
  return acc * Rational(exact_binomial(t, m));
}

Rational taylor_element(std::span<const Rational> v, Length t, Length m) {
  check_exact_range(t, m);
  if (v.size() <= t) {
    throw std::invalid_argument("taylor element: sequence shorter than t + 1");
  }
  // Delta^m v(t-m) = sum_j (-1)^(m-j) C(m,j) v(t-m+j)
  Rational diff = 0;
  for (Length j = 0; j <= m; ++j) {
    const Rational term = Rational(exact_binomial(m, j)) * v[t - m + j];
    if ((m - j) % 2 == 0) {
      diff += term;
    } else {
      diff -= term;
    }
  }
  Rational out = Rational(exact_binomial(t, m)) * diff;
  return (m % 2 == 1) ? out : Rational(-out);
}

Rational taylor_element(const OccupancyCurve& curve, Length t, Length m) {
  if (curve.t.size() <= t) {
    throw std::invalid_argument("taylor element: curve does not cover 0..t");
  }
  std::vector<Rational> v;
  v.reserve(t + 1);
  for (Length i = 0; i <= t; ++i) {
    if (curve.t[i] != i) {
      throw std::invalid_argument("taylor element: curve must be sampled at 0, 1, ..., t");
    }
    v.emplace_back(curve.V[i]);
  }
  return taylor_element(v, t, m);
}

}  // namespace powerlaw
