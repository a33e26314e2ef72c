#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "powerlaw/exact_rational.hpp"
#include "powerlaw/grid.hpp"
#include "powerlaw/occupancy.hpp"

using namespace powerlaw;

namespace {

std::vector<double> as_vector(const DiscreteLaw& law) {
  return {law.masses().begin(), law.masses().end()};
}

const DiscreteLaw kSkew = DiscreteLaw::from_masses({0.75, 0.25});

}  // namespace

TEST_CASE("expected types") {
  CHECK(expected_types(DiscreteLaw::point_mass(), 5) == 1.0);
  CHECK(expected_types(DiscreteLaw::zipf(0.5, 1000), 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(expected_types(kSkew, 2) == doctest::Approx(1.375).epsilon(1e-15));
  CHECK(expected_types(kSkew, 0) == 0.0);
}

TEST_CASE("expected types agree with sequence enumeration") {
  const auto law = DiscreteLaw::from_masses({0.5, 0.3, 0.15, 0.05});
  for (std::size_t t = 0; t <= 7; ++t) {
    CHECK(expected_types(law, t) ==
          doctest::Approx(oracle::distinct_types(as_vector(law), t)).epsilon(1e-12));
  }
}

TEST_CASE("tiny masses keep their precision at long lengths") {
  // One type of mass 1e-12 among a near-certain atom: its contribution to
  // V(1e9) is 1 - exp(-1e-3), which naive powering would lose.
  const auto law = DiscreteLaw::from_masses({1.0 - 1e-12, 1e-12});
  const double expected = 1.0 + (-std::expm1(1e9 * std::log1p(-1e-12)));
  CHECK(expected_types(law, 1'000'000'000) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected_types(law, 1'000'000'000) - 1.0 ==
        doctest::Approx(-std::expm1(-1e-3)).epsilon(1e-6));
}

TEST_CASE("type increment and new types") {
  const auto law = DiscreteLaw::zipf(0.5, 1000);
  for (Length t : {0ULL, 1ULL, 5ULL, 100ULL}) {
    CHECK(type_increment(law, t) ==
          doctest::Approx(expected_types(law, t + 1) - expected_types(law, t)).epsilon(1e-11));
    CHECK(new_types(law, t, 7) ==
          doctest::Approx(expected_types(law, t + 7) - expected_types(law, t)).epsilon(1e-11));
  }
  CHECK(type_increment(kSkew, 0) == 1.0);
}

TEST_CASE("spectrum elements") {
  const auto u = DiscreteLaw::uniform(2);
  CHECK(spectrum_element(u, 2, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(spectrum_element(u, 2, 2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(spectrum_element(DiscreteLaw::zipf(0.5, 100), 1, 1) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(spectrum_element(u, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_element(u, 2, 3), std::invalid_argument);
}

TEST_CASE("spectrum agrees with sequence enumeration") {
  const auto law = DiscreteLaw::from_masses({0.5, 0.3, 0.15, 0.05});
  for (std::size_t t = 1; t <= 7; ++t) {
    for (std::size_t m = 1; m <= t; ++m) {
      CHECK(spectrum_element(law, t, m) ==
            doctest::Approx(oracle::types_seen_exactly(as_vector(law), t, m)).epsilon(1e-12));
    }
  }
}

TEST_CASE("log binomial matches exact binomials") {
  for (Length t : {10ULL, 40ULL, 60ULL}) {
    for (Length m = 0; m <= t; m += 3) {
      const double exact = static_cast<double>(exact_binomial(t, m));
      CHECK(log_binomial(t, m) == doctest::Approx(std::log(exact)).epsilon(1e-13));
    }
  }
  // Large arguments go through log-gamma.
  CHECK(log_binomial(1'000'000, 500'000) ==
        doctest::Approx(std::lgamma(1e6 + 1) - 2 * std::lgamma(5e5 + 1)).epsilon(1e-12));
}

TEST_CASE("taylor elements") {
  const auto law = RationalLaw::from_weights(std::vector<std::uint64_t>{3, 1});
  const auto v = exact_types_sequence(law, 10);
  // m = 1: v(t||1) = t Delta V(t-1).
  for (Length t = 1; t <= 10; ++t) {
    CHECK(taylor_element(v, t, 1) == Rational(static_cast<long long>(t)) * (v[t] - v[t - 1]));
  }
  const auto u = RationalLaw::from_weights(std::vector<std::uint64_t>{1, 1});
  CHECK(taylor_element(exact_types_sequence(u, 2), 2, 2) == Rational(1, 2));
  CHECK(exact_spectrum_element(u, 2, 2) == Rational(1, 2));

  Rational sum = 0;
  for (Length m = 1; m <= 10; ++m) sum += taylor_element(v, 10, m);
  CHECK(sum == v[10]);

  CHECK_THROWS_AS(taylor_element(v, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(taylor_element(v, 11, 1), std::invalid_argument);
  const auto long_v = exact_types_sequence(u, 65);
  CHECK_THROWS_AS(taylor_element(long_v, 65, 1), std::invalid_argument);
}

TEST_CASE("taylor elements over a floating curve") {
  // Dyadic masses make every V(t) exact in binary floating point.
  const auto law = DiscreteLaw::from_masses({0.75, 0.25});
  const auto grid = linear_grid(0, 12);
  const auto curve = exact_occupancy_curve(law, grid);
  const auto rlaw = RationalLaw::from_weights(std::vector<std::uint64_t>{3, 1});
  for (Length m = 1; m <= 12; ++m) {
    CHECK(taylor_element(curve, 12, m) == exact_spectrum_element(rlaw, 12, m));
  }
}

TEST_CASE("spectrum equals taylor elements on random rational laws") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<std::uint64_t> w(2 + gen() % 4);
    for (auto& x : w) x = 1 + gen() % 9;
    const auto law = RationalLaw::from_weights(w);
    const auto v = exact_types_sequence(law, 16);
    for (Length t = 1; t <= 16; ++t) {
      for (Length m = 1; m <= t; ++m) {
        CHECK(exact_spectrum_element(law, t, m) == taylor_element(v, t, m));
      }
    }
  }
}

TEST_CASE("rational law validation") {
  CHECK_THROWS_AS(RationalLaw::from_weights(std::vector<std::uint64_t>{0, 0}),
                  std::invalid_argument);
  const auto law = RationalLaw::from_weights(std::vector<std::uint64_t>{1, 2, 0});
  CHECK(law.masses()[1] == Rational(2, 3));
  CHECK(law.to_double().mass(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("consistency sums over the spectrum") {
  const auto law = DiscreteLaw::zipf(0.5, 2000);
  for (Length t : {1ULL, 2ULL, 17ULL, 100ULL, 200ULL}) {
    const auto spec = spectrum(law, t, t);
    double types = 0.0, tokens = 0.0;
    for (std::size_t m = 1; m <= spec.size(); ++m) {
      types += spec[m - 1];
      tokens += static_cast<double>(m) * spec[m - 1];
    }
    CHECK(std::abs(types - expected_types(law, t)) <= 1e-9);
    CHECK(std::abs(tokens - static_cast<double>(t)) <= 1e-9);
  }
}

TEST_CASE("hapax rate equals the type increment for IID sources") {
  const auto law = DiscreteLaw::zipf(0.6, 5000);
  for (Length t : {1ULL, 2ULL, 10ULL, 1000ULL, 100000ULL}) {
    CHECK(std::abs(spectrum_element(law, t, 1) / static_cast<double>(t) -
                   type_increment(law, t - 1)) <= 1e-10);
  }
}

TEST_CASE("hausdorff atoms") {
  const auto single = hausdorff_atoms(DiscreteLaw::point_mass());
  CHECK(single.mass_at_one == 1.0);
  CHECK(single.atoms.empty());

  const auto u = hausdorff_atoms(DiscreteLaw::uniform(2));
  REQUIRE(u.atoms.size() == 1);
  CHECK(u.atoms[0].location == 0.5);
  CHECK(u.atoms[0].mass == 1.0);

  const auto s = hausdorff_atoms(kSkew);
  REQUIRE(s.atoms.size() == 2);
  CHECK(s.atoms[0].location == 0.25);
  CHECK(s.atoms[0].mass == 0.25);
  CHECK(s.atoms[1].location == 0.75);
  CHECK(s.atoms[1].mass == 0.75);
  CHECK(s.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.mass_at_one == 0.0);
}

TEST_CASE("reconstruction from the hausdorff measure") {
  const auto u = hausdorff_atoms(DiscreteLaw::uniform(2));
  CHECK(reconstruct_from_hausdorff(u, 2) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(reconstruct_from_hausdorff(u, 0) == 0.0);

  HausdorffMeasure linear;
  linear.mass_at_zero = 1.0;
  for (Length t : {0ULL, 1ULL, 7ULL, 1000ULL}) {
    CHECK(reconstruct_from_hausdorff(linear, t) == static_cast<double>(t));
  }

  const auto point = hausdorff_atoms(DiscreteLaw::point_mass());
  CHECK(reconstruct_from_hausdorff(point, 0) == 0.0);
  CHECK(reconstruct_from_hausdorff(point, 9) == 1.0);

  const auto law = DiscreteLaw::zipf(0.5, 10'000);
  const auto mu = hausdorff_atoms(law);
  for (Length t : {1ULL, 10ULL, 1000ULL, 1'000'000ULL}) {
    CHECK(std::abs(reconstruct_from_hausdorff(mu, t) - expected_types(law, t)) <= 1e-10);
  }
}

TEST_CASE("tail constants") {
  CHECK(zipf_tail_constants(DiscreteLaw::point_mass(), 0.5).c0 == 1.0);
  for (std::size_t n : {4UL, 9UL, 100UL}) {
    CHECK(zipf_tail_constants(DiscreteLaw::uniform(n), 0.5).c0 ==
          doctest::Approx(std::sqrt(static_cast<double>(n))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(zipf_tail_constants(kSkew, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(zipf_tail_constants(kSkew, 1.0), std::invalid_argument);
}

TEST_CASE("tail constants against a dense scan of p") {
  // Both hypotheses hold pointwise for every p in the range, including
  // just below each atom, where the partial sum drops.
  const auto law = DiscreteLaw::zipf(0.5, 300);
  const double beta = 0.5;
  const auto tc = zipf_tail_constants(law, beta);
  double worst0 = 0.0, worst2 = 1e300;
  for (int i = 0; i <= 20000; ++i) {
    const double p = std::pow(10.0, -7.0 + 7.0 * i / 20000.0);
    double above = 0, below = 0;
    for (double q : law.masses()) {
      if (q >= p) above += 1;
      if (q <= p) below += q;
    }
    worst0 = std::max(worst0, above * std::pow(p, beta));
    if (p >= tc.p_lower) worst2 = std::min(worst2, below * std::pow(p, beta - 1));
  }
  CHECK(worst0 <= tc.c0 * (1 + 1e-12));
  CHECK(worst0 >= tc.c0 * (1 - 1e-3));
  CHECK(tc.c2 <= worst2 * (1 + 1e-12));
  CHECK(tc.c2 >= worst2 * (1 - 1e-2));
}

TEST_CASE("zipf tail constants are stable under a longer truncation") {
  const double p_lower = 1e-6;
  const auto a = zipf_tail_constants(DiscreteLaw::zipf(0.5, 100'000), 0.5, p_lower);
  const auto b = zipf_tail_constants(DiscreteLaw::zipf(0.5, 200'000), 0.5, p_lower);
  CHECK(a.c0 > 0.0);
  CHECK(a.c2 > 0.0);
  CHECK(std::isfinite(a.c0));
  CHECK(std::abs(a.c0 / b.c0 - 1.0) <= 0.02);
  CHECK(std::abs(a.c2 / b.c2 - 1.0) <= 0.02);
}

TEST_CASE("exact curve shape") {
  const auto law = DiscreteLaw::zipf(0.5, 1'000'000);
  const auto grid = log_grid(1, 1'000'000);
  const auto c = exact_occupancy_curve(law, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(c.V[i] >= c.V[i - 1]);
    CHECK(c.dV[i] <= c.dV[i - 1]);
    CHECK(c.V[i] / static_cast<double>(grid[i]) <= c.V[i - 1] / static_cast<double>(grid[i - 1]));
  }
  CHECK(c.V.back() / 1e6 < 0.05);
  const auto small = exact_occupancy_curve(law, linear_grid(0, 50));
  CHECK(small.V[0] == 0.0);
  for (std::size_t i = 1; i + 1 < small.V.size(); ++i) {
    CHECK(small.V[i + 1] - 2 * small.V[i] + small.V[i - 1] <= 1e-12);
  }
}
