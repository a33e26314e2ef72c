#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "powerlaw/block_entropy.hpp"
#include "powerlaw/grid.hpp"
#include "powerlaw/occupancy.hpp"
#include "powerlaw/verifier.hpp"

using namespace powerlaw;

namespace {

ProcessSpec sticky_pair() {
  Eigen::MatrixXd p(2, 2);
  p << 0.99, 0.01, 0.01, 0.99;
  const auto z = DiscreteLaw::zipf(0.5, 1000);
  return ProcessSpec::markov(p, {z, z.shifted(1000)});
}

// 0 followed by a log grid from 1.
std::vector<Length> from_zero(Length hi) {
  std::vector<Length> g = {0};
  for (Length t : log_grid(1, hi)) g.push_back(t);
  return g;
}

}  // namespace

TEST_CASE("a single atom satisfies the upper law and is outside the lower one") {
  const auto law = DiscreteLaw::point_mass(1);
  const auto grid = log_grid(1, 10'000);
  const auto up = check_upper_heaps(law, 0.5, grid);
  CHECK(up.verdict == Verdict::pass);
  // Delta V(t) = 0 for t >= 1, so the margin is the bound itself at t_max.
  CHECK(up.lhs[0] == 0.0);

  const auto low = check_lower_heaps(ProcessSpec::iid(law), 0.5, grid);
  CHECK(low.verdict == Verdict::not_applicable);
  CHECK(low.constants.at("C2") == 0.0);
  CHECK_FALSE(low.notes.empty());
}

TEST_CASE("zipf laws satisfy both differential bounds") {
  for (double beta : {0.3, 0.5, 0.8}) {
    const auto law = DiscreteLaw::zipf(beta, 100'000);
    const auto grid = log_grid(10, 10'000);
    const auto up = check_upper_heaps(law, beta, grid);
    CHECK(up.verdict == Verdict::pass);
    CHECK(up.margin > 0.0);
    CHECK(up.constants.at("C1") ==
          doctest::Approx(std::tgamma(1.0 - beta) * up.constants.at("C0")));
    const auto low = check_lower_heaps(ProcessSpec::iid(law), beta, grid);
    CHECK(low.verdict == Verdict::pass);
    CHECK(low.margin > 0.0);
    CHECK(low.constants.at("C3") == 1.0);
  }
}

TEST_CASE("a geometric law is outside the lower law") {
  const auto law = DiscreteLaw::geometric(0.5, 60);
  const auto low = check_lower_heaps(ProcessSpec::iid(law), 0.5, log_grid(10, 10'000));
  CHECK(low.verdict == Verdict::not_applicable);
  CHECK_FALSE(low.violating_index.has_value());
}

TEST_CASE("lower-law constants for IID narrations") {
  const auto k = lower_heaps_constants(ProcessSpec::iid(DiscreteLaw::zipf(0.5, 100'000)), 0.5,
                                       10'000);
  CHECK(k.c3 == 1.0);
  CHECK(k.p_lower == doctest::Approx(1.0 / 40'000.0));
  // (4 C3)^(beta - 1) / 2 = 4^-0.5 / 2 = 1/4.
  CHECK(k.c4 == doctest::Approx(k.c2 / 4.0).epsilon(1e-15));
  CHECK(k.applicable);
  CHECK(std::tgamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("upper law notes grids beyond the truncation floor") {
  const auto law = DiscreteLaw::zipf(0.5, 100);
  const auto r = check_upper_heaps(law, 0.5, log_grid(10, 1'000'000));
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("verifier input validation") {
  const auto law = DiscreteLaw::zipf(0.5, 100);
  const std::vector<Length> zero = {0, 10};
  CHECK_THROWS_AS(check_upper_heaps(law, 0.5, zero), std::invalid_argument);
  const std::vector<Length> ok = {10};
  CHECK_THROWS_AS(check_upper_heaps(law, 1.0, ok), std::invalid_argument);
  CHECK_THROWS_AS(check_upper_heaps(law, 0.0, ok), std::invalid_argument);
  const std::vector<Length> one = {1};
  CHECK_THROWS_AS(check_hapax_bound(ProcessSpec::iid(law), one), std::invalid_argument);
  const std::vector<Length> unsorted = {10, 5};
  CHECK_THROWS_AS(check_upper_heaps(law, 0.5, unsorted), std::invalid_argument);
}

TEST_CASE("hapax bound holds for IID laws") {
  for (const auto& law : {DiscreteLaw::zipf(0.5, 10'000), DiscreteLaw::geometric(0.7, 80),
                          DiscreteLaw::uniform(3), DiscreteLaw::point_mass(1)}) {
    const auto r = check_hapax_bound(ProcessSpec::iid(law), log_grid(2, 100'000));
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.slack.empty());
  }
}

TEST_CASE("hapax bound holds for a sticky markov narration") {
  const std::vector<Length> grid = {100, 1000};
  const auto r = check_hapax_bound(sticky_pair(), grid, {200, 5, 0});
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.slack.size() == 2);
}

TEST_CASE("hilberg bound for a santa fe source") {
  const SantaFeConfig cfg{ProcessSpec::iid(DiscreteLaw::zipf(0.5, 100'000)), 1.0, 0};
  const auto grid = from_zero(10'000);
  const auto r = check_hilberg_from_heaps(cfg, 0.5, grid, 64);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.constants.at("C7") == 1.0);

  const std::vector<Length> first = {0};
  const auto one = check_hilberg_from_heaps(cfg, 0.5, first, 1);
  CHECK(one.lhs[0] == doctest::Approx(1.0).epsilon(1e-12));

  const SantaFeConfig light{ProcessSpec::iid(DiscreteLaw::geometric(0.5, 60)), 1.0, 0};
  CHECK(check_hilberg_from_heaps(light, 0.5, grid, 64).verdict == Verdict::not_applicable);
  CHECK_THROWS_AS(check_hilberg_from_heaps(cfg, 0.5, grid, 0), std::invalid_argument);
}

TEST_CASE("exact curves have the required shape") {
  const auto law = DiscreteLaw::zipf(0.5, 10'000);
  const auto grid = from_zero(100'000);
  CHECK(check_shape(exact_occupancy_curve(law, grid)).verdict == Verdict::pass);
  const SantaFeConfig cfg{ProcessSpec::iid(DiscreteLaw::from_masses({0.5, 0.3, 0.2})), 1.0, 0};
  CHECK(check_shape(exact_entropy_curve(cfg, 8)).verdict == Verdict::pass);
}

TEST_CASE("shape check locates the first defect") {
  const std::vector<Length> t = {0, 1, 2, 3, 4, 5, 6};
  std::vector<double> f = {0, 1, 1.8, 2.4, 2.8, 3.0, 3.1};
  CHECK(check_shape(t, f).verdict == Verdict::pass);

  auto bumped = f;
  bumped[4] += 0.5;  // 2.4 -> 3.3 -> 3.0: slope rises into index 4
  const auto r = check_shape(t, bumped);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(r.violating_index.has_value());
  CHECK(*r.violating_index == 3);

  auto offset = f;
  offset[0] = 0.1;
  CHECK(check_shape(t, offset).violating_index == std::optional<std::size_t>{0});

  const std::vector<Length> t2 = {1, 2, 4};
  const std::vector<double> linear = {1, 2, 4};
  // Linear pieces pass concavity; f(t)/t is flat, so this passes.
  CHECK(check_shape(t2, linear).verdict == Verdict::pass);
  const std::vector<double> convex = {1, 2, 5};
  CHECK(check_shape(t2, convex).verdict == Verdict::fail);
}
