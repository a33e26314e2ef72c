// Acceptance run: one line per criterion, exit status 0 only if all pass.
// Every tolerance and budget is pinned below.

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "powerlaw/block_entropy.hpp"
#include "powerlaw/exact_rational.hpp"
#include "powerlaw/grid.hpp"
#include "powerlaw/memorizer.hpp"
#include "powerlaw/occupancy.hpp"
#include "powerlaw/parallel.hpp"
#include "powerlaw/power_fit.hpp"
#include "powerlaw/ppm.hpp"
#include "powerlaw/sampling.hpp"
#include "powerlaw/scaling.hpp"
#include "powerlaw/seeding.hpp"
#include "powerlaw/verifier.hpp"

using namespace powerlaw;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

// Runs one criterion, appends a runtime check when a budget is given.
bool report(int id, const std::string& title, double budget_s, const std::function<Outcome()>& f) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::string timing = fmt::format("{:.2f}s", secs);
  if (budget_s > 0.0) {
    timing += fmt::format(" of {:.0f}s", budget_s);
    if (secs >= budget_s) o.pass = false;
  }
  fmt::print("criterion {:>2}: {}  {} [{}] {}\n", id, o.pass ? "PASS" : "FAIL", title, timing,
             o.detail);
  std::fflush(stdout);
  return o.pass;
}

// ---- 1 ---------------------------------------------------------------------

Outcome spectrum_taylor() {
  constexpr int kLaws = 20;
  constexpr Length kTMax = 30;
  std::mt19937_64 gen(20240601);
  std::size_t checked = 0;
  for (int i = 0; i < kLaws; ++i) {
    std::vector<std::uint64_t> w(1 + gen() % 8);
    for (auto& x : w) x = 1 + gen() % 12;
    const auto law = RationalLaw::from_weights(w);
    const auto v = exact_types_sequence(law, kTMax);
    for (Length t = 1; t <= kTMax; ++t) {
      for (Length m = 1; m <= t; ++m) {
        if (exact_spectrum_element(law, t, m) != taylor_element(v, t, m)) {
          return {false, fmt::format("law {} differs at t={} m={}", i, t, m)};
        }
        ++checked;
      }
    }
  }
  return {true, fmt::format("{} exact rational equalities", checked)};
}

// ---- 2 ---------------------------------------------------------------------

Outcome consistency_sums() {
  constexpr double kTol = 1e-9;
  double worst = 0.0;
  for (double beta : {0.3, 0.5, 0.8}) {
    const auto law = DiscreteLaw::zipf(beta, 10'000);
    for (Length t = 1; t <= 200; ++t) {
      const auto spec = spectrum(law, t, t);
      double types = 0.0, tokens = 0.0;
      for (std::size_t m = 1; m <= spec.size(); ++m) {
        types += spec[m - 1];
        tokens += static_cast<double>(m) * spec[m - 1];
      }
      worst = std::max({worst, std::abs(types - expected_types(law, t)),
                        std::abs(tokens - static_cast<double>(t))});
    }
  }
  return {worst <= kTol, fmt::format("max deviation {:.3g} (tol {:.0e})", worst, kTol)};
}

// ---- 3 ---------------------------------------------------------------------

std::vector<DiscreteLaw> ten_laws() {
  return {DiscreteLaw::point_mass(),
          DiscreteLaw::uniform(2),
          DiscreteLaw::uniform(50),
          DiscreteLaw::from_masses({0.75, 0.25}),
          DiscreteLaw::from_masses({0.5, 0.3, 0.15, 0.05}),
          DiscreteLaw::geometric(0.5, 60),
          DiscreteLaw::geometric(0.9, 300),
          DiscreteLaw::zipf(0.3, 1000),
          DiscreteLaw::zipf(0.5, 10'000),
          DiscreteLaw::zipf(0.8, 100'000)};
}

Outcome hausdorff_reconstruction() {
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  for (const auto& law : ten_laws()) {
    const auto mu = hausdorff_atoms(law);
    for (Length t : {1ULL, 10ULL, 1000ULL, 1'000'000ULL}) {
      worst = std::max(worst, std::abs(reconstruct_from_hausdorff(mu, t) - expected_types(law, t)));
    }
  }
  return {worst <= kTol, fmt::format("max deviation {:.3g} (tol {:.0e})", worst, kTol)};
}

// ---- 4 ---------------------------------------------------------------------

Outcome heaps_sandwich() {
  const auto grid = log_grid(10, 10'000);
  std::string detail;
  bool ok = true;
  for (double beta : {0.4, 0.5, 0.6}) {
    const auto law = DiscreteLaw::zipf(beta, 1'000'000);
    const auto up = check_upper_heaps(law, beta, grid);
    const auto low = check_lower_heaps(ProcessSpec::iid(law), beta, grid);
    ok = ok && up.passed() && low.passed() && low.constants.at("C3") == 1.0;
    detail += fmt::format("b={} C0={:.4g} C2={:.4g} {}/{}; ", beta, up.constants.at("C0"),
                          low.constants.at("C2"), to_string(low.verdict), to_string(up.verdict));
  }
  return {ok, detail};
}

// ---- 5 ---------------------------------------------------------------------

Outcome heaps_exponent() {
  const auto law = DiscreteLaw::zipf(0.5, 1'000'000);
  std::vector<double> x, y;
  for (Length t : log_grid(100, 100'000)) {
    x.push_back(static_cast<double>(t));
    y.push_back(expected_types(law, t));
  }
  const auto fit = fit_power_law(x, y);
  const bool ok = std::abs(fit.exponent - 0.5) <= 0.05 && fit.r_squared >= 0.999;
  return {ok, fmt::format("exponent {:.4f} (0.5 +- 0.05), r2 {:.6f} (>= 0.999)", fit.exponent,
                          fit.r_squared)};
}

// ---- 6 ---------------------------------------------------------------------

Outcome hapax() {
  int passed = 0;
  for (const auto& law : ten_laws()) {
    passed += check_hapax_bound(ProcessSpec::iid(law), log_grid(2, 1'000'000)).passed() ? 1 : 0;
  }
  Eigen::MatrixXd p(2, 2);
  p << 0.9, 0.1, 0.1, 0.9;
  const auto z = DiscreteLaw::zipf(0.5, 1000);
  const auto sticky = ProcessSpec::markov(p, {z, z.shifted(1000)});
  const std::vector<Length> grid = {100, 1000};
  const auto mc = check_hapax_bound(sticky, grid, {200, 6, 0});
  return {passed == 10 && mc.passed(),
          fmt::format("IID {}/10, markov {} (margin {:.4g} incl. 3 sigma)", passed,
                      to_string(mc.verdict), mc.margin)};
}

// ---- 7 ---------------------------------------------------------------------

Outcome santa_fe_decomposition() {
  std::vector<DiscreteLaw> laws;
  for (std::size_t n = 1; n <= 4; ++n) {
    laws.push_back(DiscreteLaw::uniform(n));
    laws.push_back(DiscreteLaw::zipf(0.5, n));
    laws.push_back(DiscreteLaw::zipf(0.8, n));
    laws.push_back(DiscreteLaw::geometric(0.3, n));
  }
  std::mt19937_64 gen(77);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int i = 0; i < 14; ++i) {
    std::vector<double> w(2 + i % 3);
    for (auto& x : w) x = u(gen);
    laws.push_back(DiscreteLaw::normalized(w));
  }
  double worst = 0.0;
  for (const auto& law : laws) {
    const SantaFeConfig cfg{ProcessSpec::iid(law), 1.0, 0};
    for (Length t = 0; t <= 8; ++t) {
      const double lhs = exact_block_entropy(cfg, t);
      const double rhs = exact_block_entropy(ProcessSpec::iid(law), t) + expected_types(law, t);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  const SantaFeConfig anchor{ProcessSpec::iid(DiscreteLaw::uniform(2)), 1.0, 0};
  const double h2 = exact_block_entropy(anchor, 2);
  const bool ok = worst <= 1e-9 && std::abs(h2 - 3.5) <= 1e-12;
  return {ok, fmt::format("{} laws, max deviation {:.3g} (tol 1e-9), anchor H(2) = {}",
                          laws.size(), worst, h2)};
}

// ---- 8 ---------------------------------------------------------------------

Outcome hilberg() {
  const SantaFeConfig cfg{ProcessSpec::iid(DiscreteLaw::zipf(0.5, 1'000'000)), 1.0, 0};
  const auto r = check_hilberg_from_heaps(cfg, 0.5, log_grid(100, 10'000), 64);
  return {r.passed(), fmt::format("{} (C4 {:.4g}, margin {:.4g})", to_string(r.verdict),
                                  r.constants.at("C4"), r.margin)};
}

// ---- 9 ---------------------------------------------------------------------

Outcome scaling_formulas() {
  const double smax = *s_max(100, kInf, 1, 0.5).t_branch;
  const double bn = *scaling_lower_bound(kInf, 0.5, 1, 0.5).bound_n;
  double worst_rel = 0.0;
  for (double t : {1e2, 1e4, 1e6}) {
    const double bt = *scaling_lower_bound(t, kInf, 1e-12, 0.5).bound_t;
    const double limit = std::pow(t, -0.5);
    worst_rel = std::max(worst_rel, std::abs(bt - limit) / limit);
  }
  const bool ok = std::abs(smax - 80.9017) <= 1e-3 && std::abs(bn - 0.4571068) <= 1e-6 &&
                  worst_rel <= 1e-6;
  return {ok, fmt::format("s_max {:.6f}, n-bound {:.8f}, c->0 rel. gap {:.3g}", smax, bn,
                          worst_rel)};
}

// ---- 10 --------------------------------------------------------------------

Outcome exponent_caps() {
  const auto tg = parse_real_grid("log:1e4:1e12");
  const auto ng = parse_real_grid("log:0.001:1000");
  bool ok = true;
  std::string detail;
  for (double beta : {0.5, 0.8}) {
    const auto r = exponent_report(beta, tg, ng);
    ok = ok && std::abs(r.gamma_t() - (1.0 - beta)) <= 1e-3 &&
         std::abs(r.gamma_n() - (1.0 / beta - 1.0)) <= 1e-3;
    detail += fmt::format("b={}: gT {:.5f} gN {:.5f} caps {:.4g}/{:.4g}; ", beta, r.gamma_t(),
                          r.gamma_n(), r.gamma_t_cap, r.gamma_n_cap);
    if (beta == 0.8) {
      ok = ok && std::abs(r.gamma_t_cap - 0.2) <= 1e-12 && std::abs(r.gamma_n_cap - 0.25) <= 1e-12;
    }
  }
  return {ok, detail};
}

// ---- 11 --------------------------------------------------------------------

Outcome memorizer_scaling() {
  const SantaFeConfig cfg{ProcessSpec::iid(DiscreteLaw::zipf(0.5, 1'000'000)), 1.0, 0};
  const auto grid = log_grid(1000, 1'000'000);
  const auto c = memorizer_cross_entropy(cfg, grid, 1000, {50, 10, 11, 0});
  std::vector<double> x;
  std::size_t within = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    x.push_back(static_cast<double>(grid[i]));
    within += std::abs(c.excess_mean[i] - c.exact[i]) <= 3.0 * c.excess_stderr[i] ? 1 : 0;
  }
  const auto fit = fit_power_law(x, c.excess_mean);
  const bool ok = std::abs(fit.exponent + 0.5) <= 0.05 && within == grid.size();
  return {ok, fmt::format("slope {:.4f} (-0.5 +- 0.05), {}/{} points within 3 sigma",
                          fit.exponent, within, grid.size())};
}

// ---- 12 --------------------------------------------------------------------

Outcome ppm_dominance() {
  constexpr Length kT = 8;
  constexpr std::size_t kReps = 100;
  const std::vector<DiscreteLaw> laws = {DiscreteLaw::uniform(2),
                                         DiscreteLaw::from_masses({0.6, 0.3, 0.1}),
                                         DiscreteLaw::zipf(0.5, 4)};
  std::size_t instances = 0, passed = 0;
  double worst = kInf;
  for (std::size_t li = 0; li < laws.size(); ++li) {
    for (double entropy : {1.0, 0.5}) {
      const SantaFeConfig cfg{ProcessSpec::iid(laws[li]), entropy, li};
      const double h = exact_block_entropy(cfg, kT);
      for (unsigned order = 0; order <= 2; ++order) {
        std::vector<double> totals;
        for (std::size_t r = 0; r < kReps; ++r) {
          const auto x = sample_santa_fe(cfg, kT, derive_seed(1000 + order, r));
          std::vector<Token> symbols;
          for (const auto& s : x) symbols.push_back(santa_fe_symbol(s));
          totals.push_back(ppm_codelength(symbols, 2 * laws[li].size(), order).back());
        }
        const auto me = mean_and_stderr(totals);
        const double gap = me.mean + 3.0 * me.std_error - h;
        worst = std::min(worst, gap);
        ++instances;
        passed += gap >= 0.0 ? 1 : 0;
      }
    }
  }
  return {passed == instances, fmt::format("{}/{} instances, smallest (mean + 3 sigma - H) {:.4g}",
                                           passed, instances, worst)};
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "spectrum equals taylor elements (rational)", 30, spectrum_taylor);
  all &= report(2, "consistency sums", 0, consistency_sums);
  all &= report(3, "hausdorff reconstruction", 0, hausdorff_reconstruction);
  all &= report(4, "differential heaps sandwich", 60, heaps_sandwich);
  all &= report(5, "heaps exponent from zipf", 0, heaps_exponent);
  all &= report(6, "hapax bound", 120, hapax);
  all &= report(7, "santa fe decomposition", 0, santa_fe_decomposition);
  all &= report(8, "differential hilberg", 0, hilberg);
  all &= report(9, "scaling formulas", 0, scaling_formulas);
  all &= report(10, "exponent caps", 0, exponent_caps);
  all &= report(11, "memorizer scaling", 300, memorizer_scaling);
  all &= report(12, "source coding dominance", 0, ppm_dominance);
  fmt::print("acceptance: {}\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
