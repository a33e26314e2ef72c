#include "powerlaw/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "powerlaw/parallel.hpp"
#include "powerlaw/sampling.hpp"
#include "powerlaw/seeding.hpp"
#include "powerlaw/vocabulary.hpp"

namespace powerlaw {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

namespace {

void require_grid(std::span<const Length> grid, Length min_t, const char* who) {
  if (grid.empty()) throw std::invalid_argument(std::string(who) + ": empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < min_t) {
      throw std::invalid_argument(std::string(who) + ": grid values must be >= " +
                                  std::to_string(min_t));
    }
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw std::invalid_argument(std::string(who) + ": grid must be strictly increasing");
    }
  }
}

void require_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
}

// Fills margin, violating_index and verdict from lhs, rhs and slack.
void settle(VerificationReport& r) {
  r.margin = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (std::size_t i = 0; i < r.t.size(); ++i) {
    double gap = r.relation == "<=" ? r.rhs[i] - r.lhs[i] : r.lhs[i] - r.rhs[i];
    if (!r.slack.empty()) gap += r.slack[i];
    r.margin = std::min(r.margin, gap);
    const double tol = kVerifyTolerance * std::max(std::abs(r.lhs[i]), std::abs(r.rhs[i]));
    if (!(gap >= -tol) && ok) {
      ok = false;
      r.violating_index = i;
    }
  }
  r.verdict = ok ? Verdict::pass : Verdict::fail;
}

double power(double t, double e) { return std::pow(t, e); }

}  // namespace

VerificationReport check_upper_heaps(const DiscreteLaw& law, double beta,
                                     std::span<const Length> grid) {
  require_beta(beta);
  require_grid(grid, 1, "upper-heaps");
  const TailConstants tail = zipf_tail_constants(law, beta);
  const double c1 = std::tgamma(1.0 - beta) * tail.c0;

  VerificationReport r;
  r.law = "upper-heaps";
  r.relation = "<=";
  r.constants = {{"beta", beta}, {"C0", tail.c0}, {"C1", c1}, {"p_floor", tail.p_floor}};
  for (Length t : grid) {
    r.t.push_back(t);
    r.lhs.push_back(type_increment(law, t));
    r.rhs.push_back(c1 * power(static_cast<double>(t), beta - 1.0));
  }
  if (static_cast<double>(grid.back()) * tail.p_floor > 1.0) {
    r.notes.push_back("grid extends past 1/p_floor, where truncation dominates Delta V");
  }
  settle(r);
  return r;
}

LowerHeapsConstants lower_heaps_constants(const ProcessSpec& spec, double beta, Length t_max) {
  require_beta(beta);
  if (t_max == 0) throw std::invalid_argument("lower-heaps: t_max must be positive");
  LowerHeapsConstants k;
  k.c3 = mixing_constant(spec);
  const DiscreteLaw marginal = marginal_law(spec);
  k.p_lower = 1.0 / (4.0 * k.c3 * static_cast<double>(t_max));
  k.c2 = zipf_tail_constants(marginal, beta, k.p_lower).c2;
  k.c2_two_decades_up = k.c2;
  if (100.0 * k.p_lower < 1.0) {
    k.c2_two_decades_up = zipf_tail_constants(marginal, beta, 100.0 * k.p_lower).c2;
  }
  k.c4 = power(4.0 * k.c3, beta - 1.0) * k.c2 / 2.0;
  if (!(k.c2 > 0.0)) {
    k.reason = "C2 vanishes on the grid's p-range: the tail hypothesis fails";
  } else if (k.c2 < 0.5 * k.c2_two_decades_up) {
    k.reason = "C2 decays toward small p: the tail is lighter than p^(1-beta)";
  } else {
    k.applicable = true;
  }
  return k;
}

VerificationReport check_lower_heaps(const ProcessSpec& spec, double beta,
                                     std::span<const Length> grid, const MonteCarloOptions& mc) {
  require_grid(grid, 1, "lower-heaps");
  const LowerHeapsConstants k = lower_heaps_constants(spec, beta, grid.back());

  VerificationReport r;
  r.law = "lower-heaps";
  r.relation = ">=";
  r.constants = {{"beta", beta}, {"C2", k.c2}, {"C3", k.c3}, {"C4", k.c4},
                 {"p_lower", k.p_lower}};
  for (Length t : grid) {
    r.t.push_back(t);
    r.rhs.push_back(k.c4 * power(static_cast<double>(t), beta - 1.0));
  }
  if (const DiscreteLaw* law = spec.iid_law()) {
    for (Length t : grid) r.lhs.push_back(type_increment(*law, t));
  } else {
    const ReplicatedCurve sim =
        simulate_vocabulary(spec, grid, 0, {mc.replicates, mc.seed, mc.threads});
    r.lhs = sim.dV_mean;
    for (double se : sim.dV_stderr) r.slack.push_back(3.0 * se);
    r.notes.push_back("Monte Carlo: " + std::to_string(mc.replicates) + " replicates");
  }
  settle(r);
  if (!k.applicable) {
    r.verdict = Verdict::not_applicable;
    r.violating_index.reset();
    r.notes.push_back(k.reason);
  }
  return r;
}

VerificationReport check_hapax_bound(const ProcessSpec& spec, std::span<const Length> grid,
                                     const MonteCarloOptions& mc) {
  require_grid(grid, 2, "hapax");
  VerificationReport r;
  r.law = "hapax";
  r.relation = "<=";
  auto half = [](Length t) { return (t + 1) / 2; };

  if (const DiscreteLaw* law = spec.iid_law()) {
    for (Length t : grid) {
      r.t.push_back(t);
      r.lhs.push_back(spectrum_element(*law, t, 1) / static_cast<double>(t));
      r.rhs.push_back(type_increment(*law, half(t)));
    }
    settle(r);
    return r;
  }

  if (mc.replicates < 2) throw std::invalid_argument("hapax: need at least 2 replicates");
  std::vector<Length> points(grid.begin(), grid.end());
  for (Length t : grid) points.push_back(half(t));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  auto index_of = [&](Length t) {
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), t) -
                                    points.begin());
  };

  const NarrationSampler sampler(spec);
  std::vector<OccupancyCurve> runs(mc.replicates);
  parallel_for(mc.replicates, mc.threads, [&](std::size_t rep) {
    const auto tokens = sampler.generate(points.back() + 1, derive_seed(mc.seed, rep));
    runs[rep] = vocabulary_curve(tokens, points, 1);
  });

  std::vector<double> lhs(mc.replicates), rhs(mc.replicates), diff(mc.replicates);
  for (Length t : grid) {
    const std::size_t it = index_of(t);
    const std::size_t ih = index_of(half(t));
    for (std::size_t rep = 0; rep < mc.replicates; ++rep) {
      lhs[rep] = runs[rep].spectrum[0][it] / static_cast<double>(t);
      rhs[rep] = runs[rep].dV[ih];
      diff[rep] = lhs[rep] - rhs[rep];
    }
    r.t.push_back(t);
    r.lhs.push_back(mean_and_stderr(lhs).mean);
    r.rhs.push_back(mean_and_stderr(rhs).mean);
    r.slack.push_back(3.0 * mean_and_stderr(diff).std_error);
  }
  r.notes.push_back("Monte Carlo: " + std::to_string(mc.replicates) +
                    " replicates, paired difference");
  settle(r);
  return r;
}

VerificationReport check_hilberg_from_heaps(const SantaFeConfig& config, double beta,
                                            std::span<const Length> grid, Length s) {
  const DiscreteLaw* law = config.narration.iid_law();
  if (law == nullptr) throw std::invalid_argument("hilberg: narration must be IID");
  if (s == 0) throw std::invalid_argument("hilberg: test length must be positive");
  require_grid(grid, 0, "hilberg");
  const LowerHeapsConstants k = lower_heaps_constants(config.narration, beta, grid.back() + s);
  const double c7 = config.knowledge_entropy;
  const double h = law->entropy_bits();

  VerificationReport r;
  r.law = "hilberg";
  r.relation = ">=";
  r.constants = {{"beta", beta}, {"C2", k.c2}, {"C3", k.c3}, {"C4", k.c4},
                 {"C7", c7},     {"h", h},     {"s", static_cast<double>(s)}};
  for (Length t : grid) {
    r.t.push_back(t);
    r.lhs.push_back(santa_fe_conditional_rate(config, t, s) - h);
    r.rhs.push_back(c7 * k.c4 * power(static_cast<double>(t + s), beta - 1.0));
  }
  settle(r);
  if (!k.applicable) {
    r.verdict = Verdict::not_applicable;
    r.violating_index.reset();
    r.notes.push_back(k.reason);
  }
  return r;
}

VerificationReport check_shape(std::span<const Length> t, std::span<const double> f,
                               const std::string& name) {
  if (t.size() != f.size()) throw std::invalid_argument("shape: grid and values differ in length");
  require_grid(t, 0, "shape");

  VerificationReport r;
  r.law = "shape";
  r.relation = "shape";
  r.t.assign(t.begin(), t.end());
  r.lhs.assign(f.begin(), f.end());
  r.margin = std::numeric_limits<double>::infinity();
  r.notes.push_back(name);

  double scale = 1.0;
  for (double v : f) scale = std::max(scale, std::abs(v));
  const double tol = kVerifyTolerance * scale;
  std::optional<std::size_t> bad;
  std::string why;
  auto record = [&](double gap, double allowance, std::size_t at, const char* what) {
    r.margin = std::min(r.margin, gap);
    if (gap < -allowance && (!bad || at < *bad)) {
      bad = at;
      why = what;
    }
  };

  auto dt = [&](std::size_t i) { return static_cast<double>(t[i + 1] - t[i]); };
  auto slope = [&](std::size_t i) { return (f[i + 1] - f[i]) / dt(i); };

  if (t[0] == 0) record(-std::abs(f[0]), tol, 0, "f(0) != 0");
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    record(f[i + 1] - f[i], 2.0 * tol, i + 1, "decrease");
  }
  for (std::size_t i = 0; i + 2 < t.size(); ++i) {
    record(slope(i) - slope(i + 1), 2.0 * tol / dt(i) + 2.0 * tol / dt(i + 1), i + 1,
           "convexity");
  }
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] == 0) continue;
    const double a = f[i] / static_cast<double>(t[i]);
    const double b = f[i + 1] / static_cast<double>(t[i + 1]);
    record(a - b, tol / static_cast<double>(t[i]) + tol / static_cast<double>(t[i + 1]), i + 1,
           "f(t)/t increases");
  }

  if (!std::isfinite(r.margin)) r.margin = 0.0;
  r.verdict = bad ? Verdict::fail : Verdict::pass;
  r.violating_index = bad;
  if (bad) r.notes.push_back(why + " at index " + std::to_string(*bad));
  return r;
}

VerificationReport check_shape(const OccupancyCurve& curve) {
  return check_shape(curve.t, curve.V, "V");
}

VerificationReport check_shape(const EntropyCurve& curve) {
  return check_shape(curve.t, curve.H, "H");
}

}  // namespace powerlaw
