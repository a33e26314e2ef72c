#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "config.hpp"
#include "io.hpp"
#include "powerlaw/block_entropy.hpp"
#include "powerlaw/grid.hpp"
#include "powerlaw/occupancy.hpp"
#include "powerlaw/power_fit.hpp"
#include "powerlaw/sampling.hpp"
#include "powerlaw/scaling.hpp"
#include "powerlaw/verifier.hpp"
#include "powerlaw/vocabulary.hpp"

namespace powerlaw::cli {

namespace {

using json = nlohmann::json;

struct Globals {
  std::string config;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string out = ".";
};

// Everything a command needs besides its own options.
struct Run {
  const std::vector<std::string>& args;
  const Globals& globals;
  std::ostream& out;
  std::optional<LabConfig> config;
  std::uint64_t seed = 0;

  const LabConfig& require_config() const {
    if (!config) throw std::invalid_argument("this command needs --config");
    return *config;
  }
};

std::uint64_t parse_seed(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument(std::string(what) + " '" + text + "' is not a 64-bit seed");
  }
  return v;
}

// --seed, then POWERLAW_LAB_SEED, then the config's seed, then 0.
std::uint64_t resolve_seed(const Globals& g, const std::optional<LabConfig>& cfg) {
  if (g.seed) return *g.seed;
  if (const char* env = std::getenv("POWERLAW_LAB_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "POWERLAW_LAB_SEED");
  }
  if (cfg && cfg->seed) return *cfg->seed;
  return 0;
}

void write_manifest(OutputSet& files, const std::string& command, const Run& run) {
  json j;
  j["tool"] = "powerlaw-lab";
  j["version"] = POWERLAW_LAB_VERSION;
  j["command"] = command;
  j["argv"] = run.args;
  j["config_path"] = run.globals.config;
  j["config_text"] = run.config ? json(run.config->text) : json(nullptr);
  j["seed"] = run.seed;
  j["threads"] = run.globals.threads;
  j["outputs"] = files.digests();
  files.write_untracked("manifest.json", j.dump(2) + "\n");
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json array_of(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(finite_or_null(x));
  return a;
}

double beta_of(const std::optional<double>& flag, const Run& run) {
  if (flag) return *flag;
  if (run.config && run.config->beta) return *run.config->beta;
  throw std::invalid_argument("beta is required (--beta or beta= in [process])");
}

const DiscreteLaw& iid_law_of(const LabConfig& cfg, const char* who) {
  const DiscreteLaw* law = cfg.narration.iid_law();
  if (law == nullptr) throw std::invalid_argument(std::string(who) + " needs an IID narration");
  return *law;
}

// ---- simulate --------------------------------------------------------------

struct SimulateOptions {
  std::string grid;
  std::optional<Length> t;
  std::size_t replicates = 10;
  std::size_t m_max = 0;
  bool dump_tokens = false;
};

int cmd_simulate(const SimulateOptions& o, const Run& run) {
  const LabConfig& cfg = run.require_config();
  std::vector<Length> grid;
  if (!o.grid.empty()) {
    grid = parse_grid(o.grid);
  } else if (o.t) {
    grid = log_grid(1, *o.t);
  } else {
    throw std::invalid_argument("simulate needs --grid or --t");
  }
  const ReplicatedCurve sim = simulate_vocabulary(
      cfg.narration, grid, o.m_max, {o.replicates, run.seed, run.globals.threads});

  std::vector<std::string> header = {"t", "V", "V_stderr", "dV", "dV_stderr"};
  for (std::size_t m = 1; m <= o.m_max; ++m) {
    header.push_back(fmt::format("V{}", m));
    header.push_back(fmt::format("V{}_stderr", m));
  }
  CsvWriter csv(header);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row = {std::to_string(grid[i]), number_text(sim.V_mean[i]),
                                    number_text(sim.V_stderr[i]), number_text(sim.dV_mean[i]),
                                    number_text(sim.dV_stderr[i])};
    for (std::size_t m = 0; m < o.m_max; ++m) {
      row.push_back(number_text(sim.spectrum_mean[m][i]));
      row.push_back(number_text(sim.spectrum_stderr[m][i]));
    }
    csv.row(row);
  }
  OutputSet files(run.globals.out);
  files.write("simulate.csv", csv.text());

  if (o.dump_tokens) {
    std::string text;
    const std::uint64_t seed0 = derive_seed(run.seed, 0);
    if (cfg.santa_fe) {
      for (const auto& x : sample_santa_fe(cfg.santa_fe_config(), grid.back(), seed0)) {
        text += fmt::format("{},{}\n", x.k, x.bit);
      }
    } else {
      for (Token k : sample_narration(cfg.narration, grid.back(), seed0)) {
        text += fmt::format("{}\n", k);
      }
    }
    files.write("tokens.txt", text);
  }
  write_manifest(files, "simulate", run);
  run.out << fmt::format("simulate: {} grid points, {} replicates -> {}\n", grid.size(),
                         o.replicates, run.globals.out);
  return kExitOk;
}

// ---- exact -----------------------------------------------------------------

struct ExactOptions {
  std::string grid;
  std::size_t m_max = 0;
  bool hausdorff = false;
  std::optional<Length> entropy;
};

int cmd_exact(const ExactOptions& o, const Run& run) {
  const LabConfig& cfg = run.require_config();
  OutputSet files(run.globals.out);

  if (!o.grid.empty()) {
    const DiscreteLaw& law = iid_law_of(cfg, "exact occupancy");
    const auto grid = parse_grid(o.grid);
    const OccupancyCurve curve = exact_occupancy_curve(law, grid, o.m_max);
    std::vector<std::string> header = {"t", "V", "dV"};
    for (std::size_t m = 1; m <= o.m_max; ++m) header.push_back(fmt::format("V{}", m));
    CsvWriter csv(header);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::vector<std::string> row = {std::to_string(grid[i]), number_text(curve.V[i]),
                                      number_text(curve.dV[i])};
      for (std::size_t m = 0; m < o.m_max; ++m) row.push_back(number_text(curve.spectrum[m][i]));
      csv.row(row);
    }
    files.write("exact.csv", csv.text());
  }
  if (o.hausdorff) {
    const HausdorffMeasure mu = hausdorff_atoms(iid_law_of(cfg, "hausdorff"));
    CsvWriter csv({"p", "mass"});
    if (mu.mass_at_zero > 0.0) csv.row({"0", number_text(mu.mass_at_zero)});
    for (const auto& a : mu.atoms) csv.row({number_text(a.location), number_text(a.mass)});
    if (mu.mass_at_one > 0.0) csv.row({"1", number_text(mu.mass_at_one)});
    files.write("hausdorff.csv", csv.text());
  }
  if (o.entropy) {
    const EntropyCurve h = cfg.santa_fe ? exact_entropy_curve(cfg.santa_fe_config(), *o.entropy)
                                        : exact_entropy_curve(cfg.narration, *o.entropy);
    CsvWriter csv({"t", "H", "dH"});
    for (std::size_t i = 0; i < h.t.size(); ++i) {
      csv.row({std::to_string(h.t[i]), number_text(h.H[i]), number_text(h.dH[i])});
    }
    files.write("entropy.csv", csv.text());
  }
  if (files.digests().empty()) {
    throw std::invalid_argument("exact needs --grid, --hausdorff or --entropy");
  }
  write_manifest(files, "exact", run);
  run.out << fmt::format("exact: {} file(s) -> {}\n", files.digests().size(), run.globals.out);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::string law;
  std::optional<double> beta;
  std::string grid;
  Length s = 64;
  std::size_t replicates = 200;
  std::string csv;
  std::string column = "V";
};

json report_json(const VerificationReport& r) {
  json j;
  j["law"] = r.law;
  j["relation"] = r.relation;
  j["verdict"] = to_string(r.verdict);
  j["grid"] = r.t;
  j["lhs"] = array_of(r.lhs);
  j["rhs"] = array_of(r.rhs);
  j["slack"] = array_of(r.slack);
  j["margin"] = finite_or_null(r.margin);
  j["violating_index"] = r.violating_index ? json(*r.violating_index) : json(nullptr);
  json c = json::object();
  for (const auto& [k, v] : r.constants) c[k] = finite_or_null(v);
  j["constants"] = c;
  j["notes"] = r.notes;
  return j;
}

void print_report(const VerificationReport& r, std::ostream& out) {
  out << fmt::format("{} ({})\n", r.law, r.relation);
  for (const auto& [k, v] : r.constants) out << fmt::format("  {} = {:.10g}\n", k, v);
  if (r.relation == "shape") {
    out << fmt::format("  {:>12} {:>24}\n", "t", "value");
    for (std::size_t i = 0; i < r.t.size(); ++i) {
      out << fmt::format("  {:>12} {:>24.15g}\n", r.t[i], r.lhs[i]);
    }
  } else {
    out << fmt::format("  {:>12} {:>24} {:>24} {:>12}\n", "t", "lhs", "rhs", "slack");
    for (std::size_t i = 0; i < r.t.size(); ++i) {
      out << fmt::format("  {:>12} {:>24.15g} {:>24.15g} {:>12.4g}\n", r.t[i], r.lhs[i], r.rhs[i],
                         r.slack.empty() ? 0.0 : r.slack[i]);
    }
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << fmt::format("verdict: {} (margin {:.6g})\n", to_string(r.verdict), r.margin);
}

int cmd_verify(const VerifyOptions& o, const Run& run) {
  const MonteCarloOptions mc{o.replicates, run.seed, run.globals.threads};
  auto grid = [&] {
    if (o.grid.empty()) throw std::invalid_argument("verify needs --grid");
    return parse_grid(o.grid);
  };

  VerificationReport report;
  if (o.law == "upper-heaps") {
    const auto& cfg = run.require_config();
    report = check_upper_heaps(iid_law_of(cfg, "upper-heaps"), beta_of(o.beta, run), grid());
  } else if (o.law == "lower-heaps") {
    report = check_lower_heaps(run.require_config().narration, beta_of(o.beta, run), grid(), mc);
  } else if (o.law == "hapax") {
    report = check_hapax_bound(run.require_config().narration, grid(), mc);
  } else if (o.law == "hilberg") {
    report = check_hilberg_from_heaps(run.require_config().santa_fe_config(),
                                      beta_of(o.beta, run), grid(), o.s);
  } else if (o.law == "shape") {
    if (!o.csv.empty()) {
      const CsvTable table = parse_csv(read_file(o.csv));
      const auto ts = table.column("t");
      std::vector<Length> t;
      for (double x : ts) {
        if (!(x >= 0.0) || x != std::floor(x)) {
          throw std::invalid_argument("shape: column t must hold non-negative integers");
        }
        t.push_back(static_cast<Length>(x));
      }
      report = check_shape(t, table.column(o.column), o.column);
    } else {
      const auto g = grid();
      report = check_shape(exact_occupancy_curve(iid_law_of(run.require_config(), "shape"), g));
    }
  } else {
    throw std::invalid_argument("unknown law '" + o.law +
                                "' (upper-heaps, lower-heaps, hapax, hilberg, shape)");
  }

  OutputSet files(run.globals.out);
  files.write("report.json", report_json(report).dump(2) + "\n");
  write_manifest(files, "verify", run);
  print_report(report, run.out);
  switch (report.verdict) {
    case Verdict::pass:
      return kExitOk;
    case Verdict::fail:
      return kExitFail;
    case Verdict::not_applicable:
      return kExitNotApplicable;
  }
  return kExitFail;
}

// ---- scaling ---------------------------------------------------------------

struct ScalingOptions {
  std::optional<double> beta;
  std::string t_grid = "100";
  std::string n_grid = "inf";
  std::string c_grid = "1";
  double c9 = 1.0;
  std::string fit_t_grid = "log:1e4:1e12";
  std::string fit_n_grid = "log:0.001:1000";
  double fit_c = 1e-12;
};

std::string plot_script() {
  return R"(# gnuplot script; reads regime.csv only.
set datafile separator ','
set logscale xy
set xlabel 't (training tokens)'
set ylabel 'lower bound on excess cross entropy (bits/token)'
set key top right
set terminal pngcairo size 900,600
set output 'bound_vs_t.png'
plot 'regime.csv' every ::1 using 1:($6 > 0 ? $6 : 1/0) with linespoints title 't-branch', \
     'regime.csv' every ::1 using 1:($8 > 0 ? $8 : 1/0) with points title 'bound'
set xlabel 'n (parameter budget, bits)'
set output 'bound_vs_n.png'
plot 'regime.csv' every ::1 using 2:($7 > 0 ? $7 : 1/0) with linespoints title 'n-branch'
)";
}

int cmd_scaling(const ScalingOptions& o, const Run& run) {
  const double beta = beta_of(o.beta, run);
  const auto ts = parse_real_grid(o.t_grid);
  const auto ns = parse_real_grid(o.n_grid);
  const auto cs = parse_real_grid(o.c_grid);

  CsvWriter csv({"t", "n", "c", "beta", "smax", "bound_t", "bound_n", "bound", "regime"});
  for (double t : ts) {
    for (double n : ns) {
      for (double c : cs) {
        try {
          const ScalingPoint p = scaling_lower_bound(t, n, c, beta, o.c9);
          const char* regime = p.bound_t && p.bound_n ? "both" : (p.bound_t ? "t" : "n");
          csv.row({number_text(t), number_text(n), number_text(c), number_text(beta),
                   number_text(p.smax.value), number_text(p.bound_t), number_text(p.bound_n),
                   number_text(p.bound), regime});
        } catch (const std::invalid_argument& e) {
          if (std::string(e.what()).find("no admissible") == std::string::npos) throw;
          csv.row({number_text(t), number_text(n), number_text(c), number_text(beta), "", "", "",
                   "", "out"});
        }
      }
    }
  }

  const auto ft = parse_real_grid(o.fit_t_grid);
  const auto fn = parse_real_grid(o.fit_n_grid);
  const ExponentReport rep = exponent_report(beta, ft, fn, o.fit_c);
  auto fit_json = [](const FitResult& f) {
    return json{{"exponent", f.exponent},
                {"intercept", f.intercept},
                {"r2", f.r_squared},
                {"residual_std", f.residual_std},
                {"n_points", f.n_points}};
  };
  json j;
  j["beta"] = beta;
  j["c"] = rep.c;
  j["gamma_t_cap"] = rep.gamma_t_cap;
  j["gamma_n_cap"] = rep.gamma_n_cap;
  j["gamma_t_fitted"] = rep.gamma_t();
  j["gamma_n_fitted"] = rep.gamma_n();
  j["t_fit"] = fit_json(rep.t_fit);
  j["n_fit"] = fit_json(rep.n_fit);
  j["ordering"] = rep.gamma_t_cap < rep.gamma_n_cap ? "underparameterization"
                                                    : "overparameterization";

  OutputSet files(run.globals.out);
  files.write("regime.csv", csv.text());
  files.write("exponents.json", j.dump(2) + "\n");
  files.write("plot.gp", plot_script());
  write_manifest(files, "scaling", run);
  run.out << fmt::format("caps: gamma_T <= {:.6g}, gamma_N <= {:.6g}\n", rep.gamma_t_cap,
                         rep.gamma_n_cap);
  run.out << fmt::format("fitted: gamma_T = {:.6g}, gamma_N = {:.6g}\n", rep.gamma_t(),
                         rep.gamma_n());
  return kExitOk;
}

// ---- fit -------------------------------------------------------------------

struct FitOptions {
  std::string csv;
  std::string x = "t";
  std::string y = "V";
  std::optional<double> x_min;
  std::optional<double> x_max;
};

int cmd_fit(const FitOptions& o, const Run& run) {
  if (o.csv.empty()) throw std::invalid_argument("fit needs --csv");
  const CsvTable table = parse_csv(read_file(o.csv));
  const auto xs = table.column(o.x);
  const auto ys = table.column(o.y);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (o.x_min && xs[i] < *o.x_min) continue;
    if (o.x_max && xs[i] > *o.x_max) continue;
    x.push_back(xs[i]);
    y.push_back(ys[i]);
  }
  const FitResult f = fit_power_law(x, y);
  const json j{{"exponent", f.exponent},
               {"intercept", f.intercept},
               {"r2", f.r_squared},
               {"residual_std", f.residual_std},
               {"n_points", f.n_points}};
  OutputSet files(run.globals.out);
  files.write("fit.json", j.dump(2) + "\n");
  write_manifest(files, "fit", run);
  run.out << fmt::format("exponent {:.6g}, r2 {:.6g}, {} points\n", f.exponent, f.r_squared,
                         f.n_points);
  return kExitOk;
}

// ---- replay ----------------------------------------------------------------

// Drops "--name value" and "--name=value" for the given option names.
std::vector<std::string> without_options(const std::vector<std::string>& args,
                                         const std::vector<std::string>& names) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool drop = false;
    for (const auto& n : names) {
      if (args[i] == n) {
        drop = true;
        ++i;
        break;
      }
      if (args[i].rfind(n + "=", 0) == 0) {
        drop = true;
        break;
      }
    }
    if (!drop) kept.push_back(args[i]);
  }
  return kept;
}

int cmd_replay(const std::string& manifest_path, const Run& run, std::ostream& err) {
  const json m = json::parse(read_file(manifest_path));
  const auto argv = m.at("argv").get<std::vector<std::string>>();
  std::string dir = run.globals.out;
  if (dir == ".") dir = (std::filesystem::path(manifest_path).parent_path() / "replay").string();
  std::filesystem::create_directories(dir);

  std::vector<std::string> args = without_options(argv, {"--config", "--out", "--seed"});
  if (!m.at("config_text").is_null()) {
    const std::string cfg_path = (std::filesystem::path(dir) / "replay-config.ini").string();
    OutputSet(dir).write_untracked("replay-config.ini", m.at("config_text").get<std::string>());
    args.insert(args.begin(), {"--config", cfg_path});
  }
  args.insert(args.begin(), {"--seed", std::to_string(m.at("seed").get<std::uint64_t>()),
                             "--out", dir});
  const int code = run_cli(args, run.out, err);

  const json again = json::parse(read_file((std::filesystem::path(dir) / "manifest.json").string()));
  const auto before = m.at("outputs").get<std::map<std::string, std::string>>();
  const auto after = again.at("outputs").get<std::map<std::string, std::string>>();
  bool same = before == after;
  for (const auto& [name, digest] : before) {
    const auto it = after.find(name);
    const bool ok = it != after.end() && it->second == digest;
    run.out << fmt::format("{} {}\n", ok ? "identical" : "DIFFERS  ", name);
  }
  if (!same) {
    run.out << "replay: outputs differ\n";
    return kExitFail;
  }
  run.out << fmt::format("replay: {} output(s) reproduced (command exit {})\n", before.size(),
                         code);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zipf, Heaps, Hilberg and neural scaling laboratory", "powerlaw-lab"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed_flag = 0;
  app.add_option("--config", g.config, "Process config (sectioned key=value file)");
  auto* seed_opt = app.add_option("--seed", seed_flag, "Base seed (else $POWERLAW_LAB_SEED)");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware parallelism)");
  app.add_option("--out", g.out, "Output directory");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo vocabulary and spectrum curves");
  simulate->add_option("--grid", sim.grid, "Grid: a,b,c | log:lo:hi[:per_decade] | range:lo:hi");
  simulate->add_option("--t", sim.t, "Stream length (log grid 1..t when --grid is absent)");
  simulate->add_option("--replicates", sim.replicates, "Replicates")->check(CLI::PositiveNumber);
  simulate->add_option("--m-max", sim.m_max, "Spectrum columns V(t|1..m)");
  simulate->add_flag("--dump-tokens", sim.dump_tokens, "Also write replicate 0 as tokens.txt");

  ExactOptions ex;
  auto* exact = app.add_subcommand("exact", "Exact occupancy, Hausdorff atoms, block entropy");
  exact->add_option("--grid", ex.grid, "Grid for V, dV and the spectrum");
  exact->add_option("--m-max", ex.m_max, "Spectrum columns V(t|1..m)");
  exact->add_flag("--hausdorff", ex.hausdorff, "Write the Hausdorff measure (p, mass)");
  exact->add_option("--entropy", ex.entropy, "Exact block entropy H(0..T) by enumeration");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check one law; exit 0 pass, 2 fail, 3 n/a");
  verify->add_option("law", ver.law, "upper-heaps | lower-heaps | hapax | hilberg | shape")
      ->required();
  verify->add_option("--beta", ver.beta, "Tail exponent");
  verify->add_option("--grid", ver.grid, "Grid of t values");
  verify->add_option("--s", ver.s, "Test block length (hilberg)")->check(CLI::PositiveNumber);
  verify->add_option("--replicates", ver.replicates, "Monte Carlo replicates");
  verify->add_option("--csv", ver.csv, "Curve to check (shape)");
  verify->add_option("--column", ver.column, "Column of --csv to check (shape)");

  ScalingOptions sc;
  auto* scaling = app.add_subcommand("scaling", "Scaling bound regimes and exponent caps");
  scaling->add_option("--beta", sc.beta, "Heaps exponent");
  scaling->add_option("--t-grid", sc.t_grid, "Training lengths");
  scaling->add_option("--n-grid", sc.n_grid, "Parameter budgets in bits (inf allowed)");
  scaling->add_option("--c-grid", sc.c_grid, "Compute budgets in bits");
  scaling->add_option("--c9", sc.c9, "Constant multiplying the bound");
  scaling->add_option("--fit-t-grid", sc.fit_t_grid, "t values for the gamma_T fit");
  scaling->add_option("--fit-n-grid", sc.fit_n_grid, "n values for the gamma_N fit");
  scaling->add_option("--fit-c", sc.fit_c, "Compute budget of the gamma_T fit");

  FitOptions ft;
  auto* fit = app.add_subcommand("fit", "Log-log least squares on two CSV columns");
  fit->add_option("--csv", ft.csv, "Input CSV")->required();
  fit->add_option("--x", ft.x, "x column");
  fit->add_option("--y", ft.y, "y column");
  fit->add_option("--x-min", ft.x_min, "Smallest x used");
  fit->add_option("--x-max", ft.x_max, "Largest x used");

  std::string manifest;
  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare output digests");
  replay->add_option("manifest", manifest, "manifest.json")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (seed_opt->count() > 0) g.seed = seed_flag;
    Run run{args, g, out, std::nullopt, 0};
    if (!g.config.empty()) run.config = load_config(g.config);
    run.seed = resolve_seed(g, run.config);

    if (*simulate) return cmd_simulate(sim, run);
    if (*exact) return cmd_exact(ex, run);
    if (*verify) return cmd_verify(ver, run);
    if (*scaling) return cmd_scaling(sc, run);
    if (*fit) return cmd_fit(ft, run);
    if (*replay) return cmd_replay(manifest, run, err);
  } catch (const std::exception& e) {
    err << "powerlaw-lab: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace powerlaw::cli
