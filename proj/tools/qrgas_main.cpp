// qrgas command line tool: homogeneous quasi-resonant relaxation experiments.
//
// Subcommands:
//   simulate   particle (DSMC) run, temperature series CSV
//   ode        Landau-Teller ODE solve, temperature series CSV
//   compare    both dynamics on one grid, error metrics and plots
//   sweep      relative-L2 error vs epsilon with a power-law fit
//   maxtest    Maxwellianization timing from non-equilibrium initial data
//   verify     strip-expansion and resonant-limit quadrature checks
//
// Configuration is a flat "key = value" file plus command line overrides
// (flags win); unknown keys are errors. Every run writes a manifest listing
// the resolved configuration and each emitted file, and a failed run removes
// its partial outputs.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrgas/analytics.hpp"
#include "qrgas/dsmc.hpp"
#include "qrgas/experiments.hpp"
#include "qrgas/io.hpp"
#include "qrgas/landau_teller.hpp"
#include "qrgas/svg.hpp"

namespace fs = std::filesystem;
using namespace qrgas;

namespace {

struct Settings {
  GasModel model;
  bool gamma_explicit = false;
  InitialCondition initial = [] {
    InitialCondition init;
    init.T_k = 1.0;
    init.T_i = 50.0;  // canonical hot-internal start
    return init;
  }();
  std::string initial_kind = "two_temp";
  std::size_t particles = 100000;
  std::size_t output_points = 200;
  std::uint64_t seed = 12345;
  double t_end = 0.0;  // 0: relaxation horizon from the ODE
  double threshold = 0.01;
  double sweep_eps_min = 0.2;
  double sweep_eps_max = 0.5;
  std::size_t sweep_count = 16;
  unsigned jobs = 1;
  std::size_t hz_max_n = 10000;
  bool check_conservation = false;
  std::size_t snapshots = 0;
  std::string out_dir = "qrgas_out";

  void apply_key(const std::string& key, const std::string& value) {
    auto as_double = [&] { return std::stod(value); };
    auto as_size = [&] { return static_cast<std::size_t>(std::stoull(value)); };
    if (key == "epsilon") model.epsilon = as_double();
    else if (key == "m") model.m = as_double();
    else if (key == "delta") model.delta = as_double();
    else if (key == "kappa_k") model.kappa_k = as_double();
    else if (key == "kappa_i") model.kappa_i = as_double();
    else if (key == "gamma") { model.gamma = as_double(); gamma_explicit = true; }
    else if (key == "C_B") model.C_B = as_double();
    else if (key == "rho") initial.rho = as_double();
    else if (key == "T_k0") initial.T_k = as_double();
    else if (key == "T_i0") initial.T_i = as_double();
    else if (key == "ux") initial.u.x = as_double();
    else if (key == "uy") initial.u.y = as_double();
    else if (key == "uz") initial.u.z = as_double();
    else if (key == "anis_x") initial.anisotropy.x = as_double();
    else if (key == "anis_y") initial.anisotropy.y = as_double();
    else if (key == "anis_z") initial.anisotropy.z = as_double();
    else if (key == "initial") initial_kind = value;
    else if (key == "particles") particles = as_size();
    else if (key == "output_points") output_points = as_size();
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "t_end") t_end = as_double();
    else if (key == "threshold") threshold = as_double();
    else if (key == "sweep_eps_min") sweep_eps_min = as_double();
    else if (key == "sweep_eps_max") sweep_eps_max = as_double();
    else if (key == "sweep_count") sweep_count = as_size();
    else if (key == "jobs") jobs = static_cast<unsigned>(std::stoul(value));
    else if (key == "hz_max_n") hz_max_n = as_size();
    else if (key == "check_conservation") check_conservation = value == "1" || value == "true";
    else if (key == "snapshots") snapshots = as_size();
    else if (key == "out_dir") out_dir = value;
    else throw std::runtime_error("unknown configuration key: " + key);
  }

  void finalize() {
    if (!gamma_explicit) model.gamma = model.delta + 1.0;
    if (initial_kind == "two_temp") initial.kind = InitialCondition::Kind::TwoTempMaxwellian;
    else if (initial_kind == "uniform") initial.kind = InitialCondition::Kind::Uniform;
    else if (initial_kind == "anisotropic")
      initial.kind = InitialCondition::Kind::AnisotropicNormalUniform;
    else throw std::runtime_error("unknown initial kind: " + initial_kind);
    model.validate();
  }

  experiments::ExperimentConfig experiment() const {
    experiments::ExperimentConfig cfg;
    cfg.model = model;
    cfg.initial = initial;
    cfg.particles = particles;
    cfg.output_points = output_points;
    cfg.seed = seed;
    cfg.threshold = threshold;
    cfg.t_end = t_end;
    cfg.jobs = jobs;
    cfg.dsmc.check_conservation = check_conservation;
    return cfg;
  }

  std::map<std::string, std::string> resolved() const {
    std::map<std::string, std::string> kv;
    kv["epsilon"] = format_full(model.epsilon);
    kv["m"] = format_full(model.m);
    kv["delta"] = format_full(model.delta);
    kv["kappa_k"] = format_full(model.kappa_k);
    kv["kappa_i"] = format_full(model.kappa_i);
    kv["gamma"] = format_full(model.gamma);
    kv["C_B"] = format_full(model.C_B);
    kv["rho"] = format_full(initial.rho);
    kv["T_k0"] = format_full(initial.T_k);
    kv["T_i0"] = format_full(initial.T_i);
    kv["ux"] = format_full(initial.u.x);
    kv["uy"] = format_full(initial.u.y);
    kv["uz"] = format_full(initial.u.z);
    kv["initial"] = initial_kind;
    kv["particles"] = std::to_string(particles);
    kv["output_points"] = std::to_string(output_points);
    kv["seed"] = std::to_string(seed);
    kv["t_end"] = format_full(t_end);
    kv["threshold"] = format_full(threshold);
    kv["jobs"] = std::to_string(jobs);
    return kv;
  }
};

void load_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string str) {
      const auto b = str.find_first_not_of(" \t\r");
      const auto e = str.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : str.substr(b, e - b + 1);
    };
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    s.apply_key(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
}

// Tracks emitted files so a failed run leaves no partial outputs behind.
class OutputTracker {
 public:
  explicit OutputTracker(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }
  fs::path path(const std::string& name) {
    files_.push_back(dir_ / name);
    return files_.back();
  }
  void discard_all() {
    for (const auto& f : files_) {
      std::error_code ec;
      fs::remove(f, ec);
    }
  }

 private:
  fs::path dir_;
  std::vector<fs::path> files_;
};

template <class Fn>
int with_cleanup(const std::string& out_dir, Fn&& fn) {
  OutputTracker out(out_dir);
  try {
    return fn(out);
  } catch (...) {
    out.discard_all();
    throw;
  }
}

void add_common_config(RunManifest& manifest, const Settings& s) {
  for (const auto& [k, v] : s.resolved()) manifest.set_config(k, v);
}

std::vector<double> uniform_grid(double t_end, std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t k = 0; k + 1 < points; ++k)
    g[k] = t_end * static_cast<double>(k) / static_cast<double>(points - 1);
  g[points - 1] = t_end;  // exact horizon, immune to rounding
  return g;
}

double resolve_t_end(const Settings& s) {
  if (s.t_end > 0.0) return s.t_end;
  return relaxation_horizon(s.initial.T_i, s.initial.T_k, s.initial.rho, s.model, s.threshold);
}

int cmd_simulate(const Settings& s) {
  return with_cleanup(s.out_dir, [&](OutputTracker& out) {
    const double t_end = resolve_t_end(s);

    SimulationConfig cfg;
    cfg.model = s.model;
    cfg.initial = s.initial;
    cfg.particles = s.particles;
    cfg.t_end = t_end;
    cfg.output_points = s.output_points;
    cfg.seed = s.seed;
    cfg.dsmc.check_conservation = s.check_conservation;

    RunManifest manifest("simulate");
    add_common_config(manifest, s);
    manifest.set_config("resolved_t_end", format_full(t_end));

    std::size_t next_snapshot = 0;
    std::vector<double> snapshot_times;
    if (s.snapshots > 0) snapshot_times = uniform_grid(t_end, s.snapshots);

    SnapshotCallback cb;
    if (s.snapshots > 0) {
      cb = [&](double t, const Ensemble& ens) {
        if (next_snapshot < snapshot_times.size() && t >= snapshot_times[next_snapshot] - 1e-15) {
          std::ostringstream name;
          name << "snapshot_" << next_snapshot << ".txt";
          const fs::path p = out.path(name.str());
          write_snapshot(p, ens.particles());
          manifest.add_output(p, "particle snapshot (vx vy vz I)");
          ++next_snapshot;
        }
      };
    }

    CollisionStats stats;
    const TemperatureSeries series = run_simulation(cfg, cb, &stats);

    const fs::path csv = out.path("series.csv");
    write_csv(csv,
              std::vector<CsvColumn>{{"t", series.times}, {"T_k", series.T_k}, {"T_i", series.T_i}});
    manifest.add_output(csv, "temperature series");
    manifest.set_config("T_eq", format_full(series.T_eq));
    manifest.set_config("collisions", std::to_string(stats.accepted));
    manifest.write(out.path("run_manifest.json"));
    std::cout << "simulate: " << stats.accepted << " collisions, T_eq = " << series.T_eq
              << ", outputs in " << s.out_dir << "\n";
    return 0;
  });
}

int cmd_ode(const Settings& s) {
  return with_cleanup(s.out_dir, [&](OutputTracker& out) {
    const double t_end = resolve_t_end(s);
    const std::vector<double> grid = uniform_grid(t_end, s.output_points);
    const LTTrajectory traj =
        solve_landau_teller(s.initial.T_i, s.initial.T_k, s.initial.rho, s.model, t_end, grid);
    RunManifest manifest("ode");
    add_common_config(manifest, s);
    manifest.set_config("resolved_t_end", format_full(t_end));
    const fs::path csv = out.path("ode_series.csv");
    write_csv(csv, std::vector<CsvColumn>{{"t", traj.times}, {"T_k", traj.T_k}, {"T_i", traj.T_i}});
    manifest.add_output(csv, "relaxation ODE series");
    manifest.write(out.path("run_manifest.json"));
    std::cout << "ode: wrote " << csv.string() << "\n";
    return 0;
  });
}

int cmd_compare(const Settings& s) {
  return with_cleanup(s.out_dir, [&](OutputTracker& out) {
    const experiments::CompareResult res = experiments::run_compare(s.experiment());

    RunManifest manifest("compare");
    add_common_config(manifest, s);
    manifest.set_config("tau", format_full(res.tau));
    manifest.set_config("mean_rel_l2", format_full(res.mean_rel_l2));

    const fs::path csv = out.path("compare.csv");
    write_csv(csv, std::vector<CsvColumn>{{"t", res.dsmc.times},
                                          {"Ti_dsmc", res.dsmc.T_i},
                                          {"Tk_dsmc", res.dsmc.T_k},
                                          {"Ti_lt", res.lt.T_i},
                                          {"Tk_lt", res.lt.T_k},
                                          {"rel_err", res.rel_err}});
    manifest.add_output(csv, "temperature comparison");

    const fs::path err_csv = out.path("compare_error.csv");
    write_csv(err_csv, std::vector<CsvColumn>{{"t", res.dsmc.times}, {"rel_err", res.rel_err}});
    manifest.add_output(err_csv, "relative error series");

    SvgChart ti_chart;
    ti_chart.title = "Internal temperature relaxation";
    ti_chart.x_label = "t";
    ti_chart.y_label = "T_i";
    ti_chart.series.push_back({"DSMC", res.dsmc.times, res.dsmc.T_i, "#202020", false, false});
    ti_chart.series.push_back({"Landau-Teller", res.lt.times, res.lt.T_i, "#888888", true, false});
    ti_chart.series.push_back({"T_eq",
                               {res.dsmc.times.front(), res.dsmc.times.back()},
                               {res.dsmc.T_eq, res.dsmc.T_eq},
                               "#bbbbbb",
                               true,
                               false});
    const fs::path ti_svg = out.path("compare_ti.svg");
    ti_chart.write(ti_svg);
    manifest.add_output(ti_svg, "T_i curves");

    SvgChart err_chart;
    err_chart.title = "Relative error of the particle run against the ODE";
    err_chart.x_label = "t";
    err_chart.y_label = "relative error";
    err_chart.log_y = true;
    err_chart.series.push_back({"rel. error", res.dsmc.times, res.rel_err, "#202020", false, false});
    const fs::path err_svg = out.path("compare_relerr.svg");
    err_chart.write(err_svg);
    manifest.add_output(err_svg, "relative error, semi-log");

    const fs::path sum_csv = out.path("compare_summary.csv");
    write_csv(sum_csv, std::vector<CsvColumn>{{"tau", {res.tau}},
                                              {"mean_rel_l2", {res.mean_rel_l2}},
                                              {"T_eq", {res.dsmc.T_eq}}});
    manifest.add_output(sum_csv, "summary metrics");

    manifest.write(out.path("run_manifest.json"));
    std::cout << "compare: tau = " << res.tau << ", mean relative L2 error = " << res.mean_rel_l2
              << "\n";
    return 0;
  });
}

int cmd_sweep(const Settings& s) {
  return with_cleanup(s.out_dir, [&](OutputTracker& out) {
    const std::vector<double> eps =
        experiments::log_uniform_grid(s.sweep_eps_min, s.sweep_eps_max, s.sweep_count);
    const experiments::SweepResult res = experiments::run_sweep(s.experiment(), eps);

    RunManifest manifest("sweep");
    add_common_config(manifest, s);
    manifest.set_config("sweep_eps_min", format_full(s.sweep_eps_min));
    manifest.set_config("sweep_eps_max", format_full(s.sweep_eps_max));
    manifest.set_config("sweep_count", std::to_string(s.sweep_count));

    std::vector<double> col_eps, col_tau, col_err, col_ok;
    for (const auto& pt : res.points) {
      col_eps.push_back(pt.epsilon);
      col_tau.push_back(pt.tau);
      col_err.push_back(pt.rel_l2);
      col_ok.push_back(pt.ok ? 1.0 : 0.0);
      if (!pt.ok) std::cerr << "sweep: epsilon " << pt.epsilon << " failed: " << pt.error << "\n";
    }
    const fs::path csv = out.path("sweep.csv");
    write_csv(csv, std::vector<CsvColumn>{
                       {"epsilon", col_eps}, {"tau", col_tau}, {"rel_l2", col_err}, {"ok", col_ok}});
    manifest.add_output(csv, "per-epsilon relative L2 error");

    int rc = 0;
    if (res.fit_ok) {
      const fs::path fit_csv = out.path("sweep_fit.csv");
      write_csv(fit_csv, std::vector<CsvColumn>{{"exponent", {res.fit.exponent}},
                                                {"prefactor", {res.fit.prefactor}},
                                                {"log_rms_residual", {res.fit.residual}}});
      manifest.add_output(fit_csv, "power-law fit");
      manifest.set_config("fit_exponent", format_full(res.fit.exponent));
      std::cout << "sweep: fitted error ~ eps^" << res.fit.exponent << " (prefactor "
                << res.fit.prefactor << ")\n";

      SvgChart chart;
      chart.title = "Average relative L2 error vs epsilon";
      chart.x_label = "epsilon";
      chart.y_label = "relative L2 error";
      chart.log_x = true;
      chart.log_y = true;
      std::vector<double> fit_y;
      for (double e : col_eps) fit_y.push_back(res.fit.prefactor * std::pow(e, res.fit.exponent));
      chart.series.push_back({"measured", col_eps, col_err, "#202020", false, true});
      chart.series.push_back({"fit", col_eps, fit_y, "#888888", true, false});
      const fs::path svg = out.path("sweep_error.svg");
      chart.write(svg);
      manifest.add_output(svg, "error vs epsilon, log-log");
    } else {
      std::cout << (res.degenerate ? "sweep: degenerate input (errors identically zero); no fit\n"
                                   : "sweep: too few successful points for a fit\n");
      manifest.set_config("fit", res.degenerate ? "degenerate" : "unavailable");
      if (!res.degenerate) rc = 1;
    }
    manifest.write(out.path("run_manifest.json"));
    return rc;
  });
}

int cmd_maxtest(const Settings& s) {
  return with_cleanup(s.out_dir, [&](OutputTracker& out) {
    const experiments::MaxwellianizationResult res =
        experiments::run_maxwellianization(s.experiment(), s.hz_max_n);

    RunManifest manifest("maxtest");
    add_common_config(manifest, s);
    manifest.set_config("hz_max_n", std::to_string(s.hz_max_n));

    // Report CSV schema: name, statistic, p_value, n, time.
    const fs::path rep_csv = out.path("maxtest.csv");
    {
      std::ofstream file(rep_csv);
      file << "name,statistic,p_value,n,time\n";
      for (const auto& r : res.reports)
        file << r.report.name << ',' << format_full(r.report.statistic) << ','
             << format_full(r.report.p_value) << ',' << r.report.n << ',' << format_full(r.time)
             << '\n';
    }
    manifest.add_output(rep_csv, "test reports");

    const double separation = res.tau_temperature / res.t_maxwellian;
    const fs::path sum = out.path("maxtest_summary.csv");
    write_csv(sum, std::vector<CsvColumn>{{"t_normality", {res.t_normality}},
                                          {"t_isotropy", {res.t_isotropy}},
                                          {"t_exponential", {res.t_exponential}},
                                          {"t_maxwellian", {res.t_maxwellian}},
                                          {"tau_temperature", {res.tau_temperature}},
                                          {"separation_factor", {separation}}});
    manifest.add_output(sum, "Maxwellianization summary");

    SvgChart chart;
    chart.title = "Closeness-test p-values over time";
    chart.x_label = "t";
    chart.y_label = "p-value";
    for (const std::string name : {"henze_zirkler", "levene", "ks_exponential"}) {
      SvgSeries series;
      series.label = name;
      series.color =
          name == "henze_zirkler" ? "#202020" : (name == "levene" ? "#777777" : "#bb4444");
      for (const auto& r : res.reports)
        if (r.report.name == name) {
          series.x.push_back(r.time);
          series.y.push_back(r.report.p_value);
        }
      chart.series.push_back(series);
    }
    if (!res.reports.empty())
      chart.series.push_back({"0.05 level",
                              {res.reports.front().time, res.reports.back().time},
                              {0.05, 0.05},
                              "#aaaaaa",
                              true,
                              false});
    const fs::path svg = out.path("maxtest_pvalues.svg");
    chart.write(svg);
    manifest.add_output(svg, "p-values over time");

    manifest.write(out.path("run_manifest.json"));

    std::cout << "maxtest: maxwellianization time = " << res.t_maxwellian << " (normality "
              << res.t_normality << ", isotropy " << res.t_isotropy << ", exponentiality "
              << res.t_exponential << ")\n"
              << "maxtest: temperature relaxation time = " << res.tau_temperature
              << " (separation factor " << separation << ")\n";
    return std::isfinite(res.t_maxwellian) ? 0 : 1;
  });
}

int cmd_verify(const Settings& s, std::size_t states) {
  using experiments::CheckRow;
  std::vector<CheckRow> rows = experiments::taylor_lemma_checks();
  const std::vector<CheckRow> res_rows =
      experiments::resonant_asymptotics_checks(s.model, states, s.seed);
  rows.insert(rows.end(), res_rows.begin(), res_rows.end());

  bool all_pass = true;
  std::cout << "check                                                  observed      bounds            result\n";
  for (const auto& row : rows) {
    std::ostringstream obs, bounds;
    obs.precision(6);
    obs << row.observed;
    bounds << "[" << row.bound_lo << ", " << row.bound_hi << "]";
    std::cout << row.name;
    for (std::size_t pad = row.name.size(); pad < 55; ++pad) std::cout << ' ';
    std::cout << obs.str();
    for (std::size_t pad = obs.str().size(); pad < 14; ++pad) std::cout << ' ';
    std::cout << bounds.str();
    for (std::size_t pad = bounds.str().size(); pad < 18; ++pad) std::cout << ' ';
    std::cout << (row.pass ? "pass" : "FAIL") << "\n";
    all_pass = all_pass && row.pass;
  }
  std::cout << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-resonant polyatomic gas kinetics toolkit"};
  app.require_subcommand(1);

  Settings settings;
  std::string config_path;
  std::size_t verify_states = 5;

  // A configuration file is applied before flag parsing so explicit flags
  // override file values.
  for (int k = 1; k + 1 < argc; ++k)
    if (std::string(argv[k]) == "--config") config_path = argv[k + 1];
  try {
    if (!config_path.empty()) load_config_file(settings, config_path);
  } catch (const std::exception& e) {
    std::cerr << "qrgas: error: " << e.what() << "\n";
    return 1;
  }

  std::string config_path_sink;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path_sink, "key = value configuration file");
    cmd->add_option("--epsilon", settings.model.epsilon, "quasi-resonance parameter");
    cmd->add_option("--particles", settings.particles, "particle count");
    cmd->add_option("--seed", settings.seed, "random seed");
    cmd->add_option("--t-end", settings.t_end, "run horizon (0: relaxation time)");
    cmd->add_option("--out-dir", settings.out_dir, "output directory");
    cmd->add_option("--output-points", settings.output_points, "output grid size");
    cmd->add_option("--threshold", settings.threshold, "relaxation threshold");
    cmd->add_option("--initial", settings.initial_kind, "two_temp | uniform | anisotropic");
    cmd->add_option("--T-k0", settings.initial.T_k, "initial kinetic temperature");
    cmd->add_option("--T-i0", settings.initial.T_i, "initial internal temperature");
    cmd->add_option("--rho", settings.initial.rho, "mass density");
    cmd->add_option("--jobs", settings.jobs, "concurrent jobs (sweep)");
    cmd->add_flag("--check-conservation", settings.check_conservation,
                  "audit per-collision conservation");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "particle simulation run");
  add_common(simulate);
  simulate->add_option("--snapshots", settings.snapshots, "number of particle snapshots to write");
  CLI::App* ode = app.add_subcommand("ode", "relaxation ODE solve");
  add_common(ode);
  CLI::App* compare = app.add_subcommand("compare", "DSMC vs ODE comparison");
  add_common(compare);
  CLI::App* sweep = app.add_subcommand("sweep", "error vs epsilon sweep");
  add_common(sweep);
  sweep->add_option("--eps-min", settings.sweep_eps_min, "smallest epsilon");
  sweep->add_option("--eps-max", settings.sweep_eps_max, "largest epsilon");
  sweep->add_option("--eps-count", settings.sweep_count, "number of epsilon values");
  CLI::App* maxtest = app.add_subcommand("maxtest", "Maxwellianization timing");
  add_common(maxtest);
  maxtest->add_option("--hz-max-n", settings.hz_max_n, "stats subsample cap");
  CLI::App* verify = app.add_subcommand("verify", "quadrature verification checks");
  add_common(verify);
  verify->add_option("--states", verify_states, "number of random states");

  CLI11_PARSE(app, argc, argv);

  try {
    settings.finalize();
    if (simulate->parsed()) return cmd_simulate(settings);
    if (ode->parsed()) return cmd_ode(settings);
    if (compare->parsed()) return cmd_compare(settings);
    if (sweep->parsed()) return cmd_sweep(settings);
    if (maxtest->parsed()) return cmd_maxtest(settings);
    if (verify->parsed()) return cmd_verify(settings, verify_states);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qrgas: error: " << e.what() << "\n";
    return 1;
  }
}
