// nlwave command line: convergence studies, single evolutions with snapshots,
// the selftest suite and initial-data diagnostics.
//
// Exit codes: 0 success, 1 configuration error, 2 numerical blow-up in a
// non-study run, 3 selftest failure.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlwave/initial_data.hpp"
#include "nlwave/selftest.hpp"
#include "nlwave/snapshot.hpp"
#include "nlwave/study.hpp"

namespace {

using namespace nlwave;

struct DataOptions {
  std::string mode = "det";
  double eps = 1e-4;
  std::uint64_t seed = 0;
  double target_u = 3.0;
  double target_v = 3.0;

  InitialDataSpec spec() const {
    InitialDataSpec s;
    s.mode = data_mode_from_string(mode);
    s.eps = eps;
    s.seed = seed;
    s.target_u = target_u;
    s.target_v = target_v;
    return s;
  }
};

void add_data_flags(CLI::App* cmd, DataOptions& d) {
  cmd->add_option("--data", d.mode, "initial data mode: det or random")
      ->check(CLI::IsMember({"det", "random"}));
  cmd->add_option("--eps", d.eps, "regularity slack of the rough data");
  cmd->add_option("--seed", d.seed, "seed for random initial data");
  cmd->add_option("--target-u", d.target_u, "H^1 norm target of u0");
  cmd->add_option("--target-v", d.target_v, "L^2 norm target of v0");
}

int run_convergence(const ProblemConfig& problem, std::vector<int> degrees,
                    double tau_max, double tau_min, double tau_ratio,
                    double tau_ref, std::vector<double> tau_list,
                    const std::string& tau_preset, double horizon,
                    const std::string& scheme, const DataOptions& data,
                    bool dealias, int fit_window, const std::string& csv_path,
                    const std::string& json_path) {
  StudyConfig cfg;
  cfg.problem = problem;
  cfg.degrees = std::move(degrees);
  cfg.tau_ref = tau_ref;
  cfg.horizon = horizon;
  cfg.data = data.spec();
  cfg.fit_window = fit_window;
  cfg.scheme = scheme_from_string(scheme);
  cfg.dealias = dealias;
  if (!tau_preset.empty()) {
    if (tau_preset != "bench")
      throw ConfigError("unknown tau preset '" + tau_preset + "'");
    cfg.tau_list = bench_tau_preset();
  } else if (!tau_list.empty()) {
    cfg.tau_list = std::move(tau_list);
  } else {
    cfg.tau_list = plan_tau_grid(tau_max, tau_min, tau_ratio, tau_ref);
  }

  const ConvergenceReport report = run_study(cfg);

  std::cout << "alpha=" << cfg.problem.alpha << " mu=" << cfg.problem.mu
            << " d=" << cfg.problem.dim << " T=" << cfg.horizon
            << " tau_ref=" << cfg.tau_ref << " scheme=" << to_string(cfg.scheme)
            << "\n";
  for (int K : cfg.degrees)
    std::cout << "K=" << K << ": " << 2 * K + 1
              << " points per axis (unit-torus resolution h = 1/" << 2 * K + 1
              << " = " << 1.0 / double(2 * K + 1) << ")\n";
  std::cout << std::left << std::setw(6) << "K" << std::setw(16) << "tau"
            << std::setw(16) << "err_l2_hm1" << std::setw(16) << "err_h1_l2"
            << std::setw(8) << "steps" << "flag\n";
  for (const ErrorRow& row : report.rows) {
    std::cout << std::left << std::setw(6) << row.degree << std::setw(16)
              << row.tau << std::setw(16) << row.err_l2_hm1 << std::setw(16)
              << row.err_h1_l2 << std::setw(8) << row.steps << row.flag
              << "\n";
  }
  for (const FittedOrder& f : report.orders) {
    std::cout << "fitted order K=" << f.degree << " " << f.norm << ": "
              << f.order << " (rms residual " << f.residual << ", "
              << f.points << " points)\n";
  }
  if (!csv_path.empty()) write_report_csv(report, csv_path);
  if (!json_path.empty()) write_report_json(report, json_path);
  return 0;
}

int run_evolve(const ProblemConfig& problem, int degree, double tau,
               double horizon, double filter_cutoff, const std::string& scheme,
               bool dealias, bool shortcut, const DataOptions& data,
               const std::vector<double>& snapshot_times,
               const std::string& out_prefix) {
  SchemeConfig cfg = SchemeConfig::make(tau, horizon, degree,
                                        scheme_from_string(scheme));
  if (filter_cutoff >= 0.0) cfg.filter_cutoff = filter_cutoff;
  cfg.dealias = dealias;
  cfg.shortcut = shortcut;
  cfg.validate();

  std::vector<std::int64_t> snap_steps;
  for (double t : snapshot_times) {
    const std::int64_t n = std::llround(t / tau);
    if (n < 0 || std::abs(double(n) * tau - t) > 1e-9 * std::max(1.0, t))
      throw ConfigError("snapshot time is not a multiple of tau");
    snap_steps.push_back(n);
  }

  const GridSpec grid(problem.dim, degree);
  const StateVector U0 = make_initial_state(data.spec(), grid);
  const double e0 = energy(U0, problem);

  std::vector<Observer> observers;
  observers.push_back({[&](std::int64_t step, double time, const StateVector& U) {
    for (std::size_t i = 0; i < snap_steps.size(); ++i) {
      if (snap_steps[i] != step) continue;
      std::ostringstream tag;
      tag << out_prefix << "_t" << time;
      write_snapshot(U.u, tag.str() + "_u.bin", tag.str() + "_u.json", "u");
      write_snapshot(U.v, tag.str() + "_v.bin", tag.str() + "_v.json", "v");
      std::cout << "snapshot written at t=" << time << "\n";
    }
  }});

  const StateVector U = evolve(U0, problem, cfg, observers);
  const double e1 = energy(U, problem);
  std::cout << std::setprecision(12);
  std::cout << "final |U|_{H1xL2}  = " << product_norm(U, NormKind::product_h1_l2())
            << "\n";
  std::cout << "final |U|_{L2xHm1} = "
            << product_norm(U, NormKind::product_l2_hm1()) << "\n";
  std::cout << "energy drift |E(T)-E(0)|/|E(0)| = "
            << std::abs(e1 - e0) / std::abs(e0) << "\n";
  return 0;
}

int run_data(const ProblemConfig& problem, int degree, const DataOptions& data,
             const std::string& out_path) {
  const GridSpec grid(problem.dim, degree);
  const InitialDataSpec spec = data.spec();
  const StateVector U0 = make_initial_state(spec, grid);

  nlohmann::ordered_json j;
  j["spec"] = {{"mode", to_string(spec.mode)},
               {"eps", spec.eps},
               {"target_u", spec.target_u},
               {"target_v", spec.target_v},
               {"seed", spec.seed},
               {"d", problem.dim},
               {"K", degree},
               {"points_per_axis", 2 * degree + 1},
               {"unit_torus_resolution", 1.0 / double(2 * degree + 1)}};
  j["norms"] = {{"u0_H1", sobolev_norm(U0.u, 1.0)},
                {"v0_L2", sobolev_norm(U0.v, 0.0)},
                {"U0_H1xL2", product_norm(U0, NormKind::product_h1_l2())}};

  // Truncated-norm sweep: the borderline norm keeps growing, the norm a
  // tenth below it saturates.
  nlohmann::ordered_json sweep = nlohmann::ordered_json::array();
  for (int K = 4; K <= degree; K *= 2) {
    const TorusField trunc = project(U0.u, K);
    sweep.push_back({{"K", K},
                     {"u0_H1peps", sobolev_norm(trunc, 1.0 + spec.eps)},
                     {"u0_H0p9", sobolev_norm(trunc, 0.9)}});
  }
  j["truncated_norms"] = sweep;

  // L^q growth of the projected data (q above the integrability threshold).
  nlohmann::ordered_json growth = nlohmann::ordered_json::array();
  for (int N = std::max(2, degree / 4); N <= degree; N *= 2)
    growth.push_back({{"N", N}, {"u0_L8", lebesgue_norm(project(U0.u, N), 8.0)}});
  j["lq_growth"] = growth;

  // Radial spectrum by |k|_inf shell.
  nlohmann::ordered_json shells = nlohmann::ordered_json::array();
  std::vector<double> shell_max(std::size_t(degree) + 1, 0.0);
  for_each_mode(grid, [&](const std::array<int, 3>& k, std::int64_t off) {
    auto& m = shell_max[std::size_t(k_inf_norm(k))];
    m = std::max(m, std::abs(U0.u[off]));
  });
  for (std::size_t s = 0; s < shell_max.size(); ++s)
    shells.push_back({{"k_inf", s}, {"u0_coeff_max", shell_max[s]}});
  j["spectrum"] = shells;

  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier pseudo-spectral Strang splitting laboratory for the "
               "semilinear wave equation on the torus"};
  app.require_subcommand(1);

  ProblemConfig problem;
  DataOptions data;

  // --- convergence ---
  auto* conv = app.add_subcommand("convergence", "temporal convergence study");
  std::vector<int> degrees{16};
  double tau_max = 0.125, tau_min = 0x1p-9, tau_ratio = 0.8, tau_ref = 0x1p-12;
  std::vector<double> tau_list;
  std::string tau_preset;
  double horizon = 0.25;
  std::string scheme = "strang";
  bool dealias = false;
  int fit_window = 8;
  std::string csv_path, json_path;
  conv->add_option("--alpha", problem.alpha)->check(CLI::Range(2, 5));
  conv->add_option("--mu", problem.mu)->check(CLI::IsMember({-1, 1}));
  conv->add_option("--dim", problem.dim)->check(CLI::Range(1, 3));
  conv->add_option("--K", degrees, "spectral degrees");
  conv->add_option("--tau-max", tau_max);
  conv->add_option("--tau-min", tau_min);
  conv->add_option("--tau-ratio", tau_ratio);
  conv->add_option("--tau-ref", tau_ref);
  conv->add_option("--tau-list", tau_list, "explicit tau values");
  conv->add_option("--tau-preset", tau_preset, "named tau grid (bench)");
  conv->add_option("--T", horizon);
  conv->add_option("--scheme", scheme)->check(CLI::IsMember({"strang", "lie"}));
  conv->add_flag("--dealias", dealias);
  conv->add_option("--fit-window", fit_window);
  conv->add_option("--out", csv_path, "CSV output path");
  conv->add_option("--json", json_path, "JSON report path");
  add_data_flags(conv, data);

  // --- evolve ---
  auto* evo = app.add_subcommand("evolve", "single run with snapshots");
  int degree = 16;
  double tau = 0.01;
  double evolve_T = 0.25;
  double filter_cutoff = -1.0;
  bool shortcut = false;
  std::vector<double> snapshot_times;
  std::string out_prefix = "nlwave";
  evo->add_option("--alpha", problem.alpha)->check(CLI::Range(2, 5));
  evo->add_option("--mu", problem.mu)->check(CLI::IsMember({-1, 1}));
  evo->add_option("--dim", problem.dim)->check(CLI::Range(1, 3));
  evo->add_option("--K", degree);
  evo->add_option("--tau", tau)->required();
  evo->add_option("--T", evolve_T);
  evo->add_option("--filter-cutoff", filter_cutoff,
                  "override the default floor(1/tau)");
  evo->add_option("--scheme", scheme)->check(CLI::IsMember({"strang", "lie"}));
  evo->add_flag("--dealias", dealias);
  evo->add_flag("--shortcut", shortcut);
  evo->add_option("--snapshots", snapshot_times, "times to snapshot");
  evo->add_option("--out-prefix", out_prefix);
  add_data_flags(evo, data);

  // --- selftest ---
  app.add_subcommand("selftest", "run the invariant and property suite");

  // --- data ---
  auto* dat = app.add_subcommand("data", "initial-data spectra and diagnostics");
  std::string data_out;
  dat->add_option("--dim", problem.dim)->check(CLI::Range(1, 3));
  dat->add_option("--K", degree);
  dat->add_option("--out", data_out, "write JSON here instead of stdout");
  add_data_flags(dat, data);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;  // config errors exit with 1
  }

  try {
    if (app.got_subcommand("convergence"))
      return run_convergence(problem, degrees, tau_max, tau_min, tau_ratio,
                             tau_ref, tau_list, tau_preset, horizon, scheme,
                             data, dealias, fit_window, csv_path, json_path);
    if (app.got_subcommand("evolve"))
      return run_evolve(problem, degree, tau, evolve_T, filter_cutoff, scheme,
                        dealias, shortcut, data, snapshot_times, out_prefix);
    if (app.got_subcommand("selftest"))
      return run_selftest(std::cout) == 0 ? 0 : 3;
    if (app.got_subcommand("data"))
      return run_data(problem, degree, data, data_out);
  } catch (const BlowupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
