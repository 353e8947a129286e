// Convergence experiment driver: lockstep reference-vs-coarse evolution,
// sup-in-time product-norm errors, order fits, Strichartz diagnostics and
// report persistence.

#include "nlwave/study.hpp"

#include <algorithm>
#include <cfloat>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>

#include "json.hpp"

namespace nlwave {

namespace {

using json = nlohmann::ordered_json;

std::int64_t exact_multiple(double value, double unit, const char* what) {
  const std::int64_t n = std::llround(value / unit);
  if (n <= 0 || std::abs(double(n) * unit - value) > 1e-9 * value)
    throw ConfigError(std::string(what) + " is not an exact positive multiple");
  return n;
}

}  // namespace

void StudyConfig::validate() const {
  problem.validate();
  data.validate();
  if (degrees.empty()) throw ConfigError("study needs at least one degree K");
  for (int K : degrees)
    if (K < 1) throw ConfigError("spectral degrees must be >= 1");
  if (tau_list.empty()) throw ConfigError("study needs at least one tau");
  if (!(tau_ref > 0.0)) throw ConfigError("tau_ref must be > 0");
  if (fit_window < 2) throw ConfigError("fit window must be >= 2");
  // Coarse runs are compared at every grid point n*tau <= T, so tau need not
  // divide T; it must sit exactly on the reference grid.
  for (double tau : tau_list) {
    if (!(tau > 0.0) || tau > 1.0)
      throw ConfigError("every tau must satisfy 0 < tau <= 1");
    exact_multiple(tau, tau_ref, "tau over tau_ref");
  }
  exact_multiple(horizon, tau_ref, "horizon over tau_ref");
}

std::vector<double> plan_tau_grid(double tau_max, double tau_min, double ratio,
                                  double tau_ref) {
  if (!(tau_min > 0.0) || !(tau_min < tau_max) || tau_max > 1.0)
    throw ConfigError("need 0 < tau_min < tau_max <= 1");
  if (!(ratio > 0.0) || !(ratio < 1.0))
    throw ConfigError("ratio must be in (0, 1)");
  if (!(tau_ref > 0.0)) throw ConfigError("tau_ref must be > 0");

  std::vector<double> out;
  for (double raw = tau_max;; raw *= ratio) {
    const std::int64_t m = std::llround(raw / tau_ref);
    if (m < 1) break;
    const double tau = double(m) * tau_ref;
    if (tau < tau_min * (1.0 - 1e-12)) break;
    if (out.empty() || tau < out.back()) out.push_back(tau);
  }
  if (out.empty()) throw ConfigError("tau grid came out empty");
  return out;
}

std::vector<double> bench_tau_preset() {
  static constexpr int multiples[] = {512, 411, 330, 266, 213, 171, 138,
                                      111, 89,  71,  57,  46,  37,  30,
                                      24,  19,  15,  12,  10,  8};
  std::vector<double> out;
  out.reserve(std::size(multiples));
  for (int m : multiples) out.push_back(double(m) * 0x1p-12);
  return out;
}

double error_norm(const StateVector& A, const StateVector& B,
                  const NormKind& kind) {
  if (!(A.grid() == B.grid()))
    throw ShapeError("error_norm operands live on different grids");
  return product_norm(A - B, kind);
}

OrderFit fit_order(std::span<const std::pair<double, double>> tau_err,
                   int window) {
  std::vector<std::pair<double, double>> usable;
  for (const auto& [tau, err] : tau_err)
    if (err > 0.0 && std::isfinite(err)) usable.emplace_back(tau, err);
  std::sort(usable.begin(), usable.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  if (window > 0 && int(usable.size()) > window) usable.resize(window);
  if (usable.size() < 2)
    throw DomainError("order fit needs at least 2 usable rows");

  double sx = 0.0, sy = 0.0;
  for (const auto& [tau, err] : usable) {
    sx += std::log(tau);
    sy += std::log(err);
  }
  const double mx = sx / double(usable.size());
  const double my = sy / double(usable.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [tau, err] : usable) {
    const double dx = std::log(tau) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(err) - my);
  }
  OrderFit fit;
  fit.order = sxy / sxx;
  fit.points = int(usable.size());
  double ssr = 0.0;
  for (const auto& [tau, err] : usable) {
    const double r = std::log(err) - (my + fit.order * (std::log(tau) - mx));
    ssr += r * r;
  }
  fit.residual = std::sqrt(ssr / double(usable.size()));
  return fit;
}

bool strichartz_admissible(double p, double q) {
  if (!(p > 2.0)) return false;
  if (!(q >= 2.0) || std::isinf(q)) return false;
  const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
  if (ip + 1.0 / q > 0.5 + 1e-12) return false;
  return std::abs(ip + 3.0 / q - 0.5) <= 1e-9;
}

double strichartz_norm(std::span<const TorusField> u_traj, double tau, double p,
                       double q, double cutoff) {
  if (!strichartz_admissible(p, q))
    throw AdmissibilityError("(p,q) pair is not H^1-admissible");
  if (u_traj.empty()) return 0.0;
  if (std::isinf(p)) {
    double m = 0.0;
    for (const TorusField& f : u_traj)
      m = std::max(m, lebesgue_norm(project(f, cutoff), q));
    return m;
  }
  double acc = 0.0;
  for (const TorusField& f : u_traj)
    acc += std::pow(lebesgue_norm(project(f, cutoff), q), p);
  return std::pow(tau * acc, 1.0 / p);
}

ConvergenceReport run_study(const StudyConfig& cfg) {
  cfg.validate();
  ConvergenceReport report;
  report.config = cfg;

  const NormKind low = NormKind::product_l2_hm1();
  const NormKind high = NormKind::product_h1_l2();

  for (int K : cfg.degrees) {
    const GridSpec grid(cfg.problem.dim, K);
    const StateVector U0 = make_initial_state(cfg.data, grid);

    struct CoarseRun {
      double tau = 0.0;
      std::int64_t stride = 0;  // reference steps per coarse step
      StateVector state;
      SchemeConfig step_cfg;
      double max_l2_hm1 = 0.0;  // errors start at 0: U_0 equals the reference
      double max_h1_l2 = 0.0;
      double walltime_s = 0.0;
      std::int64_t steps_done = 0;
      bool blown_up = false;
    };

    std::vector<CoarseRun> runs;
    for (double tau : cfg.tau_list) {
      CoarseRun r;
      r.tau = tau;
      r.stride = exact_multiple(tau, cfg.tau_ref, "tau over tau_ref");
      r.state = U0;
      r.step_cfg = SchemeConfig::make(tau, cfg.horizon, K, cfg.scheme);
      r.step_cfg.dealias = cfg.dealias;
      runs.push_back(std::move(r));
    }

    const std::int64_t ref_steps =
        exact_multiple(cfg.horizon, cfg.tau_ref, "horizon over tau_ref");
    SchemeConfig ref_cfg = SchemeConfig::make(cfg.tau_ref, cfg.horizon, K,
                                              cfg.scheme);
    ref_cfg.dealias = cfg.dealias;

    StateVector ref = U0;
    bool ref_alive = true;
    for (std::int64_t r = 1; r <= ref_steps && ref_alive; ++r) {
      try {
        ref = scheme_step(ref, cfg.problem, ref_cfg);
      } catch (const BlowupError&) {
        ref_alive = false;
        break;
      }
      for (CoarseRun& run : runs) {
        if (run.blown_up || r % run.stride != 0) continue;
        const auto t0 = std::chrono::steady_clock::now();
        try {
          run.state = scheme_step(run.state, cfg.problem, run.step_cfg);
          ++run.steps_done;
          run.max_l2_hm1 =
              std::max(run.max_l2_hm1, error_norm(ref, run.state, low));
          run.max_h1_l2 =
              std::max(run.max_h1_l2, error_norm(ref, run.state, high));
        } catch (const BlowupError&) {
          run.blown_up = true;
        }
        run.walltime_s +=
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
      }
    }

    for (const CoarseRun& run : runs) {
      ErrorRow row;
      row.degree = K;
      row.tau = run.tau;
      row.steps = ref_steps / run.stride;
      row.walltime_s = run.walltime_s;
      if (!ref_alive) {
        row.flag = "ref_blowup";
      } else if (run.blown_up) {
        row.flag = "blowup";
      } else {
        row.err_l2_hm1 = run.max_l2_hm1;
        row.err_h1_l2 = run.max_h1_l2;
      }
      report.rows.push_back(std::move(row));
    }

    // Fits use only clean rows; a study with blow-ups simply reports fewer fits.
    std::vector<std::pair<double, double>> pts_low, pts_high;
    for (const ErrorRow& row : report.rows) {
      if (row.degree != K || row.flag != "ok") continue;
      pts_low.emplace_back(row.tau, row.err_l2_hm1);
      pts_high.emplace_back(row.tau, row.err_h1_l2);
    }
    for (auto [norm_name, pts] :
         {std::pair{"l2_hm1", &pts_low}, std::pair{"h1_l2", &pts_high}}) {
      try {
        const OrderFit fit = fit_order(*pts, cfg.fit_window);
        report.orders.push_back(
            {K, norm_name, fit.order, fit.residual, fit.points});
      } catch (const DomainError&) {
        // fewer than 2 usable rows; skip the fit for this (K, norm)
      }
    }
  }

  std::sort(report.rows.begin(), report.rows.end(),
            [](const ErrorRow& a, const ErrorRow& b) {
              if (a.degree != b.degree) return a.degree < b.degree;
              return a.tau > b.tau;
            });
  return report;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

void to_json(json& j, const ProblemConfig& p) {
  j = json{{"alpha", p.alpha}, {"mu", p.mu}, {"dim", p.dim}};
}
void from_json(const json& j, ProblemConfig& p) {
  p.alpha = j.at("alpha");
  p.mu = j.at("mu");
  p.dim = j.at("dim");
}

void to_json(json& j, const InitialDataSpec& s) {
  j = json{{"mode", to_string(s.mode)},
           {"eps", s.eps},
           {"target_u", s.target_u},
           {"target_v", s.target_v},
           {"seed", s.seed}};
}
void from_json(const json& j, InitialDataSpec& s) {
  s.mode = data_mode_from_string(j.at("mode"));
  s.eps = j.at("eps");
  s.target_u = j.at("target_u");
  s.target_v = j.at("target_v");
  s.seed = j.at("seed");
}

void to_json(json& j, const StudyConfig& c) {
  json problem, data;
  to_json(problem, c.problem);
  to_json(data, c.data);
  j = json{{"problem", problem},
           {"degrees", c.degrees},
           {"tau_list", c.tau_list},
           {"tau_ref", c.tau_ref},
           {"horizon", c.horizon},
           {"data", data},
           {"fit_window", c.fit_window},
           {"scheme", to_string(c.scheme)},
           {"dealias", c.dealias}};
}
void from_json(const json& j, StudyConfig& c) {
  from_json(j.at("problem"), c.problem);
  c.degrees = j.at("degrees").get<std::vector<int>>();
  c.tau_list = j.at("tau_list").get<std::vector<double>>();
  c.tau_ref = j.at("tau_ref");
  c.horizon = j.at("horizon");
  from_json(j.at("data"), c.data);
  c.fit_window = j.at("fit_window");
  c.scheme = scheme_from_string(j.at("scheme"));
  c.dealias = j.at("dealias");
}

void to_json(json& j, const ErrorRow& r) {
  j = json{{"degree", r.degree},       {"tau", r.tau},
           {"err_l2_hm1", r.err_l2_hm1}, {"err_h1_l2", r.err_h1_l2},
           {"steps", r.steps},         {"walltime_s", r.walltime_s},
           {"flag", r.flag}};
}
void from_json(const json& j, ErrorRow& r) {
  r.degree = j.at("degree");
  r.tau = j.at("tau");
  r.err_l2_hm1 = j.at("err_l2_hm1");
  r.err_h1_l2 = j.at("err_h1_l2");
  r.steps = j.at("steps");
  r.walltime_s = j.at("walltime_s");
  r.flag = j.at("flag");
}

void to_json(json& j, const FittedOrder& f) {
  j = json{{"degree", f.degree},
           {"norm", f.norm},
           {"order", f.order},
           {"residual", f.residual},
           {"points", f.points}};
}
void from_json(const json& j, FittedOrder& f) {
  f.degree = j.at("degree");
  f.norm = j.at("norm");
  f.order = j.at("order");
  f.residual = j.at("residual");
  f.points = j.at("points");
}

}  // namespace

void write_report_csv(const ConvergenceReport& r,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open CSV report for writing: " + path.string());
  out << "alpha,mu,d,K,tau,err_l2_hm1,err_h1_l2,steps,walltime_s,flag\n";
  out << std::setprecision(17);
  for (const ErrorRow& row : r.rows) {
    out << r.config.problem.alpha << ',' << r.config.problem.mu << ','
        << r.config.problem.dim << ',' << row.degree << ',' << row.tau << ','
        << row.err_l2_hm1 << ',' << row.err_h1_l2 << ',' << row.steps << ','
        << row.walltime_s << ',' << row.flag << '\n';
  }
  if (!out) throw IoError("failed while writing CSV report: " + path.string());
}

void write_report_json(const ConvergenceReport& r,
                       const std::filesystem::path& path) {
  json j;
  json config;
  to_json(config, r.config);
  j["tool_version"] = r.tool_version;
  j["environment"] = json{{"compiler", __VERSION__},
                          {"pointer_bits", 8 * sizeof(void*)},
                          {"float_evaluation", FLT_EVAL_METHOD}};
  j["config"] = config;
  j["rows"] = json::array();
  for (const ErrorRow& row : r.rows) {
    json jr;
    to_json(jr, row);
    j["rows"].push_back(jr);
  }
  j["orders"] = json::array();
  for (const FittedOrder& f : r.orders) {
    json jf;
    to_json(jf, f);
    j["orders"].push_back(jf);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open JSON report for writing: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed while writing JSON report: " + path.string());
}

ConvergenceReport read_report_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open JSON report: " + path.string());
  json j = json::parse(in);
  ConvergenceReport r;
  r.tool_version = j.at("tool_version");
  from_json(j.at("config"), r.config);
  for (const json& jr : j.at("rows")) {
    ErrorRow row;
    from_json(jr, row);
    r.rows.push_back(std::move(row));
  }
  for (const json& jf : j.at("orders")) {
    FittedOrder f;
    from_json(jf, f);
    r.orders.push_back(std::move(f));
  }
  return r;
}

}  // namespace nlwave
