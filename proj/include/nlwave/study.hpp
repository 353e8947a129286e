#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "nlwave/initial_data.hpp"
#include "nlwave/integrator.hpp"

namespace nlwave {

inline constexpr const char* kToolVersion = "1.0.0";

/// One temporal convergence experiment: for each degree K, a single reference
/// evolution at tau_ref is compared in lockstep against one coarse run per tau.
struct StudyConfig {
  ProblemConfig problem;
  std::vector<int> degrees;       // K list
  std::vector<double> tau_list;   // each an exact multiple of tau_ref
  double tau_ref = 0x1p-12;
  double horizon = 0.25;          // T, an exact multiple of every tau
  InitialDataSpec data;
  int fit_window = 8;             // number of largest tau values used in fits
  Scheme scheme = Scheme::strang;
  bool dealias = false;

  void validate() const;
  bool operator==(const StudyConfig&) const = default;
};

struct ErrorRow {
  int degree = 0;
  double tau = 0.0;
  double err_l2_hm1 = 0.0;
  double err_h1_l2 = 0.0;
  std::int64_t steps = 0;
  double walltime_s = 0.0;
  std::string flag = "ok";  // "ok", "blowup", "ref_blowup"

  bool operator==(const ErrorRow&) const = default;
};

struct FittedOrder {
  int degree = 0;
  std::string norm;  // "l2_hm1" or "h1_l2"
  double order = 0.0;
  double residual = 0.0;
  int points = 0;

  bool operator==(const FittedOrder&) const = default;
};

struct ConvergenceReport {
  StudyConfig config;
  std::vector<ErrorRow> rows;       // sorted by (K, descending tau)
  std::vector<FittedOrder> orders;  // per (K, norm) where a fit was possible
  std::string tool_version = kToolVersion;

  bool operator==(const ConvergenceReport&) const = default;
};

/// Geometric tau grid from tau_max downward by ratio, each value rounded to
/// the nearest positive multiple of tau_ref, deduplicated, stopping once the
/// sequence falls below tau_min.
std::vector<double> plan_tau_grid(double tau_max, double tau_min, double ratio,
                                  double tau_ref);

/// The 20-value benchmark grid of 2^-12 multiples from 1/8 down to 2^-9 used
/// by the shipped convergence preset.
std::vector<double> bench_tau_preset();

/// product_norm(A - B, kind); grids must match.
double error_norm(const StateVector& A, const StateVector& B,
                  const NormKind& kind);

struct OrderFit {
  double order = 0.0;     // least-squares slope of log(err) vs log(tau)
  double residual = 0.0;  // rms residual of the fit
  int points = 0;
};

/// Fit over the `window` largest tau values with positive error.
/// Throws DomainError with fewer than 2 usable points.
OrderFit fit_order(std::span<const std::pair<double, double>> tau_err,
                   int window);

/// H^1-admissibility of (p,q): p in (2,inf], q in [2,inf),
/// 1/p + 1/q <= 1/2 and 1/p + 3/q = 1/2.
bool strichartz_admissible(double p, double q);

/// Discrete-time Strichartz norm (tau * sum_n |Pi_cutoff u(t_n)|_{L^q}^p)^(1/p)
/// of a trajectory sampled at the grid times; p = inf takes the max. The pair
/// (p,q) must be H^1-admissible.
double strichartz_norm(std::span<const TorusField> u_traj, double tau, double p,
                       double q, double cutoff);

/// Runs the lockstep study. Blow-ups are recorded per row, never fatal.
ConvergenceReport run_study(const StudyConfig& cfg);

void write_report_csv(const ConvergenceReport& r,
                      const std::filesystem::path& path);
void write_report_json(const ConvergenceReport& r,
                       const std::filesystem::path& path);
ConvergenceReport read_report_json(const std::filesystem::path& path);

}  // namespace nlwave
