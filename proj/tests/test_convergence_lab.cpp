// Experiment driver: tau planning, error norms, order fits, Strichartz
// diagnostics, the lockstep study and report persistence.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "nlwave/study.hpp"
#include "test_util.hpp"

using namespace nlwave;

namespace {

StudyConfig small_study(int alpha, Scheme scheme) {
  StudyConfig cfg;
  cfg.problem = {alpha, 1, 1};
  cfg.degrees = {8};
  cfg.tau_ref = 0x1p-9;
  cfg.horizon = 0.25;
  cfg.tau_list = {0x1p-3, 0x1p-4, 0x1p-5};
  cfg.scheme = scheme;
  return cfg;
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("plan_tau_grid") {
  SUBCASE("exact dyadics") {
    CHECK(plan_tau_grid(0.125, 0x1p-5, 0.5, 0x1p-12) ==
          std::vector<double>{0.125, 0.0625, 0.03125});
  }
  SUBCASE("every emitted tau is an exact tau_ref multiple") {
    const double tau_ref = 0x1p-12;
    for (double tau : plan_tau_grid(0.125, 1e-3, 0.77, tau_ref))
      CHECK(double(std::llround(tau / tau_ref)) * tau_ref == tau);
  }
  SUBCASE("bench preset starts on the published grid") {
    const auto taus = bench_tau_preset();
    REQUIRE(taus.size() == 20);
    CHECK(taus[0] == 0.125);
    CHECK(taus[1] == 0.100341796875);
    for (double tau : taus)
      CHECK(double(std::llround(tau / 0x1p-12)) * 0x1p-12 == tau);
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(plan_tau_grid(0.1, 0.2, 0.5, 0x1p-12), ConfigError);
    CHECK_THROWS_AS(plan_tau_grid(0.1, 0.01, 1.5, 0x1p-12), ConfigError);
  }
}

TEST_CASE("error_norm") {
  const GridSpec g(2, 4);
  const StateVector A = testutil::random_state(g, 1);
  const StateVector B = testutil::random_state(g, 2);
  const NormKind kind = NormKind::product_l2_hm1();
  CHECK(error_norm(A, A, kind) == 0.0);
  CHECK(error_norm(A, StateVector::zero(g), kind) ==
        doctest::Approx(product_norm(A, kind)).epsilon(1e-14));
  CHECK(error_norm(A, B, kind) == doctest::Approx(error_norm(B, A, kind)));
  const StateVector C = testutil::random_state(GridSpec(2, 5), 3);
  CHECK_THROWS_AS(error_norm(A, C, kind), ShapeError);
}

TEST_CASE("fit_order") {
  SUBCASE("exact power law") {
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i < 8; ++i) {
      const double tau = 0.2 * std::pow(0.7, i);
      rows.emplace_back(tau, 3.1 * tau * tau);
    }
    const OrderFit fit = fit_order(rows, 8);
    CHECK(std::abs(fit.order - 2.0) < 1e-12);
    CHECK(fit.residual < 1e-12);
  }
  SUBCASE("two points") {
    const std::vector<std::pair<double, double>> rows{{0.1, 1e-2},
                                                      {0.05, 2.5e-3}};
    CHECK(fit_order(rows, 8).order == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("saturated tail outside the window does not move the slope") {
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i < 4; ++i) {
      const double tau = 0.1 * std::pow(0.5, i);
      rows.emplace_back(tau, tau * tau);
    }
    const double clean = fit_order(rows, 4).order;
    rows.emplace_back(0.001, 5e-7);  // flat tail, smaller tau
    rows.emplace_back(0.0005, 5e-7);
    CHECK(fit_order(rows, 4).order == doctest::Approx(clean).epsilon(1e-14));
  }
  SUBCASE("needs two usable rows") {
    const std::vector<std::pair<double, double>> rows{{0.1, 1e-2}, {0.05, 0.0}};
    CHECK_THROWS_AS(fit_order(rows, 8), DomainError);
  }
}

TEST_CASE("strichartz admissibility and norm") {
  SUBCASE("accepted and rejected pairs") {
    CHECK(strichartz_admissible(6.0, 9.0));
    CHECK(strichartz_admissible(8.0, 8.0));
    CHECK(strichartz_admissible(3.0, 18.0));
    CHECK(strichartz_admissible(kInf, 6.0));
    CHECK_FALSE(strichartz_admissible(2.0, kInf));  // double endpoint
    CHECK_FALSE(strichartz_admissible(2.0, 6.0));
    CHECK_FALSE(strichartz_admissible(6.0, 10.0));  // breaks the scaling line
    CHECK_FALSE(strichartz_admissible(4.0, 1.5));
  }
  SUBCASE("constant trajectory closed form") {
    const GridSpec g(3, 4);
    const TorusField f = testutil::random_real_field(g, 10);
    const std::vector<TorusField> traj(5, f);
    const double tau = 0.01;
    const double norm = strichartz_norm(traj, tau, 6.0, 9.0, 2.0);
    const double want =
        std::pow(tau * 5.0, 1.0 / 6.0) * lebesgue_norm(project(f, 2.0), 9.0);
    CHECK(norm == doctest::Approx(want).epsilon(1e-12));
    // p = inf takes the max
    CHECK(strichartz_norm(traj, tau, kInf, 6.0, 2.0) ==
          doctest::Approx(lebesgue_norm(project(f, 2.0), 6.0)).epsilon(1e-12));
  }
  SUBCASE("inadmissible pair throws") {
    const std::vector<TorusField> traj;
    CHECK_THROWS_AS(strichartz_norm(traj, 0.1, 2.0, kInf, 1.0),
                    AdmissibilityError);
  }
}

TEST_CASE("run_study with tau_list = {tau_ref} reports zero errors") {
  StudyConfig cfg = small_study(3, Scheme::strang);
  cfg.tau_list = {cfg.tau_ref};
  const ConvergenceReport report = run_study(cfg);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].err_l2_hm1 == 0.0);
  CHECK(report.rows[0].err_h1_l2 == 0.0);
  CHECK(report.rows[0].flag == "ok");
}

TEST_CASE("strang study shows second order in the weak norm (d=1)") {
  const ConvergenceReport report = run_study(small_study(3, Scheme::strang));
  REQUIRE(!report.orders.empty());
  for (const FittedOrder& f : report.orders)
    if (f.norm == "l2_hm1") CHECK(f.order == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("lie study shows first order in the weak norm (d=1)") {
  const ConvergenceReport report = run_study(small_study(3, Scheme::lie));
  for (const FittedOrder& f : report.orders)
    if (f.norm == "l2_hm1") CHECK(f.order == doctest::Approx(1.0).epsilon(0.3));
}

TEST_CASE("rows are sorted by (K, descending tau) and count K x tau") {
  StudyConfig cfg = small_study(3, Scheme::strang);
  cfg.degrees = {4, 8};
  const ConvergenceReport report = run_study(cfg);
  REQUIRE(report.rows.size() == cfg.degrees.size() * cfg.tau_list.size());
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const ErrorRow& a = report.rows[i - 1];
    const ErrorRow& b = report.rows[i];
    CHECK((a.degree < b.degree || (a.degree == b.degree && a.tau > b.tau)));
  }
}

TEST_CASE("blow-up is flagged per row, never fatal") {
  StudyConfig cfg;
  cfg.problem = {5, -1, 1};
  cfg.degrees = {4};
  cfg.tau_ref = 0x1p-4;
  cfg.horizon = 4.0;
  cfg.tau_list = {0.5};
  cfg.data.target_u = 60.0;
  cfg.data.target_v = 60.0;
  const ConvergenceReport report = run_study(cfg);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].flag != "ok");
  CHECK(report.orders.empty());
}

TEST_CASE("report persistence") {
  StudyConfig cfg = small_study(3, Scheme::strang);
  const ConvergenceReport report = run_study(cfg);

  SUBCASE("CSV header, row count and flags") {
    const auto path = temp_file("nlwave_report_test.csv");
    write_report_csv(report, path);
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "alpha,mu,d,K,tau,err_l2_hm1,err_h1_l2,steps,walltime_s,flag");
    std::size_t rows = 0;
    while (std::getline(in, line))
      if (!line.empty()) ++rows;
    CHECK(rows == report.rows.size());
    std::filesystem::remove(path);
  }

  SUBCASE("empty report gives a header-only CSV") {
    ConvergenceReport empty;
    empty.config = cfg;
    const auto path = temp_file("nlwave_empty_test.csv");
    write_report_csv(empty, path);
    std::ifstream in(path);
    std::string header, rest;
    CHECK(std::getline(in, header));
    CHECK_FALSE(std::getline(in, rest));
    std::filesystem::remove(path);
  }

  SUBCASE("JSON round trip reproduces the report exactly") {
    const auto path = temp_file("nlwave_report_test.json");
    write_report_json(report, path);
    const ConvergenceReport back = read_report_json(path);
    CHECK(back == report);
    std::filesystem::remove(path);
  }
}

TEST_CASE("weak-norm errors are K-uniform once every K resolves the step") {
  // At fixed tau with tau*K <~ 1 for all tested K, the L2xH-1 error is set by
  // the time stepping alone and the curves for different K overlap.
  StudyConfig cfg;
  cfg.problem = {3, 1, 3};
  cfg.degrees = {8, 16, 32};
  cfg.tau_ref = 0x1p-8;
  cfg.horizon = 0.25;
  cfg.tau_list = {0x1p-5, 0x1p-6};
  const ConvergenceReport report = run_study(cfg);
  for (double tau : cfg.tau_list) {
    double lo = kInf, hi = 0.0;
    for (const ErrorRow& row : report.rows)
      if (row.tau == tau) {
        lo = std::min(lo, row.err_l2_hm1);
        hi = std::max(hi, row.err_l2_hm1);
      }
    CHECK(hi / lo < 1.5);
  }
}

TEST_CASE("discrete Strichartz norm of the solution is stable under refinement") {
  // sample the same fine trajectory at two spacings; the (6,9) norm of the
  // filtered solution moves by less than 2%
  const GridSpec g(3, 8);
  const ProblemConfig p{3, 1, 3};
  const double tau_fine = 0x1p-6;
  const SchemeConfig cfg = SchemeConfig::make(tau_fine, 0.25, 8);
  InitialDataSpec data;
  const StateVector U0 = make_initial_state(data, g);

  std::vector<TorusField> traj;
  std::vector<Observer> obs;
  obs.push_back({[&](std::int64_t, double, const StateVector& U) {
    traj.push_back(U.u);
  }});
  evolve(U0, p, cfg, obs);

  auto subsample = [&](int stride) {
    std::vector<TorusField> out;
    for (std::size_t i = 0; i < traj.size(); i += std::size_t(stride))
      out.push_back(traj[i]);
    return out;
  };
  const auto coarse = subsample(4);  // spacing 2^-4
  const auto fine = subsample(2);    // spacing 2^-5
  const double n_coarse = strichartz_norm(coarse, 4 * tau_fine, 6.0, 9.0, 1e9);
  const double n_fine = strichartz_norm(fine, 2 * tau_fine, 6.0, 9.0, 1e9);
  CHECK(std::isfinite(n_coarse));
  CHECK(std::abs(n_coarse - n_fine) / n_fine < 0.02);
}
