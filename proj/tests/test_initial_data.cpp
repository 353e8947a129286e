// Rough initial data: spectra, scaling, reproducibility and the borderline
// Sobolev/Lebesgue diagnostics.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nlwave/initial_data.hpp"
#include "nlwave/study.hpp"
#include "test_util.hpp"

using namespace nlwave;

TEST_CASE("deterministic spectrum values") {
  SUBCASE("mean coefficient is 1 for every (s, eps)") {
    for (const auto [s, eps] : {std::pair{1.0, 1e-4}, std::pair{0.0, 1e-2},
                                std::pair{2.5, 0.5}}) {
      const TorusField f = deterministic_rough(GridSpec(3, 2), s, eps);
      CHECK(f.at({0, 0, 0}) == Complex(1.0, 0.0));
    }
  }
  SUBCASE("d=3, s=1, eps->0 at k=(1,0,0) gives 2^(-5/4)") {
    const TorusField f = deterministic_rough(GridSpec(3, 2), 1.0, 1e-15);
    CHECK(f.at({1, 0, 0}).real() ==
          doctest::Approx(std::pow(2.0, -1.25)).epsilon(1e-12));
    CHECK(f.at({1, 0, 0}).real() == doctest::Approx(0.420448).epsilon(1e-5));
  }
  SUBCASE("coefficients are positive and radially symmetric") {
    const GridSpec g(3, 3);
    const TorusField f = deterministic_rough(g, 1.0, 1e-4);
    for_each_mode(g, [&](const std::array<int, 3>& k, std::int64_t off) {
      CHECK(f[off].real() > 0.0);
      CHECK(f[off].imag() == 0.0);
      CHECK(f[off] == f.at({-k[0], -k[1], -k[2]}));
    });
  }
}

TEST_CASE("borderline norm diverges, the weaker norm saturates") {
  const GridSpec g(3, 64);
  const double eps = 1e-4;
  const TorusField f = deterministic_rough(g, 1.0, eps);
  std::vector<double> borderline, weaker;
  for (int K : {4, 8, 16, 32, 64}) {
    const TorusField t = project(f, K);
    borderline.push_back(sobolev_norm(t, 1.0 + eps));
    weaker.push_back(sobolev_norm(t, 0.9));
  }
  for (std::size_t i = 1; i < borderline.size(); ++i) {
    CHECK(borderline[i] > borderline[i - 1]);  // strict growth
    CHECK(weaker[i] >= weaker[i - 1]);
  }
  // log-like growth: roughly equal squared-norm increments per octave
  std::vector<double> inc;
  for (std::size_t i = 1; i < borderline.size(); ++i)
    inc.push_back(borderline[i] * borderline[i] -
                  borderline[i - 1] * borderline[i - 1]);
  for (std::size_t i = 1; i < inc.size(); ++i) {
    CHECK(inc[i] > 0.5 * inc[i - 1]);
    CHECK(inc[i] < 1.5 * inc[i - 1]);
  }
  // Cauchy-like saturation of the weaker norm: shrinking increments
  for (std::size_t i = 1; i + 1 < weaker.size(); ++i)
    CHECK(weaker[i + 1] - weaker[i] < weaker[i] - weaker[i - 1]);
}

TEST_CASE("random data") {
  const GridSpec g(3, 4);
  SUBCASE("same seed, same bits") {
    const TorusField a = random_rough(g, 1.0, 1e-4, 99);
    const TorusField b = random_rough(g, 1.0, 1e-4, 99);
    for (std::int64_t i = 0; i < g.total_modes(); ++i) CHECK(a[i] == b[i]);
  }
  SUBCASE("different seeds differ") {
    const TorusField a = random_rough(g, 1.0, 1e-4, 1);
    const TorusField b = random_rough(g, 1.0, 1e-4, 2);
    double diff = 0.0;
    for (std::int64_t i = 0; i < g.total_modes(); ++i)
      diff = std::max(diff, std::abs(a[i] - b[i]));
    CHECK(diff > 0.0);
  }
  SUBCASE("real after symmetrization") {
    const TorusField f = random_rough(g, 1.0, 1e-4, 7);
    CHECK(f.hermitian_defect() < 1e-13);
    double max_imag = 0.0;
    for (const Complex& s : to_physical(f))
      max_imag = std::max(max_imag, std::abs(s.imag()));
    CHECK(max_imag < 1e-13 * lebesgue_norm(f, kInf));
  }
  SUBCASE("coefficients obey the sqrt(2) envelope bound") {
    const TorusField f = random_rough(g, 0.0, 1e-3, 13);
    for_each_mode(g, [&](const std::array<int, 3>& k, std::int64_t off) {
      const double cap =
          std::sqrt(2.0) * std::pow(1.0 + k_sq(k), -0.5 * (1.5 + 0.0 + 1e-3));
      CHECK(std::abs(f[off]) <= cap * (1.0 + 1e-12));
    });
  }
}

TEST_CASE("scale_to") {
  const GridSpec g(3, 4);
  const TorusField f = deterministic_rough(g, 1.0, 1e-4);
  SUBCASE("target equal to the current norm is the identity") {
    const double n = sobolev_norm(f, 1.0);
    const TorusField s = scale_to(f, NormKind::sobolev(1.0), n);
    CHECK(sobolev_norm(s - f, 0.0) < 1e-12 * sobolev_norm(f, 0.0));
  }
  SUBCASE("hits the target to 1e-12") {
    const TorusField s = scale_to(f, NormKind::sobolev(1.0), 3.0);
    CHECK(std::abs(sobolev_norm(s, 1.0) - 3.0) < 1e-12 * 3.0);
  }
  SUBCASE("homogeneous in the argument") {
    const TorusField a = scale_to(f, NormKind::sobolev(1.0), 3.0);
    const TorusField b = scale_to(2.0 * f, NormKind::sobolev(1.0), 3.0);
    for (std::int64_t i = 0; i < g.total_modes(); ++i) CHECK(a[i] == b[i]);
  }
  SUBCASE("zero field is a domain error") {
    CHECK_THROWS_AS(scale_to(TorusField::zero(g), NormKind::sobolev(1.0), 3.0),
                    DomainError);
  }
  SUBCASE("Lebesgue target") {
    const TorusField s = scale_to(f, NormKind::lebesgue(4.0), 2.0);
    CHECK(lebesgue_norm(s, 4.0) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("product kinds are rejected for plain fields") {
    CHECK_THROWS_AS(field_norm(f, NormKind::product_h1_l2()), DomainError);
  }
}

TEST_CASE("make_initial_state") {
  const GridSpec g(3, 8);
  InitialDataSpec spec;

  SUBCASE("norm targets and the product norm sqrt(18)") {
    const StateVector U = make_initial_state(spec, g);
    CHECK(sobolev_norm(U.u, 1.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sobolev_norm(U.v, 0.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(product_norm(U, NormKind::product_h1_l2()) ==
          doctest::Approx(std::sqrt(18.0)).epsilon(1e-12));
  }

  SUBCASE("random mode hits the same targets and is reproducible") {
    spec.mode = DataMode::random;
    spec.seed = 4242;
    const StateVector A = make_initial_state(spec, g);
    const StateVector B = make_initial_state(spec, g);
    CHECK(sobolev_norm(A.u, 1.0) == doctest::Approx(3.0).epsilon(1e-12));
    for (std::int64_t i = 0; i < g.total_modes(); ++i) CHECK(A.u[i] == B.u[i]);
    CHECK(A.u.hermitian_defect() < 1e-13);
    CHECK(A.v.hermitian_defect() < 1e-13);
  }

  SUBCASE("deterministic mode is grid-consistent") {
    // scaling reference computed at the larger degree, then truncated
    const GridSpec g16(3, 16), g32(3, 32);
    const TorusField f16 = deterministic_rough(g16, 1.0, spec.eps);
    const TorusField f32 = deterministic_rough(g32, 1.0, spec.eps);
    const double scale = 3.0 / sobolev_norm(f32, 1.0);
    const TorusField big = scale * f32;
    const TorusField small = scale * f16;
    const TorusField trunc = regrid(project(big, 16.0), 16);
    for (std::int64_t i = 0; i < g16.total_modes(); ++i)
      CHECK(small[i] == trunc[i]);
  }

  SUBCASE("L^8 norm of the projected data grows with the cutoff") {
    const GridSpec g32(3, 32);
    const StateVector U = make_initial_state(spec, g32);
    std::vector<std::pair<double, double>> rows;
    double prev = 0.0;
    for (int N : {8, 16, 32}) {
      const double q8 = lebesgue_norm(project(U.u, N), 8.0);
      CHECK(q8 > prev);
      prev = q8;
      rows.emplace_back(double(N), q8);
    }
    // positive fitted slope of log|.|_L8 against log N
    const OrderFit fit = fit_order(rows, 3);
    CHECK(fit.order > 0.0);
  }
}
