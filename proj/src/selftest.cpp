// Built-in invariant suite behind the `selftest` CLI subcommand. Each check is
// a cheap, deterministic assertion of a structural identity of the solver.

#include "nlwave/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "nlwave/initial_data.hpp"
#include "nlwave/integrator.hpp"
#include "nlwave/study.hpp"

namespace nlwave {

namespace {

std::uint64_t mix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double draw(std::uint64_t& s) {
  return 2.0 * (double(mix64(s) >> 11) * 0x1.0p-53) - 1.0;
}

TorusField random_real_field(const GridSpec& g, std::uint64_t seed) {
  TorusField f(g, true);
  std::uint64_t s = seed;
  for_each_mode(g, [&](const std::array<int, 3>& k, std::int64_t off) {
    f[off] = Complex(draw(s), draw(s));
  });
  // symmetrize: average with the reflected conjugate
  TorusField out(g, true);
  for_each_mode(g, [&](const std::array<int, 3>& k, std::int64_t off) {
    const Complex mirrored = std::conj(f.at({-k[0], -k[1], -k[2]}));
    out[off] = 0.5 * (f[off] + mirrored);
  });
  return out;
}

StateVector random_state(const GridSpec& g, std::uint64_t seed) {
  return StateVector(random_real_field(g, seed),
                     random_real_field(g, seed ^ 0xABCDEF1234567890ull));
}

double rel_diff(const StateVector& a, const StateVector& b) {
  const double scale = product_norm(a, NormKind::product_h1_l2()) +
                       product_norm(b, NormKind::product_h1_l2());
  if (scale == 0.0) return 0.0;
  return product_norm(a - b, NormKind::product_h1_l2()) / scale;
}

}  // namespace

int run_selftest(std::ostream& out) {
  struct Check {
    const char* name;
    std::function<bool()> fn;
  };
  std::vector<Check> checks;

  checks.push_back({"transform round trip", [] {
    for (int d = 1; d <= 3; ++d)
      for (int K : {1, 2, 5, 8}) {
        const GridSpec g(d, K);
        const TorusField f = random_real_field(g, 11u * d + K);
        const TorusField back =
            from_physical(std::span<const Complex>(to_physical(f)), g);
        double worst = 0.0;
        for (std::int64_t i = 0; i < g.total_modes(); ++i)
          worst = std::max(worst, std::abs(f[i] - back[i]));
        if (worst > 1e-13 * std::max(1.0, f.max_abs_coeff())) return false;
      }
    return true;
  }});

  checks.push_back({"interpolation aliasing (k=2 -> k=-1 on 3 points)", [] {
    const GridSpec g(1, 1);
    std::vector<Complex> s(3);
    for (int j = 0; j < 3; ++j) {
      const double x = 2.0 * std::numbers::pi * j / 3.0;
      s[j] = std::polar(1.0, 2.0 * x);
    }
    const TorusField f = from_physical(std::span<const Complex>(s), g);
    const double root = std::sqrt(2.0 * std::numbers::pi);
    return std::abs(f.at({-1, 0, 0}) - Complex(root, 0.0)) < 1e-13 * root &&
           std::abs(f.at({0, 0, 0})) < 1e-13 * root &&
           std::abs(f.at({1, 0, 0})) < 1e-13 * root;
  }});

  checks.push_back({"Parseval: H^0 equals quadrature L^2", [] {
    const GridSpec g(3, 4);
    const TorusField f = random_real_field(g, 99);
    const double a = sobolev_norm(f, 0.0);
    const double b = lebesgue_norm(f, 2.0);
    return std::abs(a - b) <= 1e-12 * a;
  }});

  checks.push_back({"projection tail and Bernstein inequalities", [] {
    const GridSpec g(3, 8);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const TorusField f = random_real_field(g, seed);
      for (int N : {1, 2, 4}) {
        const TorusField tail = f - project(f, N);
        if (sobolev_norm(tail, 0.0) >
            std::pow(N, -1.0) * sobolev_norm(f, 1.0) * (1.0 + 1e-12))
          return false;
        if (sobolev_norm(project(f, N), 1.0) >
            2.0 * N * sobolev_norm(f, 0.0) * (1.0 + 1e-12))
          return false;
      }
    }
    return true;
  }});

  checks.push_back({"group law, reversibility, mode energy", [] {
    const GridSpec g(3, 4);
    for (std::uint64_t seed = 3; seed <= 6; ++seed) {
      const StateVector U = random_state(g, seed);
      const StateVector ab = apply_group(apply_group(U, 0.35), 0.4);
      const StateVector once = apply_group(U, 0.75);
      if (rel_diff(ab, once) > 1e-12) return false;
      if (rel_diff(apply_group(apply_group(U, 0.6), -0.6), U) > 1e-12)
        return false;
      const StateVector W = apply_group(U, 0.9);
      bool ok = true;
      for_each_mode(g, [&](const std::array<int, 3>& k, std::int64_t off) {
        const double ksq = k_sq(k);
        if (ksq == 0.0) return;
        const double e0 = ksq * std::norm(U.u[off]) + std::norm(U.v[off]);
        const double e1 = ksq * std::norm(W.u[off]) + std::norm(W.v[off]);
        if (std::abs(e0 - e1) > 1e-12 * std::max(e0, 1e-30)) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  }});

  checks.push_back({"summation-by-parts identity", [] {
    for (double tau : {1.0 / 8.0, 1.0 / 37.0, 1.0 / 256.0})
      for (int d : {1, 3}) {
        const GridSpec g(d, 8);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const StateVector U = random_state(g, 1000 * d + seed);
          const StateVector lhs =
              tau * apply_A(apply_filter(U, 1.0 / tau));
          const StateVector psi = apply_psi(U, tau);
          const StateVector rhs = apply_group(psi, tau) - psi;
          if (rel_diff(lhs, rhs) > 1e-12) return false;
        }
      }
    return true;
  }});

  checks.push_back({"summation-by-parts operator is uniformly bounded", [] {
    const GridSpec g(3, 8);
    for (int e = 3; e <= 10; ++e) {
      const double tau = std::pow(2.0, -e);
      for (std::uint64_t seed = 40; seed < 44; ++seed) {
        const StateVector U = random_state(g, seed);
        const StateVector P = apply_psi(U, tau);
        for (double r : {0.0, 1.0}) {
          const double num = std::hypot(sobolev_norm(P.u, r),
                                        sobolev_norm(P.v, r - 1.0));
          const double den = std::hypot(sobolev_norm(U.u, r),
                                        sobolev_norm(U.v, r - 1.0));
          if (num > 3.0 * den) return false;
        }
      }
    }
    return true;
  }});

  checks.push_back({"splitting hand values on the mean mode", [] {
    const GridSpec g(1, 2);
    StateVector U = StateVector::zero(g);
    const double root = std::sqrt(2.0 * std::numbers::pi);
    U.u.at({0, 0, 0}) = root;  // u = 1
    const ProblemConfig p{3, 1, 1};
    const SchemeConfig cfg = SchemeConfig::make(0.5, 0.5, 2);
    const StateVector S = strang_step(U, p, cfg);
    const StateVector L = lie_step(U, p, cfg);
    return std::abs(S.u.at({0, 0, 0}) / root - 0.875) < 1e-14 &&
           std::abs(S.v.at({0, 0, 0}) / root - (-0.41748046875)) < 1e-14 &&
           std::abs(L.u.at({0, 0, 0}) / root - 0.75) < 1e-14 &&
           std::abs(L.v.at({0, 0, 0}) / root - (-0.5)) < 1e-14;
  }});

  checks.push_back({"strang step with nonlinearity off equals the group", [] {
    const GridSpec g(2, 4);
    const StateVector U = random_state(g, 77);
    const ProblemConfig p{3, 0, 2};
    const SchemeConfig cfg = SchemeConfig::make(0.25, 0.25, 4);
    return rel_diff(strang_step(U, p, cfg), apply_group(U, 0.25)) == 0.0;
  }});

  checks.push_back({"high-frequency band rides the exact group", [] {
    const ProblemConfig p{3, 1, 1};
    SchemeConfig cfg = SchemeConfig::make(0.125, 0.5, 32);
    const GridSpec g(1, 32);
    InitialDataSpec data;
    const StateVector U0 = make_initial_state(data, g);
    const StateVector full = evolve(U0, p, cfg);
    const StateVector fast = high_freq_shortcut(U0, 4, p, cfg);
    const double band = double(p.alpha) / cfg.tau;
    StateVector high = full - apply_filter(full, band);
    return rel_diff(high, fast) < 1e-11;
  }});

  checks.push_back({"energy is conserved by the linear flow", [] {
    const GridSpec g(3, 4);
    const StateVector U = random_state(g, 123);
    const ProblemConfig lin{3, 0, 3};
    const double e0 = energy(U, lin);
    const double e1 = energy(apply_group(U, 0.77), lin);
    return std::abs(e0 - e1) <= 1e-12 * e0;
  }});

  checks.push_back({"order fit recovers exact power laws", [] {
    std::vector<std::pair<double, double>> rows;
    for (int i = 0; i < 6; ++i) {
      const double tau = std::pow(2.0, -3 - i);
      rows.emplace_back(tau, 0.7 * tau * tau);
    }
    const OrderFit fit = fit_order(rows, 8);
    return std::abs(fit.order - 2.0) < 1e-12;
  }});

  checks.push_back({"tau grid planning on exact dyadics", [] {
    const auto taus = plan_tau_grid(0.125, 0x1p-5, 0.5, 0x1p-12);
    return taus == std::vector<double>{0.125, 0.0625, 0.03125};
  }});

  checks.push_back({"norm scaling hits the target exactly", [] {
    const GridSpec g(3, 4);
    const TorusField f = deterministic_rough(g, 1.0, 1e-4);
    const TorusField scaled = scale_to(f, NormKind::sobolev(1.0), 3.0);
    return std::abs(sobolev_norm(scaled, 1.0) - 3.0) < 1e-12 * 3.0;
  }});

  checks.push_back({"random data is reproducible from the seed", [] {
    const GridSpec g(3, 4);
    const TorusField a = random_rough(g, 1.0, 1e-4, 2024);
    const TorusField b = random_rough(g, 1.0, 1e-4, 2024);
    for (std::int64_t i = 0; i < g.total_modes(); ++i)
      if (a[i] != b[i]) return false;
    return a.hermitian_defect() < 1e-13;
  }});

  int failures = 0;
  for (const Check& c : checks) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      out << "FAIL " << c.name << " (exception: " << e.what() << ")\n";
      ++failures;
      continue;
    }
    out << (ok ? "ok   " : "FAIL ") << c.name << "\n";
    if (!ok) ++failures;
  }
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << " ("
      << checks.size() - failures << "/" << checks.size() << " checks)\n";
  return failures;
}

}  // namespace nlwave
