// Exact Fourier-multiplier operators of the linear wave system. All four
// operators act mode by mode with real, even-in-k symbols, so Hermitian
// symmetry of real states survives every application.

#include "nlwave/propagator.hpp"

#include <cmath>

#include "nlwave/errors.hpp"

namespace nlwave {

namespace {

// m(x) = x sin x / (cos x - 1), evaluated as -x cot(x/2) with the removable
// singularity m(0) = -2 handled by its series.
double sbp_diag(double x) {
  if (x < 1e-6) return -2.0 + x * x / 6.0;
  return -x / std::tan(0.5 * x);
}

}  // namespace

StateVector apply_A(const StateVector& U) {
  StateVector out = U;
  out.u = U.v;
  for_each_mode(U.grid(), [&](const std::array<int, 3>& k, std::int64_t off) {
    out.v[off] = -k_sq(k) * U.u[off];
  });
  return out;
}

StateVector apply_group(const StateVector& U, double t) {
  StateVector out = U;
  for_each_mode(U.grid(), [&](const std::array<int, 3>& k, std::int64_t off) {
    const double ksq = k_sq(k);
    const Complex u = U.u[off];
    const Complex v = U.v[off];
    if (ksq == 0.0) {
      out.u[off] = u + t * v;
      out.v[off] = v;
    } else {
      const double kappa = std::sqrt(ksq);
      const double c = std::cos(t * kappa);
      const double s = std::sin(t * kappa);
      out.u[off] = c * u + (s / kappa) * v;
      out.v[off] = -kappa * s * u + c * v;
    }
  });
  return out;
}

StateVector apply_filter(const StateVector& U, double cutoff) {
  return StateVector(project(U.u, cutoff), project(U.v, cutoff));
}

StateVector apply_psi(const StateVector& U, double tau) {
  if (!(tau > 0.0) || tau > 1.0)
    throw DomainError("apply_psi requires 0 < tau <= 1");
  const double inv = 1.0 / tau;
  const int keep = inv >= double(U.grid().degree) ? U.grid().degree
                                                  : int(std::floor(inv));
  StateVector out = StateVector::zero(U.grid());
  for_each_mode(U.grid(), [&](const std::array<int, 3>& k, std::int64_t off) {
    if (k_inf_norm(k) > keep) return;
    const double ksq = k_sq(k);
    const double x = tau * std::sqrt(ksq);
    const double m = sbp_diag(x);
    const Complex u = U.u[off];
    const Complex v = U.v[off];
    out.u[off] = -0.5 * m * u - 0.5 * tau * v;
    out.v[off] = 0.5 * tau * ksq * u - 0.5 * m * v;
  });
  return out;
}

}  // namespace nlwave
