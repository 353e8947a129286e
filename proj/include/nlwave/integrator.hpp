#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "nlwave/propagator.hpp"

namespace nlwave {

/// Semilinear wave problem u_tt - Laplace(u) + mu*u^alpha = 0 on the d-torus.
/// mu = 0 switches the nonlinearity off (linear-flow diagnostics); the CLI
/// only exposes mu in {-1, +1}.
struct ProblemConfig {
  int alpha = 3;  // {2,3,4,5}
  int mu = 1;     // {-1, 0, +1}
  int dim = 3;    // {1,2,3}

  void validate() const;
  bool operator==(const ProblemConfig&) const = default;
};

enum class Scheme { strang, lie };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

/// Discretization parameters of one run.
struct SchemeConfig {
  double tau = 0.0;           // step size, 0 < tau <= 1
  double horizon = 0.0;       // T >= tau, an exact multiple of tau
  int degree = 1;             // spectral degree K
  double filter_cutoff = 0.0; // default floor(1/tau)
  Scheme scheme = Scheme::strang;
  bool dealias = false;
  bool shortcut = false;

  /// Fills filter_cutoff with floor(1/tau) and validates.
  static SchemeConfig make(double tau, double horizon, int degree,
                           Scheme scheme = Scheme::strang);

  void validate() const;
  bool operator==(const SchemeConfig&) const = default;
};

/// Filtered nonlinearity of the scheme: -mu * I_K((Pi_cutoff u)^alpha),
/// or the exactly dealiased product when cfg.dealias is set.
TorusField g_eval(const TorusField& u, const ProblemConfig& p,
                  const SchemeConfig& cfg);

/// One step of the filtered Strang splitting,
///   U_half = e^{tau A}[U + tau/2 (0, g(u))],  U' = U_half + tau/2 (0, g(u_half)).
/// Throws BlowupError (step = -1) when the result is non-finite.
StateVector strang_step(const StateVector& U, const ProblemConfig& p,
                        const SchemeConfig& cfg);

/// One step of the filtered Lie splitting, U' = e^{tau A}(U + tau (0, g(u))).
StateVector lie_step(const StateVector& U, const ProblemConfig& p,
                     const SchemeConfig& cfg);

/// Dispatches on cfg.scheme.
StateVector scheme_step(const StateVector& U, const ProblemConfig& p,
                        const SchemeConfig& cfg);

/// Called at every grid time t_n = n*tau, n = 0..N, with a read-only state.
struct Observer {
  std::function<void(std::int64_t step, double time, const StateVector&)> fn;
};

/// Runs round(T/tau) steps of the selected scheme. T must be an exact
/// multiple of tau. When cfg.shortcut is set and K > alpha*filter_cutoff, the
/// band |k|_inf > alpha*filter_cutoff evolves by the exact group while only
/// the nonlinear band is time stepped (on a reduced grid); otherwise the flag
/// is ignored with a warning. Throws BlowupError with the failing step index.
StateVector evolve(const StateVector& U0, const ProblemConfig& p,
                   const SchemeConfig& cfg,
                   std::span<const Observer> observers = {});

/// Closed-form high-frequency evolution: e^{n tau A} applied to the band
/// |k|_inf > alpha/tau of U0. Requires K > alpha/tau. Matches the same band
/// of evolve's output to round-off.
StateVector high_freq_shortcut(const StateVector& U0, std::int64_t n_steps,
                               const ProblemConfig& p, const SchemeConfig& cfg);

/// E = int 1/2 |v|^2 + 1/2 |grad u|^2 + mu/(alpha+1) u^(alpha+1) dx.
/// Quadratic parts by Parseval; the potential by exact zero-padded quadrature.
double energy(const StateVector& U, const ProblemConfig& p);

}  // namespace nlwave
