#pragma once

#include "nlwave/state.hpp"

namespace nlwave {

/// Wave operator A(u,v) = (v, Laplacian u); the Laplacian is the Fourier
/// multiplier -|k|^2.
StateVector apply_A(const StateVector& U);

/// Exact group e^{tA}: per mode k != 0 the 2x2 block
///   [ cos(t|k|)        sin(t|k|)/|k| ]
///   [ -|k| sin(t|k|)   cos(t|k|)     ]
/// and the shear [[1, t], [0, 1]] on the mean mode.
StateVector apply_group(const StateVector& U, double t);

/// Diagonal square cutoff on both components (|k|_inf <= cutoff kept).
StateVector apply_filter(const StateVector& U, double cutoff);

/// Summation-by-parts multiplier Psi_tau, the bounded operator solving
/// tau * A * Filter(1/tau) = (e^{tau A} - I) * Psi_tau.
///
/// Zero outside |k|_inf <= floor(1/tau); inside, with x = tau*|k| and
/// m(x) = x sin x / (cos x - 1) = -x cot(x/2) (m(0) = -2), the block
///   [ -m(x)/2       -tau/2  ]
///   [ tau|k|^2/2    -m(x)/2 ].
/// Requires 0 < tau <= 1, which keeps x <= sqrt(3) < pi on the support.
StateVector apply_psi(const StateVector& U, double tau);

}  // namespace nlwave
