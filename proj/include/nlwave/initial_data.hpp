#pragma once

#include <cstdint>
#include <string>

#include "nlwave/state.hpp"

namespace nlwave {

enum class DataMode { deterministic, random };

std::string to_string(DataMode m);
DataMode data_mode_from_string(const std::string& name);

/// Finite-energy, no-extra-regularity initial data: u0 at the H^1 borderline,
/// v0 at the L^2 borderline, both scaled to exact norm targets.
struct InitialDataSpec {
  DataMode mode = DataMode::deterministic;
  double eps = 1e-4;      // regularity slack; u0 ~ H^(1+eps), v0 ~ H^eps
  double target_u = 3.0;  // |u0|_{H^1}
  double target_v = 3.0;  // |v0|_{L^2}
  std::uint64_t seed = 0; // random mode only

  void validate() const;
  bool operator==(const InitialDataSpec&) const = default;
};

/// c_k = (1+|k|^2)^(-(d/2+s+eps)/2): real, positive, radially symmetric
/// coefficients sitting exactly at the H^(s+eps) regularity borderline.
TorusField deterministic_rough(const GridSpec& g, double s, double eps);

/// Same envelope times i.i.d. r_k uniform in [-1,1]+i[-1,1], then Hermitian
/// symmetrized (c_{-k} <- conj(c_k) for lexicographically positive k, c_0
/// real). Bit-reproducible from the seed: the generator is splitmix64, modes
/// are visited in k-lexicographic order (k1 slowest), two draws per mode
/// (real then imaginary), each draw mapped by u = (x >> 11) * 2^-53 to [0,1)
/// and then to 2u - 1.
TorusField random_rough(const GridSpec& g, double s, double eps,
                        std::uint64_t seed);

/// (target/|f|) * f for a sobolev or lebesgue norm kind; the zero field is a
/// domain error.
TorusField scale_to(const TorusField& f, const NormKind& kind, double target);

/// u0 from the s = 1 spectrum scaled to |u0|_{H^1} = target_u, v0 from the
/// s = 0 spectrum scaled to |v0|_{L^2} = target_v. Random mode draws u and v
/// from independent sub-seeds derived from spec.seed by splitmix64.
StateVector make_initial_state(const InitialDataSpec& spec, const GridSpec& g);

}  // namespace nlwave
