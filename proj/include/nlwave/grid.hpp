#pragma once

#include <array>
#include <cstdint>

#include "nlwave/errors.hpp"

namespace nlwave {

/// Collocation grid on the torus [-pi,pi]^d with integer wavenumbers.
///
/// Degree K keeps the modes |k|_inf <= K; every axis carries M = 2K+1 points
/// x_j = 2*pi*j/M (always odd M, no Nyquist mode). Coefficient storage is
/// FFT-natural and row-major with axis 0 slowest: per axis, slot m in [0,M)
/// holds wavenumber k = m for m <= K and k = m - M for m > K.
struct GridSpec {
  int dim = 1;     // d in {1,2,3}
  int degree = 1;  // K >= 1

  GridSpec() = default;
  GridSpec(int d, int K) : dim(d), degree(K) {
    if (d < 1 || d > 3) throw ConfigError("grid dimension must be 1, 2 or 3");
    if (K < 1) throw ConfigError("spectral degree must be >= 1");
  }

  int points_per_axis() const { return 2 * degree + 1; }

  std::int64_t total_modes() const {
    std::int64_t n = 1;
    for (int a = 0; a < dim; ++a) n *= points_per_axis();
    return n;
  }

  int slot_of(int k) const { return k >= 0 ? k : k + points_per_axis(); }

  int wavenumber_of(int slot) const {
    return slot <= degree ? slot : slot - points_per_axis();
  }

  /// Storage offset of the mode k (unused trailing axes must be 0).
  std::int64_t offset_of(std::array<int, 3> k) const {
    std::int64_t off = 0;
    for (int a = 0; a < 3; ++a) {
      if (a >= dim) {
        if (k[a] != 0) throw DomainError("mode index set on an unused axis");
        continue;
      }
      if (k[a] < -degree || k[a] > degree)
        throw DomainError("mode index outside the stored band");
      off = off * points_per_axis() + slot_of(k[a]);
    }
    return off;
  }

  bool operator==(const GridSpec&) const = default;
};

/// Visits every stored mode in storage order: f(k, offset) with k padded by
/// zeros on unused axes. Offsets are ascending and contiguous.
template <typename F>
void for_each_mode(const GridSpec& g, F&& f) {
  const int M = g.points_per_axis();
  const int n1 = M;
  const int n2 = g.dim >= 2 ? M : 1;
  const int n3 = g.dim >= 3 ? M : 1;
  std::int64_t off = 0;
  std::array<int, 3> k{0, 0, 0};
  for (int m1 = 0; m1 < n1; ++m1) {
    k[0] = g.wavenumber_of(m1);
    for (int m2 = 0; m2 < n2; ++m2) {
      k[1] = g.dim >= 2 ? g.wavenumber_of(m2) : 0;
      for (int m3 = 0; m3 < n3; ++m3) {
        k[2] = g.dim >= 3 ? g.wavenumber_of(m3) : 0;
        f(k, off++);
      }
    }
  }
}

inline int k_inf_norm(const std::array<int, 3>& k) {
  int m = 0;
  for (int a = 0; a < 3; ++a) {
    const int v = k[a] >= 0 ? k[a] : -k[a];
    if (v > m) m = v;
  }
  return m;
}

inline double k_sq(const std::array<int, 3>& k) {
  return double(k[0]) * k[0] + double(k[1]) * k[1] + double(k[2]) * k[2];
}

}  // namespace nlwave
