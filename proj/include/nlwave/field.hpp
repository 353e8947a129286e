#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nlwave/grid.hpp"

namespace nlwave {

using Complex = std::complex<double>;

/// Band-limited function on the torus, stored by Fourier coefficients with the
/// convention f(x) = (2*pi)^(-d/2) * sum_k c_k e^{i k.x}, k in {-K..K}^d.
///
/// real_valued marks fields that represent real functions; such fields keep
/// Hermitian symmetry c_{-k} = conj(c_k) up to round-off.
class TorusField {
 public:
  TorusField() = default;
  TorusField(const GridSpec& grid, bool real_valued)
      : grid_(grid), real_(real_valued), coeff_(grid.total_modes()) {}

  static TorusField zero(const GridSpec& grid, bool real_valued = true) {
    return TorusField(grid, real_valued);
  }

  const GridSpec& grid() const { return grid_; }
  bool real_valued() const { return real_; }
  void set_real_valued(bool r) { real_ = r; }

  Complex& at(std::array<int, 3> k) { return coeff_[grid_.offset_of(k)]; }
  const Complex& at(std::array<int, 3> k) const {
    return coeff_[grid_.offset_of(k)];
  }
  Complex& operator[](std::int64_t off) { return coeff_[off]; }
  const Complex& operator[](std::int64_t off) const { return coeff_[off]; }

  std::span<const Complex> coefficients() const { return coeff_; }
  std::span<Complex> coefficients() { return coeff_; }

  bool all_finite() const;
  double max_abs_coeff() const;
  /// Largest Hermitian-symmetry defect |c_k - conj(c_{-k})| relative to the
  /// largest coefficient magnitude (0 for the zero field).
  double hermitian_defect() const;

  TorusField& operator+=(const TorusField& o);
  TorusField& operator-=(const TorusField& o);
  TorusField& operator*=(double s);

  friend TorusField operator+(TorusField a, const TorusField& b) {
    a += b;
    return a;
  }
  friend TorusField operator-(TorusField a, const TorusField& b) {
    a -= b;
    return a;
  }
  friend TorusField operator*(double s, TorusField f) {
    f *= s;
    return f;
  }

 private:
  GridSpec grid_;
  bool real_ = true;
  std::vector<Complex> coeff_;
};

/// Samples on the M^d collocation grid, row-major over j in {0..M-1}^d with
/// node x_j = 2*pi*j/M per axis (the same point set as j in {-K..K}^d).
std::vector<Complex> to_physical(const TorusField& f);
/// Real parts of the samples; intended for real_valued fields.
std::vector<double> to_physical_real(const TorusField& f);

/// Trigonometric interpolation of the sampled values: exact on trigonometric
/// polynomials of degree <= K, aliases higher modes per the DFT.
TorusField from_physical(std::span<const Complex> samples, const GridSpec& g);
TorusField from_physical(std::span<const double> samples, const GridSpec& g);

/// Square frequency cutoff: keeps modes |k|_inf <= cutoff, zeroes the rest.
TorusField project(const TorusField& f, double cutoff);

/// Copies the overlapping modes of f onto a grid of the given degree
/// (truncation or zero-padded extension).
TorusField regrid(const TorusField& f, int degree);

/// I_K(f^alpha) (dealias = false, the scheme's aliased product) or
/// Pi_K(f^alpha) computed exactly on a grid zero-padded to degree alpha*K
/// (dealias = true). f must represent a real function; alpha in {2..5}.
TorusField pointwise_power(const TorusField& f, int alpha, bool dealias);

/// sqrt(sum_k (1+|k|^2)^s |c_k|^2) over the stored modes.
double sobolev_norm(const TorusField& f, double s);

/// Collocation-quadrature L^q norm, ((2*pi)^d M^-d sum_j |f(x_j)|^q)^(1/q);
/// q = infinity returns max_j |f(x_j)|.
double lebesgue_norm(const TorusField& f, double q);

}  // namespace nlwave
