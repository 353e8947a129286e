// TorusField arithmetic, transforms, projections and norms.

#include "nlwave/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlwave/fft.hpp"

namespace nlwave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw ShapeError("fields live on different grids");
}

double scale_out(int dim) {  // (2*pi)^(-d/2)
  return std::pow(kTwoPi, -0.5 * dim);
}

}  // namespace

bool TorusField::all_finite() const {
  for (const Complex& c : coeff_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

double TorusField::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& c : coeff_) m = std::max(m, std::abs(c));
  return m;
}

double TorusField::hermitian_defect() const {
  const double scale = max_abs_coeff();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for_each_mode(grid_, [&](const std::array<int, 3>& k, std::int64_t off) {
    const std::array<int, 3> mk{-k[0], -k[1], -k[2]};
    worst = std::max(worst, std::abs(coeff_[off] - std::conj(at(mk))));
  });
  return worst / scale;
}

TorusField& TorusField::operator+=(const TorusField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
  real_ = real_ && o.real_;
  return *this;
}

TorusField& TorusField::operator-=(const TorusField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
  real_ = real_ && o.real_;
  return *this;
}

TorusField& TorusField::operator*=(double s) {
  for (Complex& c : coeff_) c *= s;
  return *this;
}

std::vector<Complex> to_physical(const TorusField& f) {
  std::vector<Complex> samples = fft::backward(f.grid(), f.coefficients());
  const double s = scale_out(f.grid().dim);
  for (Complex& c : samples) c *= s;
  return samples;
}

std::vector<double> to_physical_real(const TorusField& f) {
  const std::vector<Complex> samples = to_physical(f);
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = samples[i].real();
  return out;
}

TorusField from_physical(std::span<const Complex> samples, const GridSpec& g) {
  if (std::int64_t(samples.size()) != g.total_modes())
    throw ShapeError("sample count does not match the collocation grid");
  TorusField f(g, false);
  std::vector<Complex> hat = fft::forward(g, samples);
  const double s = std::pow(kTwoPi, 0.5 * g.dim) / double(g.total_modes());
  for (std::int64_t i = 0; i < g.total_modes(); ++i) f[i] = s * hat[i];
  return f;
}

TorusField from_physical(std::span<const double> samples, const GridSpec& g) {
  std::vector<Complex> tmp(samples.begin(), samples.end());
  TorusField f = from_physical(std::span<const Complex>(tmp), g);
  f.set_real_valued(true);
  return f;
}

TorusField project(const TorusField& f, double cutoff) {
  if (!(cutoff >= 0.0)) throw DomainError("projection cutoff must be >= 0");
  TorusField out(f.grid(), f.real_valued());
  const int keep = cutoff >= double(f.grid().degree)
                       ? f.grid().degree
                       : int(std::floor(cutoff));
  for_each_mode(f.grid(), [&](const std::array<int, 3>& k, std::int64_t off) {
    if (k_inf_norm(k) <= keep) out[off] = f[off];
  });
  return out;
}

TorusField regrid(const TorusField& f, int degree) {
  const GridSpec to(f.grid().dim, degree);
  TorusField out(to, f.real_valued());
  const int keep = std::min(f.grid().degree, degree);
  for_each_mode(to, [&](const std::array<int, 3>& k, std::int64_t off) {
    if (k_inf_norm(k) <= keep) out[off] = f.at(k);
  });
  return out;
}

TorusField pointwise_power(const TorusField& f, int alpha, bool dealias) {
  if (alpha < 2 || alpha > 5) throw DomainError("power must be in {2..5}");
  if (!dealias) {
    std::vector<double> s = to_physical_real(f);
    for (double& x : s) {
      double p = x;
      for (int i = 1; i < alpha; ++i) p *= x;
      x = p;
    }
    return from_physical(std::span<const double>(s), f.grid());
  }
  // Exact product: f^alpha has degree <= alpha*K, so quadrature on the padded
  // grid is alias-free and truncation back to K gives Pi_K(f^alpha).
  const TorusField padded = regrid(f, alpha * f.grid().degree);
  std::vector<double> s = to_physical_real(padded);
  for (double& x : s) {
    double p = x;
    for (int i = 1; i < alpha; ++i) p *= x;
    x = p;
  }
  const TorusField big = from_physical(std::span<const double>(s), padded.grid());
  return regrid(big, f.grid().degree);
}

double sobolev_norm(const TorusField& f, double s) {
  double acc = 0.0;
  for_each_mode(f.grid(), [&](const std::array<int, 3>& k, std::int64_t off) {
    acc += std::pow(1.0 + k_sq(k), s) * std::norm(f[off]);
  });
  return std::sqrt(acc);
}

double lebesgue_norm(const TorusField& f, double q) {
  if (!(q >= 1.0)) throw DomainError("Lebesgue exponent must be in [1, inf]");
  const std::vector<Complex> samples = to_physical(f);
  if (std::isinf(q)) {
    double m = 0.0;
    for (const Complex& c : samples) m = std::max(m, std::abs(c));
    return m;
  }
  double acc = 0.0;
  for (const Complex& c : samples) acc += std::pow(std::abs(c), q);
  const int d = f.grid().dim;
  const double cell = std::pow(kTwoPi, d) / double(f.grid().total_modes());
  return std::pow(cell * acc, 1.0 / q);
}

}  // namespace nlwave
