#pragma once

#include <limits>

#include "nlwave/field.hpp"

namespace nlwave {

/// Norm selector shared by field scaling and state norms.
struct NormKind {
  enum class Tag { sobolev, lebesgue, product_h1_l2, product_l2_hm1 };
  Tag tag = Tag::sobolev;
  double param = 0.0;  // s for sobolev, q for lebesgue

  static NormKind sobolev(double s) { return {Tag::sobolev, s}; }
  static NormKind lebesgue(double q) { return {Tag::lebesgue, q}; }
  static NormKind product_h1_l2() { return {Tag::product_h1_l2, 0.0}; }
  static NormKind product_l2_hm1() { return {Tag::product_l2_hm1, 0.0}; }
};

/// Pair (u, v) ~ (u, du/dt), the unknown of the first-order wave system.
/// Both components live on the same grid and represent real functions.
struct StateVector {
  TorusField u;
  TorusField v;

  StateVector() = default;
  StateVector(TorusField u_, TorusField v_);

  static StateVector zero(const GridSpec& g) {
    return StateVector(TorusField::zero(g), TorusField::zero(g));
  }

  const GridSpec& grid() const { return u.grid(); }
  bool all_finite() const { return u.all_finite() && v.all_finite(); }

  StateVector& operator+=(const StateVector& o) {
    u += o.u;
    v += o.v;
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    u -= o.u;
    v -= o.v;
    return *this;
  }
  StateVector& operator*=(double s) {
    u *= s;
    v *= s;
    return *this;
  }
  friend StateVector operator+(StateVector a, const StateVector& b) {
    a += b;
    return a;
  }
  friend StateVector operator-(StateVector a, const StateVector& b) {
    a -= b;
    return a;
  }
  friend StateVector operator*(double s, StateVector U) {
    U *= s;
    return U;
  }
};

/// Scalar norm of a field for the sobolev/lebesgue kinds.
double field_norm(const TorusField& f, const NormKind& kind);

/// Euclidean product norm sqrt(|u|_{H^a}^2 + |v|_{H^(a-1)}^2) with a = 1
/// (product_h1_l2) or a = 0 (product_l2_hm1).
double product_norm(const StateVector& U, const NormKind& kind);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace nlwave
