#include "nlwave/state.hpp"

#include <cmath>

#include "nlwave/errors.hpp"

namespace nlwave {

StateVector::StateVector(TorusField u_, TorusField v_)
    : u(std::move(u_)), v(std::move(v_)) {
  if (!(u.grid() == v.grid()))
    throw ShapeError("state components live on different grids");
}

double field_norm(const TorusField& f, const NormKind& kind) {
  switch (kind.tag) {
    case NormKind::Tag::sobolev:
      return sobolev_norm(f, kind.param);
    case NormKind::Tag::lebesgue:
      return lebesgue_norm(f, kind.param);
    default:
      throw DomainError("product norms apply to states, not fields");
  }
}

double product_norm(const StateVector& U, const NormKind& kind) {
  double a = 0.0;
  switch (kind.tag) {
    case NormKind::Tag::product_h1_l2:
      a = 1.0;
      break;
    case NormKind::Tag::product_l2_hm1:
      a = 0.0;
      break;
    default:
      throw DomainError("product_norm needs a product norm kind");
  }
  const double nu = sobolev_norm(U.u, a);
  const double nv = sobolev_norm(U.v, a - 1.0);
  return std::sqrt(nu * nu + nv * nv);
}

}  // namespace nlwave
