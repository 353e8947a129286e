// Rough initial data at the finite-energy regularity borderline, deterministic
// and randomized, with exact norm scaling.

#include "nlwave/initial_data.hpp"

#include <cmath>

#include "nlwave/errors.hpp"

namespace nlwave {

namespace {

// splitmix64; the documented generator behind random_rough.
std::uint64_t mix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double unit_draw(std::uint64_t& state) {  // uniform in [0, 1)
  return double(mix64(state) >> 11) * 0x1.0p-53;
}

double symmetric_draw(std::uint64_t& state) {  // uniform in [-1, 1)
  return 2.0 * unit_draw(state) - 1.0;
}

// Lexicographic comparison against the origin; k1 most significant.
bool lex_positive(const std::array<int, 3>& k) {
  for (int a = 0; a < 3; ++a) {
    if (k[a] > 0) return true;
    if (k[a] < 0) return false;
  }
  return false;
}

double envelope(const std::array<int, 3>& k, int dim, double s, double eps) {
  return std::pow(1.0 + k_sq(k), -0.5 * (0.5 * dim + s + eps));
}

}  // namespace

std::string to_string(DataMode m) {
  return m == DataMode::deterministic ? "det" : "random";
}

DataMode data_mode_from_string(const std::string& name) {
  if (name == "det" || name == "deterministic") return DataMode::deterministic;
  if (name == "random") return DataMode::random;
  throw ConfigError("unknown data mode '" + name + "'");
}

void InitialDataSpec::validate() const {
  if (!(eps > 0.0)) throw ConfigError("regularity slack eps must be > 0");
  if (!(target_u > 0.0) || !(target_v > 0.0))
    throw ConfigError("norm targets must be > 0");
}

TorusField deterministic_rough(const GridSpec& g, double s, double eps) {
  TorusField f(g, true);
  for_each_mode(g, [&](const std::array<int, 3>& k, std::int64_t off) {
    f[off] = envelope(k, g.dim, s, eps);
  });
  return f;
}

TorusField random_rough(const GridSpec& g, double s, double eps,
                        std::uint64_t seed) {
  TorusField f(g, true);
  std::uint64_t state = seed;
  const int K = g.degree;
  // k-lexicographic traversal, k1 slowest; two draws per mode.
  std::array<int, 3> k{0, 0, 0};
  const int lo2 = g.dim >= 2 ? -K : 0, hi2 = g.dim >= 2 ? K : 0;
  const int lo3 = g.dim >= 3 ? -K : 0, hi3 = g.dim >= 3 ? K : 0;
  for (k[0] = -K; k[0] <= K; ++k[0])
    for (k[1] = lo2; k[1] <= hi2; ++k[1])
      for (k[2] = lo3; k[2] <= hi3; ++k[2]) {
        const double re = symmetric_draw(state);
        const double im = symmetric_draw(state);
        f.at(k) = envelope(k, g.dim, s, eps) * Complex(re, im);
      }
  // Hermitian symmetrization keeps the field real: mirror the draws of the
  // lexicographically positive half, make the mean mode real.
  for_each_mode(g, [&](const std::array<int, 3>& kk, std::int64_t off) {
    if (lex_positive(kk)) {
      f.at({-kk[0], -kk[1], -kk[2]}) = std::conj(f[off]);
    } else if (kk == std::array<int, 3>{0, 0, 0}) {
      f[off] = Complex(f[off].real(), 0.0);
    }
  });
  return f;
}

TorusField scale_to(const TorusField& f, const NormKind& kind, double target) {
  const double n = field_norm(f, kind);
  if (!(n > 0.0) || !std::isfinite(n))
    throw DomainError("cannot scale a field with zero or non-finite norm");
  return (target / n) * f;
}

StateVector make_initial_state(const InitialDataSpec& spec, const GridSpec& g) {
  spec.validate();
  TorusField u0, v0;
  if (spec.mode == DataMode::deterministic) {
    u0 = deterministic_rough(g, 1.0, spec.eps);
    v0 = deterministic_rough(g, 0.0, spec.eps);
  } else {
    std::uint64_t state = spec.seed;
    const std::uint64_t seed_u = mix64(state);
    const std::uint64_t seed_v = mix64(state);
    u0 = random_rough(g, 1.0, spec.eps, seed_u);
    v0 = random_rough(g, 0.0, spec.eps, seed_v);
  }
  u0 = scale_to(u0, NormKind::sobolev(1.0), spec.target_u);
  v0 = scale_to(v0, NormKind::sobolev(0.0), spec.target_v);
  return StateVector(std::move(u0), std::move(v0));
}

}  // namespace nlwave
