#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nlwave {

/// Invalid or inconsistent run configuration (bad α, non-matching τ grid, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Array/grid shape mismatch between operands.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// (p,q) pair fails the admissibility conditions for Strichartz norms.
struct AdmissibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File I/O failure, message carries the offending path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite coefficients appeared while time stepping. step < 0 means the
/// step index is unknown (raised inside a single step, annotated by evolve).
struct BlowupError : std::runtime_error {
  std::int64_t step;
  explicit BlowupError(std::int64_t step_index)
      : std::runtime_error("numerical blow-up: non-finite state after step " +
                           std::to_string(step_index)),
        step(step_index) {}
};

}  // namespace nlwave
