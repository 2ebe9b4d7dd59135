#pragma once

namespace genus2 {

// Numerical thresholds shared by every module. Distances between group
// elements are Frobenius norms of the 2x2 matrix views.
struct Tolerances {
  double norm = 1e-12;    // |q| - 1 for unit quaternions
  double mat = 1e-9;      // matrix residuals (conjugation, commutators)
  double alg = 1e-8;      // Lie algebra vectors
  double f = 1e-9;        // trace-angle coordinates
  double center = 1e-9;   // distance to +-I below which an element is central
  double rel = 1e-8;      // surface-group relation residual
  double poly = 1e-9;     // polytope membership and face activity

  // Every threshold multiplied by the same factor.
  [[nodiscard]] Tolerances scaled(double factor) const {
    return {norm * factor, mat * factor, alg * factor, f * factor,
            center * factor, rel * factor, poly * factor};
  }
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace genus2
