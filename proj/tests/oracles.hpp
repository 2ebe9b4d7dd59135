#pragma once

// Reference computations that share no code with the library: plain 2x2
// complex matrices, eigendecomposition exponentials, barycentric hull tests.

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "genus2/repvar.hpp"

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;

// [[w + iz, x + iy], [-x + iy, w - iz]] written out from the coordinates.
inline M2 matrix(double w, double x, double y, double z) {
  M2 m;
  m << C(w, z), C(x, y), C(-x, y), C(w, -z);
  return m;
}

inline M2 matrix(const genus2::GroupElement& g) {
  const auto c = g.coords();
  return matrix(c[0], c[1], c[2], c[3]);
}

// su(2) vector v as v1 E1 + v2 E2 + v3 E3.
inline M2 algebra_matrix(const genus2::Vec3& v) { return matrix(0.0, v.x(), v.y(), v.z()); }

inline double frobenius(const M2& a, const M2& b) { return (a - b).norm(); }

inline M2 identity() { return M2::Identity(); }

inline M2 commutator(const M2& a, const M2& b) { return a * b * a.inverse() * b.inverse(); }

// exp(A) = V diag(e^lambda) V^-1 from a numerical eigendecomposition.
inline M2 expm(const M2& a) {
  Eigen::ComplexEigenSolver<M2> es(a);
  const M2 v = es.eigenvectors();
  M2 d = M2::Zero();
  for (int i = 0; i < 2; ++i) d(i, i) = std::exp(es.eigenvalues()[i]);
  return v * d * v.inverse();
}

// f = arccos(Re tr / 2) / pi, straight from the matrix trace.
inline double trace_angle(const M2& m) {
  const double half = std::clamp(m.trace().real() / 2.0, -1.0, 1.0);
  return std::acos(half) / M_PI;
}

// Barycentric coordinates of x with respect to a tetrahedron; x lies in the
// closed hull iff every coordinate is >= -tol.
inline std::array<double, 4> barycentric(const std::array<genus2::Vec3, 4>& v, const genus2::Vec3& x) {
  Eigen::Matrix4d a;
  Eigen::Vector4d b;
  for (int j = 0; j < 4; ++j) {
    a.block<3, 1>(0, j) = v[static_cast<std::size_t>(j)];
    a(3, j) = 1.0;
  }
  b << x, 1.0;
  const Eigen::Vector4d l = a.fullPivLu().solve(b);
  return {l[0], l[1], l[2], l[3]};
}

inline bool in_hull(const std::array<genus2::Vec3, 4>& v, const genus2::Vec3& x, double tol) {
  const auto l = barycentric(v, x);
  for (double c : l) {
    if (c < -tol) return false;
  }
  return true;
}

// Does every slot share one axis (or sit at +-I)?
inline bool shared_axis(const genus2::Representation& rho, double tol) {
  genus2::Vec3 axis = genus2::Vec3::Zero();
  for (const auto& x : rho.elements()) {
    if (x.vec().norm() > axis.norm()) axis = x.vec();
  }
  if (axis.norm() < tol) return true;
  axis.normalize();
  for (const auto& x : rho.elements()) {
    if (x.vec().cross(axis).norm() > tol) return false;
  }
  return true;
}

}  // namespace oracle
