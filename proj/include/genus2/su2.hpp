#pragma once

// SU(2) as unit quaternions.
//
// Matrix convention: q = (w, x, y, z) is the matrix
//
//     [  w + i z    x + i y ]
//     [ -x + i y    w - i z ]
//
// i.e. q = w*1 + x*E1 + y*E2 + z*E3 with
//   E1 = [[0, 1], [-1, 0]],  E2 = [[0, i], [i, 0]],  E3 = [[i, 0], [0, -i]],
// which multiply like the quaternion units (E1 E2 = E3, E2 E3 = E1,
// E3 E1 = E2). Hence diag(i, -i) = (0,0,0,1), [[0,-1],[1,0]] = (0,-1,0,0),
// and tr = 2w.
//
// su(2) elements are real 3-vectors v, standing for v1 E1 + v2 E2 + v3 E3
// (traceless anti-Hermitian, eigenvalues +-i|v|). The invariant inner
// product is the Euclidean dot product on v.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "genus2/rng.hpp"
#include "genus2/tolerances.hpp"

namespace genus2 {

using Vec3 = Eigen::Vector3d;
using Mat2c = Eigen::Matrix2cd;

class GroupElement {
 public:
  GroupElement() = default;  // identity

  // Normalizes (w, x, y, z). Throws ZeroVector on a zero quaternion.
  static GroupElement from_quaternion(double w, double x, double y, double z);
  static GroupElement from_quaternion(double w, const Vec3& v) {
    return from_quaternion(w, v.x(), v.y(), v.z());
  }
  // Projects a 2x2 complex matrix onto the quaternion coordinates and normalizes.
  static GroupElement from_matrix(const Mat2c& m);

  static GroupElement identity() { return {}; }
  static GroupElement minus_identity() { return GroupElement(-1.0, Vec3::Zero()); }
  // cos(theta) + sin(theta) E3, i.e. diag(e^{i theta}, e^{-i theta}).
  static GroupElement diagonal(double theta);

  [[nodiscard]] double w() const { return w_; }
  [[nodiscard]] const Vec3& vec() const { return v_; }
  [[nodiscard]] Eigen::Vector4d coords() const { return {w_, v_.x(), v_.y(), v_.z()}; }

  [[nodiscard]] Mat2c matrix() const;
  [[nodiscard]] double trace() const { return 2.0 * w_; }
  [[nodiscard]] GroupElement inverse() const { return GroupElement(w_, -v_); }
  [[nodiscard]] GroupElement operator-() const { return GroupElement(-w_, -v_); }

  // Frobenius distance of the matrix views.
  [[nodiscard]] double distance(const GroupElement& other) const;
  [[nodiscard]] double distance_to_center() const;
  [[nodiscard]] bool is_central(const Tolerances& tol = kDefaultTolerances) const {
    return distance_to_center() < tol.center;
  }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(double w, Vec3 v) : w_(w), v_(std::move(v)) {}

  double w_ = 1.0;
  Vec3 v_ = Vec3::Zero();
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Vec3 v) : v_(std::move(v)) {}
  AlgebraElement(double x, double y, double z) : v_(x, y, z) {}

  [[nodiscard]] const Vec3& vec() const { return v_; }
  [[nodiscard]] double norm() const { return v_.norm(); }
  [[nodiscard]] Mat2c matrix() const;
  [[nodiscard]] AlgebraElement normalized() const { return AlgebraElement(v_.normalized()); }

  friend AlgebraElement operator*(double s, const AlgebraElement& a) { return AlgebraElement(s * a.v_); }
  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    return AlgebraElement(a.v_ + b.v_);
  }
  friend AlgebraElement operator-(const AlgebraElement& a) { return AlgebraElement(-a.v_); }

 private:
  Vec3 v_ = Vec3::Zero();
};

// Invariant inner product (Killing form up to a positive constant).
inline double killing(const AlgebraElement& a, const AlgebraElement& b) { return a.vec().dot(b.vec()); }

GroupElement mul(const GroupElement& a, const GroupElement& b);
// g h g^-1 h^-1
GroupElement commutator(const GroupElement& g, const GroupElement& h);
// k g k^-1
GroupElement conjugate(const GroupElement& k, const GroupElement& g);
// Ad_k v
AlgebraElement adjoint(const GroupElement& k, const AlgebraElement& v);

GroupElement exp_alg(const AlgebraElement& v);
// Principal logarithm, |v| in [0, pi). Throws CenterAmbiguity near -I.
AlgebraElement log_grp(const GroupElement& g, const Tolerances& tol = kDefaultTolerances);

// arccos(tr(g)/2)/pi in [0, 1]. Evaluated as atan2(|vec|, w)/pi, which agrees
// with the arccos form on unit quaternions and stays accurate near +-I.
double trace_angle(const GroupElement& g);
// Same coordinate from a bare trace value: clamp tr/2 to [-1, 1], then arccos.
double trace_angle_from_trace(double tr);

// Haar-uniform element (normalized 4-dimensional Gaussian).
GroupElement haar_sample(Rng& rng);

// The shortest rotation taking unit vector `from` to unit vector `to`
// under the adjoint action: Ad_g from = to.
GroupElement rotation_between(const Vec3& from, const Vec3& to);

// Unit quaternions k solving k a_i k^-1 = b_i for all i, as an orthonormal
// basis of the real nullspace of the stacked linear constraints
// k a_i - b_i k = 0. Empty when no such k exists within tol.mat.
std::vector<Eigen::Vector4d> conjugator_space(std::span<const GroupElement> as,
                                              std::span<const GroupElement> bs,
                                              const Tolerances& tol = kDefaultTolerances);

// Max over i of the Frobenius residual |k a_i k^-1 - b_i|.
double conjugation_residual(const GroupElement& k, std::span<const GroupElement> as,
                            std::span<const GroupElement> bs);

// The least-squares solution of the stacked constraints (smallest singular
// vector), with its conjugation residual, whether or not it passes.
struct ConjugatorFit {
  GroupElement k;
  double residual = 0.0;
};
ConjugatorFit best_conjugator(std::span<const GroupElement> as, std::span<const GroupElement> bs);

std::optional<GroupElement> find_conjugator(std::span<const GroupElement> as,
                                            std::span<const GroupElement> bs,
                                            const Tolerances& tol = kDefaultTolerances);

enum class StabilizerType { Full, Torus, Center };

// Type of the common stabilizer of xs under conjugation.
StabilizerType stabilizer_type(std::span<const GroupElement> xs,
                               const Tolerances& tol = kDefaultTolerances);

const char* to_string(StabilizerType s);

}  // namespace genus2
