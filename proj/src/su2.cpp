#include "genus2/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// Left and right multiplication by q as 4x4 real matrices on (w, x, y, z).
Eigen::Matrix4d left_mul_matrix(const GroupElement& q) {
  const double w = q.w(), x = q.vec().x(), y = q.vec().y(), z = q.vec().z();
  Eigen::Matrix4d m;
  m << w, -x, -y, -z,
       x,  w, -z,  y,
       y,  z,  w, -x,
       z, -y,  x,  w;
  return m;
}

Eigen::Matrix4d right_mul_matrix(const GroupElement& q) {
  const double w = q.w(), x = q.vec().x(), y = q.vec().y(), z = q.vec().z();
  Eigen::Matrix4d m;
  m << w, -x, -y, -z,
       x,  w,  z, -y,
       y, -z,  w,  x,
       z,  y, -x,  w;
  return m;
}

GroupElement from_coords(const Eigen::Vector4d& c) {
  return GroupElement::from_quaternion(c[0], c[1], c[2], c[3]);
}

}  // namespace

GroupElement GroupElement::from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) throw ZeroVector("quaternion has zero or non-finite norm");
  return GroupElement(w / n, Vec3(x / n, y / n, z / n));
}

GroupElement GroupElement::from_matrix(const Mat2c& m) {
  // m = [[w + iz, x + iy], [-x + iy, w - iz]]; average the redundant entries.
  const double w = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double z = 0.5 * (m(0, 0).imag() - m(1, 1).imag());
  const double x = 0.5 * (m(0, 1).real() - m(1, 0).real());
  const double y = 0.5 * (m(0, 1).imag() + m(1, 0).imag());
  return from_quaternion(w, x, y, z);
}

GroupElement GroupElement::diagonal(double theta) {
  return GroupElement(std::cos(theta), Vec3(0.0, 0.0, std::sin(theta)));
}

Mat2c GroupElement::matrix() const {
  Mat2c m;
  m(0, 0) = {w_, v_.z()};
  m(0, 1) = {v_.x(), v_.y()};
  m(1, 0) = {-v_.x(), v_.y()};
  m(1, 1) = {w_, -v_.z()};
  return m;
}

double GroupElement::distance(const GroupElement& other) const {
  // |A - B|_F = sqrt(2) |a - b| for quaternion matrix views.
  return std::sqrt(2.0) * (coords() - other.coords()).norm();
}

double GroupElement::distance_to_center() const {
  return std::min(distance(identity()), distance(minus_identity()));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  const double w = a.w_ * b.w_ - a.v_.dot(b.v_);
  const Vec3 v = a.w_ * b.v_ + b.w_ * a.v_ + a.v_.cross(b.v_);
  const double n = std::sqrt(w * w + v.squaredNorm());
  return GroupElement(w / n, v / n);
}

Mat2c AlgebraElement::matrix() const {
  Mat2c m;
  m(0, 0) = kI * v_.z();
  m(0, 1) = {v_.x(), v_.y()};
  m(1, 0) = {-v_.x(), v_.y()};
  m(1, 1) = -kI * v_.z();
  return m;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) { return a * b; }

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return g * h * g.inverse() * h.inverse();
}

GroupElement conjugate(const GroupElement& k, const GroupElement& g) { return k * g * k.inverse(); }

AlgebraElement adjoint(const GroupElement& k, const AlgebraElement& v) {
  // Rotation of v by the unit quaternion k.
  const Vec3& u = k.vec();
  const Vec3 t = 2.0 * u.cross(v.vec());
  return AlgebraElement(v.vec() + k.w() * t + u.cross(t));
}

GroupElement exp_alg(const AlgebraElement& v) {
  const double theta = v.norm();
  if (theta == 0.0) return GroupElement::identity();
  // sin(theta)/theta stays accurate down to denormals via this form.
  const double s = theta < 1e-8 ? 1.0 - theta * theta / 6.0 : std::sin(theta) / theta;
  return GroupElement::from_quaternion(std::cos(theta), s * v.vec());
}

AlgebraElement log_grp(const GroupElement& g, const Tolerances& tol) {
  if (g.distance(GroupElement::minus_identity()) < tol.center) {
    throw CenterAmbiguity("log of an element within tolerance of -I");
  }
  const double s = g.vec().norm();
  if (s == 0.0) return {};
  const double theta = std::atan2(s, g.w());
  return AlgebraElement((theta / s) * g.vec());
}

double trace_angle(const GroupElement& g) {
  return std::atan2(g.vec().norm(), g.w()) / std::numbers::pi;
}

double trace_angle_from_trace(double tr) {
  return std::acos(std::clamp(tr / 2.0, -1.0, 1.0)) / std::numbers::pi;
}

GroupElement haar_sample(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
    if (w * w + x * x + y * y + z * z > 1e-300) return GroupElement::from_quaternion(w, x, y, z);
  }
}

GroupElement rotation_between(const Vec3& from, const Vec3& to) {
  const Vec3 a = from.normalized();
  const Vec3 b = to.normalized();
  const double c = a.dot(b);
  if (c < -1.0 + 1e-12) {
    // Half-turn about any axis orthogonal to a.
    Vec3 axis = a.cross(Vec3::UnitX());
    if (axis.norm() < 1e-6) axis = a.cross(Vec3::UnitY());
    return GroupElement::from_quaternion(0.0, axis.normalized());
  }
  return GroupElement::from_quaternion(1.0 + c, a.cross(b));
}

double conjugation_residual(const GroupElement& k, std::span<const GroupElement> as,
                            std::span<const GroupElement> bs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    worst = std::max(worst, conjugate(k, as[i]).distance(bs[i]));
  }
  return worst;
}

namespace {

Eigen::JacobiSVD<Eigen::MatrixXd> conjugation_svd(std::span<const GroupElement> as,
                                                  std::span<const GroupElement> bs) {
  if (as.size() != bs.size() || as.empty()) {
    throw PreconditionViolated("conjugator search needs two non-empty lists of equal length");
  }
  // For unit k: |k a - b k| = |k a k^-1 - b|, so the stacked system
  // sum_i |(R(a_i) - L(b_i)) k|^2 bounds every individual residual.
  Eigen::MatrixXd system(4 * as.size(), 4);
  for (std::size_t i = 0; i < as.size(); ++i) {
    system.block<4, 4>(4 * static_cast<Eigen::Index>(i), 0) = right_mul_matrix(as[i]) - left_mul_matrix(bs[i]);
  }
  return Eigen::JacobiSVD<Eigen::MatrixXd>(system, Eigen::ComputeFullV);
}

}  // namespace

ConjugatorFit best_conjugator(std::span<const GroupElement> as, std::span<const GroupElement> bs) {
  const auto svd = conjugation_svd(as, bs);
  const GroupElement k = from_coords(svd.matrixV().col(3));
  return {k, conjugation_residual(k, as, bs)};
}

std::vector<Eigen::Vector4d> conjugator_space(std::span<const GroupElement> as,
                                              std::span<const GroupElement> bs,
                                              const Tolerances& tol) {
  const auto svd = conjugation_svd(as, bs);
  const auto& sv = svd.singularValues();
  const Eigen::Matrix4d v = svd.matrixV();

  // Quaternion norm to Frobenius norm is a factor sqrt(2).
  const double cutoff = tol.mat / std::sqrt(2.0);
  std::vector<Eigen::Vector4d> basis;
  for (int j = 3; j >= 0; --j) {
    if (sv[j] >= cutoff) break;
    basis.push_back(v.col(j));
  }
  // Every nonzero quaternion is invertible; the smallest singular vector is
  // the witness, checked against the per-element residual.
  if (basis.empty()) {
    const GroupElement k = from_coords(v.col(3));
    if (conjugation_residual(k, as, bs) < tol.mat) basis.push_back(v.col(3));
  }
  return basis;
}

std::optional<GroupElement> find_conjugator(std::span<const GroupElement> as,
                                            std::span<const GroupElement> bs,
                                            const Tolerances& tol) {
  const auto basis = conjugator_space(as, bs, tol);
  if (basis.empty()) return std::nullopt;
  const GroupElement k = from_coords(basis.front());
  if (conjugation_residual(k, as, bs) >= tol.mat) return std::nullopt;
  return k;
}

StabilizerType stabilizer_type(std::span<const GroupElement> xs, const Tolerances& tol) {
  const bool all_central = std::all_of(xs.begin(), xs.end(), [&](const GroupElement& x) { return x.is_central(tol); });
  if (all_central) return StabilizerType::Full;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (commutator(xs[i], xs[j]).distance(GroupElement::identity()) >= tol.mat) return StabilizerType::Center;
    }
  }
  return StabilizerType::Torus;
}

const char* to_string(StabilizerType s) {
  switch (s) {
    case StabilizerType::Full: return "Full";
    case StabilizerType::Torus: return "Torus";
    case StabilizerType::Center: return "Center";
  }
  return "?";
}

}  // namespace genus2
