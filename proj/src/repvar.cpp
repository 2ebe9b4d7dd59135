#include "genus2/repvar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

GroupElement relator(const Representation& rho) {
  return commutator(rho.g1, rho.h1) * commutator(rho.g2, rho.h2);
}

double angle_gap(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

}  // namespace

double Representation::distance(const Representation& other) const {
  return std::max({g1.distance(other.g1), h1.distance(other.h1), g2.distance(other.g2), h2.distance(other.h2)});
}

double relation_residual(const Representation& rho) {
  return relator(rho).distance(GroupElement::identity());
}

Representation new_checked(const Representation& rho, const Tolerances& tol) {
  const double r = relation_residual(rho);
  if (!(r < tol.rel)) throw RelationViolated("relation residual " + std::to_string(r) + " exceeds tolerance");
  return rho;
}

Representation new_projected(const Representation& rho, const Tolerances& tol) {
  // Unknowns: right perturbations g2 e^{a}, h2 e^{b}; residual: vector part
  // of the relator (half the log for small residuals).
  auto perturbed = [&](const Eigen::Matrix<double, 6, 1>& d) {
    Representation out = rho;
    out.g2 = rho.g2 * exp_alg(AlgebraElement(Vec3(d.head<3>())));
    out.h2 = rho.h2 * exp_alg(AlgebraElement(Vec3(d.tail<3>())));
    return out;
  };
  auto residual = [&](const Representation& r) -> Vec3 { return relator(r).vec(); };

  constexpr double step = 1e-6;
  Eigen::Matrix<double, 3, 6> jac;
  for (int j = 0; j < 6; ++j) {
    Eigen::Matrix<double, 6, 1> d = Eigen::Matrix<double, 6, 1>::Zero();
    d[j] = step;
    const Vec3 plus = residual(perturbed(d));
    d[j] = -step;
    const Vec3 minus = residual(perturbed(d));
    jac.col(j) = (plus - minus) / (2.0 * step);
  }
  const Vec3 f = residual(rho);
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 6>> svd(jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
  svd.setThreshold(1e-10);
  const Eigen::Matrix<double, 6, 1> delta = svd.solve(-f);
  return new_checked(perturbed(delta), tol);
}

bool is_abelian(const Representation& rho, const Tolerances& tol) {
  const auto xs = rho.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (commutator(xs[i], xs[j]).distance(GroupElement::identity()) >= tol.mat) return false;
    }
  }
  return true;
}

namespace {

// The slot with the largest vector part fixes the common axis.
Vec3 common_axis(const Representation& rho) {
  const auto xs = rho.elements();
  const auto it = std::max_element(xs.begin(), xs.end(), [](const GroupElement& a, const GroupElement& b) {
    return a.vec().norm() < b.vec().norm();
  });
  const double n = it->vec().norm();
  return n > 0.0 ? Vec3(it->vec() / n) : Vec3(Vec3::UnitZ());
}

}  // namespace

std::array<double, 4> abelian_angles(const Representation& rho, const Tolerances& tol) {
  if (!is_abelian(rho, tol)) throw PreconditionViolated("abelian_angles on a non-abelian representation");
  const Vec3 axis = common_axis(rho);
  const auto xs = rho.elements();
  std::array<double, 4> angles{};
  for (std::size_t i = 0; i < 4; ++i) angles[i] = std::atan2(xs[i].vec().dot(axis), xs[i].w());
  return angles;
}

GroupElement diagonalizing_conjugator(const Representation& rho, const Tolerances& tol) {
  if (!is_abelian(rho, tol)) throw PreconditionViolated("diagonalizing_conjugator on a non-abelian representation");
  return rotation_between(common_axis(rho), Vec3::UnitZ());
}

bool class_equal_by_conjugator(const Representation& a, const Representation& b, const Tolerances& tol) {
  const auto xs = a.elements();
  const auto ys = b.elements();
  return find_conjugator(xs, ys, tol).has_value();
}

bool class_equal(const Representation& a, const Representation& b, const Tolerances& tol) {
  const bool abelian_a = is_abelian(a, tol);
  const bool abelian_b = is_abelian(b, tol);
  if (abelian_a != abelian_b) return false;
  if (!abelian_a) return class_equal_by_conjugator(a, b, tol);

  const auto x = abelian_angles(a, tol);
  const auto y = abelian_angles(b, tol);
  // Slot distance is sqrt(2)|2 sin(gap/2)| ~ sqrt(2) gap.
  const double limit = tol.mat / std::sqrt(2.0);
  bool same = true, flipped = true;
  for (std::size_t i = 0; i < 4; ++i) {
    same = same && angle_gap(x[i], y[i]) < limit;
    flipped = flipped && angle_gap(x[i], -y[i]) < limit;
  }
  return same || flipped;
}

Vec3 goldman_phi(const Representation& rho) {
  return {rho.h1.trace(), rho.h2.trace(), (rho.h1 * rho.h2).trace()};
}

}  // namespace genus2
