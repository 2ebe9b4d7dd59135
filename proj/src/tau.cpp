#include "genus2/tau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

constexpr double kPi = std::numbers::pi;

GroupElement pure(const Vec3& v) { return GroupElement::from_quaternion(0.0, v); }

// Component of q orthogonal to span{1, axis} in R^4.
Eigen::Vector4d off_axis(const GroupElement& q, const Vec3& axis) {
  const Vec3 v = q.vec() - q.vec().dot(axis) * axis;
  return {0.0, v.x(), v.y(), v.z()};
}

Eigen::Vector4d coords_of(const GroupElement& q) { return q.coords(); }

}  // namespace

Representation section(const Vec3& x, const Tolerances& tol) {
  const auto base = std_delta_contains(x, tol);
  if (!base || base->region.kind != RegionKind::Interior) {
    throw PreconditionViolated("section needs a point in the interior of the standard simplex");
  }
  const Vec3 a = QuotientMatrix::apply(x);
  const double th1 = kPi * a[0], th2 = kPi * a[1], th3 = kPi * a[2];

  const Vec3 z = Vec3::UnitZ();
  const double cos_phi =
      (std::cos(th1) * std::cos(th2) - std::cos(th3)) / (std::sin(th1) * std::sin(th2));
  const double c = std::clamp(cos_phi, -1.0, 1.0);
  const Vec3 m(std::sqrt(std::max(0.0, 1.0 - c * c)), 0.0, c);

  Representation rho;
  rho.h1 = exp_alg(AlgebraElement(th1 * z));
  rho.h2 = exp_alg(AlgebraElement(th2 * m));

  // [g, exp(theta n)] has real part 1 - u and n-component -u cot(theta) in
  // its vector part; C must meet both latitude circles on the sphere of
  // radius sqrt(u (2 - u)). They meet iff u <= 2 / (1 + K).
  const double cot1 = 1.0 / std::tan(th1), cot2 = 1.0 / std::tan(th2);
  const double sin2 = 1.0 - c * c;
  const double k_factor = (cot1 * cot1 + cot2 * cot2 + 2.0 * c * cot1 * cot2) / sin2;
  const double u = 1.0 / (1.0 + k_factor);
  const double r2 = u * (2.0 - u);
  const double p1 = -u * cot1;  // C . z
  const double p2 = u * cot2;   // C . m  (C = [g2, h2]^-1)
  const double alpha = (p1 - c * p2) / sin2;
  const double beta = (p2 - c * p1) / sin2;
  const double in_plane = alpha * alpha + beta * beta + 2.0 * alpha * beta * c;
  const double gamma = std::sqrt(std::max(0.0, r2 - in_plane));
  const Vec3 e = z.cross(m).normalized();
  const GroupElement commutator_value = GroupElement::from_quaternion(1.0 - u, alpha * z + beta * m + gamma * e);

  const GroupElement target1 = commutator_value * rho.h1;
  const GroupElement target2 = commutator_value.inverse() * rho.h2;
  rho.g1 = rotation_between(z, target1.vec());
  rho.g2 = rotation_between(m, target2.vec());

  const double residual = relation_residual(rho);
  if (!(residual < tol.rel)) {
    throw SectionSolveFailure("section relation residual " + std::to_string(residual));
  }
  const Vec3 back = mu_lambda(rho, tol).x;
  if (!((back - x).cwiseAbs().maxCoeff() < 100.0 * tol.f)) {
    throw SectionSolveFailure("section misses its base point");
  }
  return rho;
}

FiberCoordinates fiber_coordinates(const Representation& rho, const Tolerances& tol) {
  const SimplexPoint base = mu_lambda(rho, tol);
  if (base.region.kind != RegionKind::Interior) {
    throw PreconditionViolated("fiber coordinates need an interior class");
  }
  const Representation s = section(base.x, tol);

  // Bring rho's (h1, h2) onto the section's; the pair is irreducible, so
  // the conjugator is unique up to sign and leaves a tuple-level problem.
  const std::array<GroupElement, 2> hs{rho.h1, rho.h2};
  const std::array<GroupElement, 2> hs_section{s.h1, s.h2};
  const auto fit = best_conjugator(hs, hs_section);
  if (!(fit.residual < tol.rel)) throw FiberSolveFailure("h-frames do not match the section");
  const Representation aligned = rho.conjugated(fit.k);

  const FlowGenerators gens = generators(s, tol);
  const Vec3& xi1 = gens.xi1_hat.vec();
  const Vec3& xi2 = gens.xi2_hat.vec();

  // g' = e^{l3 X} g^s e^{l1 xi1}  <=>  g^s^-1 e^{-l3 X} g' lies in exp(R xi1).
  // With e^{-l3 X} = cos l3 - sin l3 X this is linear in (cos l3, sin l3).
  const GroupElement p1 = s.g1.inverse() * aligned.g1;
  const GroupElement q1 = s.g1.inverse() * pure(gens.x_hat.vec()) * aligned.g1;
  const GroupElement p2 = s.g2.inverse() * aligned.g2;
  const GroupElement q2 = s.g2.inverse() * pure(gens.y_hat.vec()) * aligned.g2;

  Eigen::Matrix<double, 8, 2> system;
  system.block<4, 1>(0, 0) = off_axis(p1, xi1);
  system.block<4, 1>(4, 0) = off_axis(p2, xi2);
  system.block<4, 1>(0, 1) = -off_axis(q1, xi1);
  system.block<4, 1>(4, 1) = -off_axis(q2, xi2);
  const Eigen::Matrix2d gram = system.transpose() * system;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(gram);
  Eigen::Vector2d cs = eig.eigenvectors().col(0);  // smallest eigenvalue first
  // The pair (cos, sin) is fixed up to sign, i.e. l3 up to pi, which is the
  // kernel ambiguity; take l3 in [0, pi).
  if (cs[1] < 0.0 || (cs[1] == 0.0 && cs[0] < 0.0)) cs = -cs;
  const double l3 = std::atan2(cs[1], cs[0]);

  const Eigen::Vector4d m1 = cs[0] * coords_of(p1) - cs[1] * coords_of(q1);
  const Eigen::Vector4d m2 = cs[0] * coords_of(p2) - cs[1] * coords_of(q2);
  const double l1 = std::atan2(m1.tail<3>().dot(xi1), m1[0]);
  const double l2 = std::atan2(m2.tail<3>().dot(xi2), m2[0]);

  FiberCoordinates out{base, TorusElement(l1, l2, l3).canonical_mod_kernel()};
  const double miss = act(out.angles, s, gens).distance(aligned);
  if (!(miss < tol.rel)) throw FiberSolveFailure("fiber reconstruction residual " + std::to_string(miss));
  return out;
}

Representation tau(const Representation& rho, const Tolerances& tol) {
  const FiberCoordinates fc = fiber_coordinates(rho, tol);
  return act(-fc.angles, section(fc.base.x, tol), tol);
}

}  // namespace genus2
