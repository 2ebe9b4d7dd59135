#include "genus2/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "genus2/errors.hpp"
#include "genus2/polytope.hpp"
#include "genus2/tau.hpp"

namespace genus2 {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Vec3 v(gauss(rng), gauss(rng), gauss(rng));
    if (v.norm() > 1e-6) return v.normalized();
  }
}

GroupElement along(const Vec3& axis, double angle) { return exp_alg(AlgebraElement(angle * axis)); }

GroupElement random_sign(Rng& rng) {
  return uniform(rng) < 0.5 ? GroupElement::identity() : GroupElement::minus_identity();
}

// Angle in (0, pi) away from both ends, so the element is far from +-I.
double open_angle(Rng& rng) { return uniform(rng, 0.05, kPi - 0.05); }

Representation face_sample(Rng& rng) {
  const Vec3 axis = random_unit_vector(rng);
  Representation rho;
  rho.g1 = along(axis, uniform(rng, 0.0, 2.0 * kPi));
  rho.h1 = along(axis, open_angle(rng));
  rho.g2 = along(axis, uniform(rng, 0.0, 2.0 * kPi));
  rho.h2 = random_sign(rng) * along(axis, open_angle(rng));
  return rho;
}

Representation edge_sample(Rng& rng) {
  Representation rho;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: {  // h1 central, g2 on the torus of h2
      rho.g1 = haar_sample(rng);
      rho.h1 = random_sign(rng);
      rho.h2 = haar_sample(rng);
      rho.g2 = along(rho.h2.vec().normalized(), uniform(rng, 0.0, 2.0 * kPi));
      break;
    }
    case 1: {  // h2 central, g1 on the torus of h1
      rho.h1 = haar_sample(rng);
      rho.g1 = along(rho.h1.vec().normalized(), uniform(rng, 0.0, 2.0 * kPi));
      rho.g2 = haar_sample(rng);
      rho.h2 = random_sign(rng);
      break;
    }
    default: {  // h1 h2 central: (g1, h1, h1 g1, +-h1^-1)
      rho.g1 = haar_sample(rng);
      rho.h1 = haar_sample(rng);
      rho.g2 = rho.h1 * rho.g1;
      rho.h2 = random_sign(rng) * rho.h1.inverse();
      break;
    }
  }
  return rho;
}

Representation vertex_sample(Rng& rng) {
  return {haar_sample(rng), random_sign(rng), haar_sample(rng), random_sign(rng)};
}

Representation torus_sample(Rng& rng) {
  return {GroupElement::diagonal(uniform(rng, 0.0, 2.0 * kPi)), GroupElement::diagonal(uniform(rng, 0.0, 2.0 * kPi)),
          GroupElement::diagonal(uniform(rng, 0.0, 2.0 * kPi)), GroupElement::diagonal(uniform(rng, 0.0, 2.0 * kPi))};
}

Vec3 common_axis(const Representation& rho) {
  const auto xs = rho.elements();
  const auto it = std::max_element(xs.begin(), xs.end(), [](const GroupElement& a, const GroupElement& b) {
    return a.vec().norm() < b.vec().norm();
  });
  return it->vec().normalized();
}

}  // namespace

const char* to_string(SampleTarget t) {
  switch (t) {
    case SampleTarget::InteriorUniformBase: return "interior";
    case SampleTarget::FixedBase: return "fixed";
    case SampleTarget::BoundaryFace: return "face";
    case SampleTarget::BoundaryEdge: return "edge";
    case SampleTarget::Vertex: return "vertex";
    case SampleTarget::AbelianTorus: return "abelian";
  }
  return "?";
}

std::optional<SampleTarget> parse_sample_target(const std::string& name) {
  for (auto t : {SampleTarget::InteriorUniformBase, SampleTarget::FixedBase, SampleTarget::BoundaryFace,
                 SampleTarget::BoundaryEdge, SampleTarget::Vertex, SampleTarget::AbelianTorus}) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

void validate(const SampleSpec& spec, const Tolerances& tol) {
  if (spec.count < 1) throw PreconditionViolated("sample count must be at least 1");
  if (spec.target == SampleTarget::FixedBase) {
    const auto p = std_delta_contains(spec.base, tol);
    if (!p || p->region.kind != RegionKind::Interior) {
      throw PreconditionViolated("fixed base point must lie strictly inside the simplex");
    }
  }
}

Vec3 random_interior_base(Rng& rng, double margin) {
  for (;;) {
    const Vec3 x(uniform(rng), uniform(rng), uniform(rng));
    const auto s = slacks(x, PolytopeTag::StdDelta);
    if (*std::min_element(s.begin(), s.end()) > margin) return x;
  }
}

Representation sample_one(const SampleSpec& spec, std::uint64_t index, const Tolerances& tol) {
  Rng rng = make_rng(spec.seed, index);
  Representation rho;
  switch (spec.target) {
    case SampleTarget::InteriorUniformBase:
    case SampleTarget::FixedBase: {
      const Vec3 x = spec.target == SampleTarget::FixedBase ? spec.base : random_interior_base(rng);
      const Representation s = section(x, tol);
      rho = act(random_torus_element(rng), s, tol);
      break;
    }
    case SampleTarget::BoundaryFace: rho = face_sample(rng); break;
    case SampleTarget::BoundaryEdge: rho = edge_sample(rng); break;
    case SampleTarget::Vertex: rho = vertex_sample(rng); break;
    case SampleTarget::AbelianTorus: rho = torus_sample(rng); break;
  }
  if (spec.conjugate) rho = rho.conjugated(haar_sample(rng));
  return rho;
}

std::vector<Representation> sample(const SampleSpec& spec, const Tolerances& tol) {
  validate(spec, tol);
  std::vector<Representation> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) out.push_back(sample_one(spec, static_cast<std::uint64_t>(i), tol));
  return out;
}

Representation random_q_point(Rng& rng, double margin) {
  const Vec3 axis = random_unit_vector(rng);
  auto angle = [&] {
    for (;;) {
      const double a = uniform(rng, 0.0, 2.0 * kPi);
      if (std::abs(std::sin(a)) > std::sin(margin)) return a;
    }
  };
  const double a1 = angle(), a2 = angle(), a3 = angle(), a4 = angle();
  return {along(axis, a1), along(axis, a2), along(axis, a3), along(axis, a4)};
}

Representation density_witness(const Representation& rho, double t, const Tolerances& tol) {
  if (!is_abelian(rho, tol)) throw PreconditionViolated("density witness needs an abelian representation");
  for (const auto& x : rho.elements()) {
    if (x.is_central(tol)) throw PreconditionViolated("density witness needs every slot away from +-I");
  }
  if (t < 0.0 || t > 1.0) throw PreconditionViolated("density witness parameter must lie in [0, 1]");

  const Vec3 n = common_axis(rho);
  // Cross with the coordinate axis least aligned with n.
  Eigen::Index least = 0;
  n.cwiseAbs().minCoeff(&least);
  const Vec3 e = n.cross(Vec3::Unit(least)).normalized();
  const GroupElement k = along(e, t * kPi / 4.0);
  return {conjugate(k, rho.g1), conjugate(k, rho.h1), rho.g2, rho.h2};
}

}  // namespace genus2
