#include "genus2/moment.hpp"

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

SimplexPoint tagged_or_throw(const Vec3& x, PolytopeTag tag, const Tolerances& tol, const char* what) {
  auto p = classify(x, tag, tol);
  if (!p) throw OutsidePolytope(what);
  return *p;
}

}  // namespace

SimplexPoint psi_f2(const F2Pair& p, const Tolerances& tol) {
  const Vec3 x(trace_angle(p.a), trace_angle(p.b), trace_angle(p.a * p.b));
  return tagged_or_throw(x, PolytopeTag::TildeDelta, tol, "psi_f2 left the tetrahedron");
}

SimplexPoint moment_mu(const Representation& rho, const Tolerances& tol) {
  const Vec3 x(trace_angle(rho.h1), trace_angle(rho.h2), trace_angle(rho.h1 * rho.h2));
  return tagged_or_throw(x, PolytopeTag::TildeDelta, tol, "moment_mu left the tetrahedron");
}

SimplexPoint mu_lambda_from_mu(const Vec3& mu, const Tolerances& tol) {
  return tagged_or_throw(QuotientMatrix::apply_inverse(mu), PolytopeTag::StdDelta, tol,
                         "mu_lambda left the standard simplex");
}

SimplexPoint mu_lambda(const Representation& rho, const Tolerances& tol) {
  return mu_lambda_from_mu(moment_mu(rho, tol).x, tol);
}

bool boundary_commutation_check(const Representation& rho, const Tolerances& tol) {
  const bool on_boundary = moment_mu(rho, tol).region.kind != RegionKind::Interior;
  const bool commuting = commutator(rho.h1, rho.h2).distance(GroupElement::identity()) < tol.mat;
  return on_boundary == commuting;
}

}  // namespace genus2
