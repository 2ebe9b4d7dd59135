#pragma once

// Trace-coordinate maps into the polytopes.

#include "genus2/polytope.hpp"
#include "genus2/repvar.hpp"

namespace genus2 {

// (f(a), f(b), f(ab)) for the free group on two generators, tagged in Tilde-Delta.
SimplexPoint psi_f2(const F2Pair& p, const Tolerances& tol = kDefaultTolerances);

// mu = (f(h1), f(h2), f(h1 h2)), tagged in Tilde-Delta.
// Throws OutsidePolytope if membership fails beyond tol.poly.
SimplexPoint moment_mu(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// mu_Lambda = M^-1 mu, i.e. ((f1-f2+f3)/2, (f1+f2-f3)/2, (-f1+f2+f3)/2),
// tagged in Delta. Defined on all representations, boundary included.
SimplexPoint mu_lambda(const Representation& rho, const Tolerances& tol = kDefaultTolerances);
SimplexPoint mu_lambda_from_mu(const Vec3& mu, const Tolerances& tol = kDefaultTolerances);

// (mu on the boundary of Tilde-Delta) == (h1 and h2 commute).
bool boundary_commutation_check(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

}  // namespace genus2
