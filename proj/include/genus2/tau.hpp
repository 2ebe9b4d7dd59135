#pragma once

// Global coordinates on the interior stratum: every interior class is
// t . s(x) for a unique base point x = mu_Lambda and a unique torus element t
// modulo the kernel, where s is the explicit section below. The involution
// tau negates t and keeps x.

#include "genus2/flows.hpp"
#include "genus2/moment.hpp"

namespace genus2 {

struct FiberCoordinates {
  SimplexPoint base;    // mu_Lambda, interior of Delta
  TorusElement angles;  // canonical modulo the kernel: angles[2] in [0, pi)
};

// Deterministic section over the interior of Delta. With a = M x:
//   h1 = exp(pi a1 z),  h2 = exp(pi a2 m), m in the xz-plane (m_x > 0) at
//   the angle fixed by tr(h1 h2) = 2 cos(pi a3);
//   C = [g1, h1] = [g2, h2]^-1 is the commutator with real part 1 - u,
//   u = 1 / (1 + K) half of its feasible range, and the positive root for its
//   component along z x m;
//   g1, g2 are the shortest rotations with g1 h1 g1^-1 = C h1 and
//   g2 h2 g2^-1 = C^-1 h2.
// Throws PreconditionViolated off the interior and SectionSolveFailure if the
// relation residual or the mu_Lambda round trip misses tolerance.
Representation section(const Vec3& x, const Tolerances& tol = kDefaultTolerances);

// Base point and torus angles of an interior class. Throws
// PreconditionViolated off the interior and FiberSolveFailure if the
// reconstruction act(angles, section(base)) misses rho's class by tol.rel.
FiberCoordinates fiber_coordinates(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// act(-angles, section(base)).
Representation tau(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

}  // namespace genus2
