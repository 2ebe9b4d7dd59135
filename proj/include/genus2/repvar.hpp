#pragma once

// Representations of the genus-2 surface group
//   < A1, B1, A2, B2 | [A1,B1][A2,B2] >
// into SU(2), stored as (g1, h1, g2, h2) = (rho(A1), rho(B1), rho(A2), rho(B2)).

#include <array>

#include "genus2/su2.hpp"

namespace genus2 {

struct Representation {
  GroupElement g1, h1, g2, h2;

  [[nodiscard]] std::array<GroupElement, 4> elements() const { return {g1, h1, g2, h2}; }
  // k rho k^-1, slot by slot.
  [[nodiscard]] Representation conjugated(const GroupElement& k) const {
    return {conjugate(k, g1), conjugate(k, h1), conjugate(k, g2), conjugate(k, h2)};
  }
  // Largest Frobenius distance between corresponding slots.
  [[nodiscard]] double distance(const Representation& other) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

// A pair (rho(A), rho(B)) for the free group on two generators.
struct F2Pair {
  GroupElement a, b;
};

// |[g1,h1][g2,h2] - I|_F
double relation_residual(const Representation& rho);

// Accepts rho only if its relation residual is below tol.rel.
Representation new_checked(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// One least-squares Newton correction of (g2, h2) toward the relation
// manifold, then the same check as new_checked.
Representation new_projected(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// All six pairwise commutators within tol.mat of I.
bool is_abelian(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// Conjugator putting every slot of an abelian representation on the
// diagonal torus. Throws PreconditionViolated for non-abelian input.
GroupElement diagonalizing_conjugator(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// Angles (a1..a4) with slot_i = cos a_i + sin a_i n for a common axis n,
// defined up to simultaneous negation (the Weyl flip n -> -n).
std::array<double, 4> abelian_angles(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// Equality in Hom(pi_1, K)/K. Abelian pairs compare canonical angle tuples
// modulo the Weyl flip; everything else goes through find_conjugator.
bool class_equal(const Representation& a, const Representation& b, const Tolerances& tol = kDefaultTolerances);

// The conjugator search alone, without the abelian shortcut.
bool class_equal_by_conjugator(const Representation& a, const Representation& b,
                               const Tolerances& tol = kDefaultTolerances);

// (tr h1, tr h2, tr h1h2)
Vec3 goldman_phi(const Representation& rho);

}  // namespace genus2
