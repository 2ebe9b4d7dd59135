#pragma once

// The swap involution sigma(g1, h1, g2, h2) = (h2, g2, h1, g1) and its
// fixed classes. A class is fixed iff some k satisfies k rho k^-1 = sigma(rho);
// every fixed class has a representative (g, h, k h k^-1, k g k^-1).
//
// Pieces of the fixed set:
//   PillowInterior   (g, h, h, g) with [g, h] != I
//   BlowupInterior   (g, h, k h k^-1, k g k^-1), k^2 = -I, [g, h] != +-I,
//                    k commuting with [g, h]
//   RP2Fiber         the same with [g, h] = -I
//   PillowSurface    abelian (g, h, h, g)
//   IntervalEndpoint abelian (g, h, h^-1, g^-1), the blow-up surface
//   IntervalInterior irreducible points with [g, h] = I and k^2 = -I
//   CentralVertex    all four slots central

#include <optional>
#include <string>
#include <vector>

#include "genus2/repvar.hpp"

namespace genus2 {

enum class Stratum { I, II, III };
enum class Piece {
  PillowInterior,
  BlowupInterior,
  RP2Fiber,
  IntervalInterior,
  PillowSurface,
  IntervalEndpoint,
  CentralVertex,
};

const char* to_string(Stratum s);
const char* to_string(Piece p);

struct SigmaFixedPoint {
  Representation rep;
  GroupElement conjugator;  // k rho k^-1 = sigma(rho)
  Stratum stratum = Stratum::I;
  Piece piece = Piece::PillowInterior;
};

Representation sigma(const Representation& rho);

std::optional<GroupElement> sigma_fixed_conjugator(const Representation& rho,
                                                   const Tolerances& tol = kDefaultTolerances);

// Throws PreconditionViolated if rho is not sigma-fixed and
// ClassificationAmbiguity if a residual falls in the band
// [tol.mat, 10 tol.mat) where the answer would depend on the threshold.
SigmaFixedPoint classify_fixed_point(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

// (g, h, h, g)
Representation pillow_point(const GroupElement& g, const GroupElement& h);

// (g, h, k h k^-1, k g k^-1). Requires k^2 = -I, [g, h] != I and k
// commuting with [g, h]; throws PreconditionViolated otherwise.
Representation blowup_point(const GroupElement& g, const GroupElement& h, const GroupElement& k,
                            const Tolerances& tol = kDefaultTolerances);

// The trace-zero element along the axis of [g, h]: one of the two k with
// k^2 = -I commuting with [g, h] (the other is -k). Requires [g, h] != +-I.
GroupElement blowup_partner(const GroupElement& g, const GroupElement& h,
                            const Tolerances& tol = kDefaultTolerances);

// (diag(i,-i), J, k J k^-1, k diag(i,-i) k^-1) with J = [[0,-1],[1,0]].
// Requires k^2 = -I.
Representation rp2_fiber_point(const GroupElement& k, const Tolerances& tol = kDefaultTolerances);

// k(alpha) = [[i cos a, sin a], [-sin a, -i cos a]], trace zero, squares to -I.
GroupElement interval_conjugator(double alpha);

// (g, h, k(a) h k(a)^-1, k(a) g k(a)^-1) with g = diag(e^{i theta}, .),
// h = diag(e^{i s}, .). alpha = 0 is (g, h, h, g) on the pillow surface,
// alpha = pi/2 is (g, h, h^-1, g^-1) on the blow-up surface. Throws
// PreconditionViolated when theta and s are both multiples of pi or alpha
// is outside [0, pi/2].
Representation n2_interval(double theta, double s, double alpha, const Tolerances& tol = kDefaultTolerances);

struct IntervalReport {
  int grid = 0;
  int not_fixed = 0;          // grid points without a sigma conjugator
  int bad_conjugator = 0;     // k(alpha)^2 != -I or k(alpha) fails to conjugate
  int collisions = 0;         // distinct grid points that are class-equal
  bool start_on_pillow = false;
  bool end_on_blowup = false;
  double max_residual = 0.0;  // worst sigma-conjugation residual of k(alpha)
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const {
    return not_fixed == 0 && bad_conjugator == 0 && collisions == 0 && start_on_pillow && end_on_blowup;
  }
};

// Grid over alpha in [0, pi/2]: every point sigma-fixed through k(alpha),
// pairwise class-distinct, endpoints on the two surfaces.
IntervalReport certify_interval_injectivity(double theta, double s, int grid,
                                            const Tolerances& tol = kDefaultTolerances);

}  // namespace genus2
