#pragma once

// Random and targeted representations. Every draw is a pure function of
// (seed, index), so streams are reproducible and shardable.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genus2/flows.hpp"

namespace genus2 {

enum class SampleTarget {
  InteriorUniformBase,  // x uniform in the open simplex, random torus element over the section
  FixedBase,            // as above over a caller-supplied interior base point
  BoundaryFace,         // abelian, h1 and h2 non-central on a common axis
  BoundaryEdge,         // one of h1, h2, h1 h2 central
  Vertex,               // (g1, +-I, g2, +-I)
  AbelianTorus,         // all four slots diagonal
};

const char* to_string(SampleTarget t);
// interior | fixed | face | edge | vertex | abelian
std::optional<SampleTarget> parse_sample_target(const std::string& name);

struct SampleSpec {
  int count = 1;
  std::uint64_t seed = 0;
  SampleTarget target = SampleTarget::InteriorUniformBase;
  Vec3 base = Vec3::Zero();  // used by FixedBase only
  bool conjugate = false;    // apply a Haar-random global conjugation
};

// Interior draws reject base points whose smallest slack is below this, so
// the section stays well conditioned.
inline constexpr double kInteriorMargin = 1e-6;

// Throws PreconditionViolated for count < 1 or a FixedBase point that is not
// strictly interior.
void validate(const SampleSpec& spec, const Tolerances& tol = kDefaultTolerances);

// The index-th draw of the stream. Propagates SectionSolveFailure.
Representation sample_one(const SampleSpec& spec, std::uint64_t index, const Tolerances& tol = kDefaultTolerances);
std::vector<Representation> sample(const SampleSpec& spec, const Tolerances& tol = kDefaultTolerances);

// Uniform point of the open standard simplex with every slack above `margin`.
Vec3 random_interior_base(Rng& rng, double margin = kInteriorMargin);

// Abelian quadruple on a random common axis with every slot at angular
// distance >= margin from +-I.
Representation random_q_point(Rng& rng, double margin = 0.05);

// rho_t = (k(t) g1 k(t)^-1, k(t) h1 k(t)^-1, g2, h2) with
// k(t) = exp(t (pi/4) e), e a fixed unit vector orthogonal to the common
// axis. k(t) rotates the axis by t pi/2, so rho_t is non-abelian for
// t in (0, 1]. Requires rho abelian with no central slot and t in [0, 1].
Representation density_witness(const Representation& rho, double t, const Tolerances& tol = kDefaultTolerances);

}  // namespace genus2
