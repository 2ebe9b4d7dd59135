#pragma once

// The tetrahedron of trace coordinates and the standard simplex.
//
// Tilde-Delta has vertices V0 = (0,0,0), V1 = (0,1,1), V2 = (1,0,1),
// V3 = (1,1,0). Face i is the face opposite Vi, with slack s_i >= 0:
//   s0 = 2 - x1 - x2 - x3
//   s1 = x2 + x3 - x1
//   s2 = x1 + x3 - x2
//   s3 = x1 + x2 - x3
// Delta has vertices V0 = (0,0,0), V1 = (0,0,1), V2 = (0,1,0), V3 = (1,0,0)
// with s0 = 1 - x1 - x2 - x3, s1 = x3, s2 = x2, s3 = x1.
// The half simplex (image of the printed nu) scales Delta by 1/2.

#include <array>
#include <complex>
#include <optional>
#include <span>

#include "genus2/su2.hpp"
#include "genus2/tolerances.hpp"

namespace genus2 {

enum class PolytopeTag { TildeDelta, StdDelta, HalfStdDelta };
enum class RegionKind { Interior, Face, Edge, Vertex };

struct Region {
  RegionKind kind = RegionKind::Interior;
  int id = 0;  // face, edge or vertex index; 0 for the interior
  friend bool operator==(const Region&, const Region&) = default;
};

struct SimplexPoint {
  Vec3 x = Vec3::Zero();
  Region region;
  PolytopeTag tag = PolytopeTag::TildeDelta;
};

// Edges are indexed by vertex pairs in the order
// (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
std::array<int, 2> edge_vertices(int edge_id);

std::array<Vec3, 4> vertices(PolytopeTag tag);
std::array<double, 4> slacks(const Vec3& x, PolytopeTag tag);

// Closed membership with region classification; nullopt when some slack is
// below -tol.poly. A slack within tol.poly of zero counts as an active face.
std::optional<SimplexPoint> classify(const Vec3& x, PolytopeTag tag, const Tolerances& tol = kDefaultTolerances);

inline std::optional<SimplexPoint> tilde_delta_contains(const Vec3& x, const Tolerances& tol = kDefaultTolerances) {
  return classify(x, PolytopeTag::TildeDelta, tol);
}
inline std::optional<SimplexPoint> std_delta_contains(const Vec3& x, const Tolerances& tol = kDefaultTolerances) {
  return classify(x, PolytopeTag::StdDelta, tol);
}

// The integer matrix of the quotient T^3 -> T^3 / {+-(1,1,1)},
// (t1, t2, t3) -> (t1 t2, t2 t3, t1 t3), and its inverse scaled by 2.
struct QuotientMatrix {
  using Int3 = std::array<std::array<int, 3>, 3>;
  static constexpr Int3 matrix{{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}};
  static constexpr Int3 twice_inverse{{{1, -1, 1}, {1, 1, -1}, {-1, 1, 1}}};
  static constexpr int inverse_denominator = 2;

  static Vec3 apply(const Vec3& x);          // M x : Delta -> Tilde-Delta
  static Vec3 apply_inverse(const Vec3& y);  // M^-1 y : Tilde-Delta -> Delta
};

// (|z1|^2, |z2|^2, |z3|^2) / (2 |z|^2), tagged in the half simplex.
// Throws ZeroVector for z = 0.
SimplexPoint nu_p3(std::span<const std::complex<double>, 4> z, const Tolerances& tol = kDefaultTolerances);

const char* to_string(PolytopeTag tag);
const char* to_string(RegionKind kind);

}  // namespace genus2
