#include "genus2/polytope.hpp"

#include <algorithm>

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

constexpr std::array<std::array<int, 2>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int edge_id_of(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e) {
    if (kEdges[e][0] == a && kEdges[e][1] == b) return e;
  }
  return -1;
}

}  // namespace

std::array<int, 2> edge_vertices(int edge_id) { return kEdges.at(static_cast<std::size_t>(edge_id)); }

std::array<Vec3, 4> vertices(PolytopeTag tag) {
  switch (tag) {
    case PolytopeTag::TildeDelta:
      return {Vec3(0, 0, 0), Vec3(0, 1, 1), Vec3(1, 0, 1), Vec3(1, 1, 0)};
    case PolytopeTag::StdDelta:
      return {Vec3(0, 0, 0), Vec3(0, 0, 1), Vec3(0, 1, 0), Vec3(1, 0, 0)};
    case PolytopeTag::HalfStdDelta:
      return {Vec3(0, 0, 0), Vec3(0, 0, 0.5), Vec3(0, 0.5, 0), Vec3(0.5, 0, 0)};
  }
  return {};
}

std::array<double, 4> slacks(const Vec3& x, PolytopeTag tag) {
  const double sum = x.sum();
  switch (tag) {
    case PolytopeTag::TildeDelta:
      return {2.0 - sum, x[1] + x[2] - x[0], x[0] + x[2] - x[1], x[0] + x[1] - x[2]};
    case PolytopeTag::StdDelta:
      return {1.0 - sum, x[2], x[1], x[0]};
    case PolytopeTag::HalfStdDelta:
      return {0.5 - sum, x[2], x[1], x[0]};
  }
  return {};
}

std::optional<SimplexPoint> classify(const Vec3& x, PolytopeTag tag, const Tolerances& tol) {
  const auto s = slacks(x, tag);
  if (std::any_of(s.begin(), s.end(), [&](double v) { return v < -tol.poly; })) return std::nullopt;

  std::array<int, 4> active{};
  std::array<int, 4> inactive{};
  int n_active = 0, n_inactive = 0;
  for (int i = 0; i < 4; ++i) {
    if (s[i] <= tol.poly) active[n_active++] = i;
    else inactive[n_inactive++] = i;
  }

  SimplexPoint p{x, {}, tag};
  switch (n_active) {
    case 0: p.region = {RegionKind::Interior, 0}; break;
    case 1: p.region = {RegionKind::Face, active[0]}; break;
    // An edge joins the two vertices whose opposite faces are inactive.
    case 2: p.region = {RegionKind::Edge, edge_id_of(inactive[0], inactive[1])}; break;
    case 3: p.region = {RegionKind::Vertex, inactive[0]}; break;
    default:
      // All four faces active only for a degenerate tolerance.
      throw OutsidePolytope("point is active on all four faces");
  }
  return p;
}

Vec3 QuotientMatrix::apply(const Vec3& x) {
  Vec3 y;
  for (int r = 0; r < 3; ++r) {
    y[r] = matrix[r][0] * x[0] + matrix[r][1] * x[1] + matrix[r][2] * x[2];
  }
  return y;
}

Vec3 QuotientMatrix::apply_inverse(const Vec3& y) {
  Vec3 x;
  for (int r = 0; r < 3; ++r) {
    x[r] = (twice_inverse[r][0] * y[0] + twice_inverse[r][1] * y[1] + twice_inverse[r][2] * y[2]) /
           inverse_denominator;
  }
  return x;
}

SimplexPoint nu_p3(std::span<const std::complex<double>, 4> z, const Tolerances& tol) {
  double total = 0.0;
  for (const auto& c : z) total += std::norm(c);
  if (!(total > 0.0)) throw ZeroVector("nu_p3 of the zero vector");
  const Vec3 x(std::norm(z[1]), std::norm(z[2]), std::norm(z[3]));
  const Vec3 value = x / (2.0 * total);
  auto p = classify(value, PolytopeTag::HalfStdDelta, tol);
  if (!p) throw OutsidePolytope("nu_p3 left the half simplex");
  return *p;
}

const char* to_string(PolytopeTag tag) {
  switch (tag) {
    case PolytopeTag::TildeDelta: return "TildeDelta";
    case PolytopeTag::StdDelta: return "StdDelta";
    case PolytopeTag::HalfStdDelta: return "HalfStdDelta";
  }
  return "?";
}

const char* to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Interior: return "Interior";
    case RegionKind::Face: return "Face";
    case RegionKind::Edge: return "Edge";
    case RegionKind::Vertex: return "Vertex";
  }
  return "?";
}

}  // namespace genus2
