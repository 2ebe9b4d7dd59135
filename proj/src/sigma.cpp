#include "genus2/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

constexpr double kBand = 10.0;  // residuals in [tol, kBand * tol) are ambiguous

GroupElement from_coords(const Eigen::Vector4d& c) { return GroupElement::from_quaternion(c[0], c[1], c[2], c[3]); }

// From a conjugator space of dimension >= 2 pick the trace-zero member of
// the span of the first two basis vectors. Pillow-surface, blow-up-surface
// and central classes all admit one, and it squares to -I.
GroupElement pick_conjugator(const std::vector<Eigen::Vector4d>& basis) {
  if (basis.size() == 1) return from_coords(basis.front());
  const Eigen::Vector4d& u = basis[0];
  const Eigen::Vector4d& v = basis[1];
  const Eigen::Vector4d c = u[0] * v - v[0] * u;
  if (c.norm() < 1e-8) return from_coords(std::abs(u[0]) < std::abs(v[0]) ? u : v);
  return from_coords(c);
}

void check_band(double value, double threshold, const char* what) {
  if (value >= threshold && value < kBand * threshold) {
    throw ClassificationAmbiguity(std::string(what) + " residual " + std::to_string(value) +
                                  " straddles its threshold");
  }
}

double max_pairwise_commutator(const std::array<GroupElement, 4>& xs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      worst = std::max(worst, commutator(xs[i], xs[j]).distance(GroupElement::identity()));
    }
  }
  return worst;
}

bool is_trace_zero_square(const GroupElement& k, const Tolerances& tol) {
  return (k * k).distance(GroupElement::minus_identity()) < tol.center;
}

}  // namespace

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::I: return "I";
    case Stratum::II: return "II";
    case Stratum::III: return "III";
  }
  return "?";
}

const char* to_string(Piece p) {
  switch (p) {
    case Piece::PillowInterior: return "PillowInterior";
    case Piece::BlowupInterior: return "BlowupInterior";
    case Piece::RP2Fiber: return "RP2Fiber";
    case Piece::IntervalInterior: return "IntervalInterior";
    case Piece::PillowSurface: return "PillowSurface";
    case Piece::IntervalEndpoint: return "IntervalEndpoint";
    case Piece::CentralVertex: return "CentralVertex";
  }
  return "?";
}

Representation sigma(const Representation& rho) { return {rho.h2, rho.g2, rho.h1, rho.g1}; }

std::optional<GroupElement> sigma_fixed_conjugator(const Representation& rho, const Tolerances& tol) {
  const auto from = rho.elements();
  const auto to = sigma(rho).elements();
  const auto basis = conjugator_space(from, to, tol);
  if (basis.empty()) return std::nullopt;
  const GroupElement k = pick_conjugator(basis);
  if (conjugation_residual(k, from, to) >= tol.mat) return find_conjugator(from, to, tol);
  return k;
}

SigmaFixedPoint classify_fixed_point(const Representation& rho, const Tolerances& tol) {
  const auto k = sigma_fixed_conjugator(rho, tol);
  if (!k) throw PreconditionViolated("representation is not sigma-fixed");

  SigmaFixedPoint out{rho, *k, Stratum::I, Piece::PillowInterior};
  const auto xs = rho.elements();

  double worst_center = 0.0;
  for (const auto& x : xs) worst_center = std::max(worst_center, x.distance_to_center());
  check_band(worst_center, tol.center, "centrality");
  const double worst_comm = max_pairwise_commutator(xs);
  check_band(worst_comm, tol.mat, "commutator");

  switch (stabilizer_type(xs, tol)) {
    case StabilizerType::Full:
      out.stratum = Stratum::III;
      out.piece = Piece::CentralVertex;
      return out;
    case StabilizerType::Torus: {
      out.stratum = Stratum::II;
      // Abelian fixed classes satisfy one of two slot equations literally:
      // (g, h, h, g) or (g, h, h^-1, g^-1).
      const double pillow = std::max(rho.g2.distance(rho.h1), rho.h2.distance(rho.g1));
      const double flipped = std::max(rho.g2.distance(rho.h1.inverse()), rho.h2.distance(rho.g1.inverse()));
      check_band(pillow, tol.mat, "pillow surface");
      check_band(flipped, tol.mat, "blow-up surface");
      const bool on_pillow = pillow < tol.mat;
      const bool on_flipped = flipped < tol.mat;
      if (on_pillow == on_flipped) throw ClassificationAmbiguity("abelian fixed point on neither or both surfaces");
      out.piece = on_pillow ? Piece::PillowSurface : Piece::IntervalEndpoint;
      return out;
    }
    case StabilizerType::Center:
      break;
  }

  // Irreducible: k is unique up to sign and k^2 is central.
  const GroupElement k2 = *k * *k;
  const double to_plus = k2.distance(GroupElement::identity());
  const double to_minus = k2.distance(GroupElement::minus_identity());
  check_band(std::min(to_plus, to_minus), tol.center, "conjugator square");
  if (to_plus < tol.center) {
    out.piece = Piece::PillowInterior;
    return out;
  }
  if (!(to_minus < tol.center)) throw ClassificationAmbiguity("conjugator square is not central");

  const GroupElement c = commutator(rho.g1, rho.h1);
  const double c_plus = c.distance(GroupElement::identity());
  const double c_minus = c.distance(GroupElement::minus_identity());
  check_band(c_plus, tol.mat, "commutator");
  check_band(c_minus, tol.mat, "commutator");
  if (c_plus < tol.mat) {
    out.piece = Piece::IntervalInterior;
  } else if (c_minus < tol.mat) {
    out.piece = Piece::RP2Fiber;
  } else {
    out.piece = Piece::BlowupInterior;
  }
  return out;
}

Representation pillow_point(const GroupElement& g, const GroupElement& h) { return {g, h, h, g}; }

Representation blowup_point(const GroupElement& g, const GroupElement& h, const GroupElement& k,
                            const Tolerances& tol) {
  if (!is_trace_zero_square(k, tol)) throw PreconditionViolated("blow-up conjugator must square to -I");
  const GroupElement c = commutator(g, h);
  if (c.distance(GroupElement::identity()) < tol.mat) throw PreconditionViolated("blow-up pair must not commute");
  if (commutator(k, c).distance(GroupElement::identity()) >= tol.mat) {
    throw PreconditionViolated("blow-up conjugator must commute with [g, h]");
  }
  return {g, h, conjugate(k, h), conjugate(k, g)};
}

GroupElement blowup_partner(const GroupElement& g, const GroupElement& h, const Tolerances& tol) {
  const GroupElement c = commutator(g, h);
  if (c.is_central(tol)) throw PreconditionViolated("[g, h] is central; every trace-zero element qualifies");
  return GroupElement::from_quaternion(0.0, c.vec());
}

Representation rp2_fiber_point(const GroupElement& k, const Tolerances& tol) {
  if (!is_trace_zero_square(k, tol)) throw PreconditionViolated("fiber conjugator must square to -I");
  const GroupElement e3 = GroupElement::diagonal(std::numbers::pi / 2.0);
  const GroupElement j = GroupElement::from_quaternion(0.0, -1.0, 0.0, 0.0);
  return {e3, j, conjugate(k, j), conjugate(k, e3)};
}

GroupElement interval_conjugator(double alpha) {
  return GroupElement::from_quaternion(0.0, std::sin(alpha), 0.0, std::cos(alpha));
}

Representation n2_interval(double theta, double s, double alpha, const Tolerances& tol) {
  if (std::abs(std::sin(theta)) < tol.center && std::abs(std::sin(s)) < tol.center) {
    throw PreconditionViolated("interval degenerates to a point when g and h are both central");
  }
  if (alpha < -tol.alg || alpha > std::numbers::pi / 2.0 + tol.alg) {
    throw PreconditionViolated("interval parameter must lie in [0, pi/2]");
  }
  const GroupElement g = GroupElement::diagonal(theta);
  const GroupElement h = GroupElement::diagonal(s);
  const GroupElement k = interval_conjugator(alpha);
  return {g, h, conjugate(k, h), conjugate(k, g)};
}

IntervalReport certify_interval_injectivity(double theta, double s, int grid, const Tolerances& tol) {
  if (grid < 2) throw PreconditionViolated("interval grid needs at least two points");
  IntervalReport report;
  report.grid = grid;

  std::vector<Representation> points;
  points.reserve(static_cast<std::size_t>(grid));
  const double step = (std::numbers::pi / 2.0) / (grid - 1);
  for (int i = 0; i < grid; ++i) {
    const double alpha = i == grid - 1 ? std::numbers::pi / 2.0 : i * step;
    const Representation rho = n2_interval(theta, s, alpha, tol);
    const GroupElement k = interval_conjugator(alpha);
    const double residual = rho.conjugated(k).distance(sigma(rho));
    report.max_residual = std::max(report.max_residual, residual);
    if (!is_trace_zero_square(k, tol) || residual >= tol.mat) {
      ++report.bad_conjugator;
      report.violations.push_back("k(alpha) fails at alpha=" + std::to_string(alpha));
    }
    if (!sigma_fixed_conjugator(rho, tol)) {
      ++report.not_fixed;
      report.violations.push_back("not sigma-fixed at alpha=" + std::to_string(alpha));
    }
    points.push_back(rho);
  }

  for (int i = 0; i < grid; ++i) {
    for (int j = i + 1; j < grid; ++j) {
      if (class_equal(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)], tol)) {
        ++report.collisions;
        report.violations.push_back("grid points " + std::to_string(i) + " and " + std::to_string(j) +
                                    " are class-equal");
      }
    }
  }

  const GroupElement g = GroupElement::diagonal(theta);
  const GroupElement h = GroupElement::diagonal(s);
  auto lands_on = [&](const Representation& rho, const Representation& target, Piece piece) {
    if (rho.distance(target) >= tol.mat) return false;
    try {
      return classify_fixed_point(rho, tol).piece == piece;
    } catch (const Error&) {
      return false;
    }
  };
  report.start_on_pillow = lands_on(points.front(), pillow_point(g, h), Piece::PillowSurface);
  report.end_on_blowup = lands_on(points.back(), {g, h, h.inverse(), g.inverse()}, Piece::IntervalEndpoint);
  if (!report.start_on_pillow) report.violations.emplace_back("alpha=0 is not on the pillow surface");
  if (!report.end_on_blowup) report.violations.emplace_back("alpha=pi/2 is not on the blow-up surface");
  return report;
}

}  // namespace genus2
