#include "genus2/flows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angular_gap(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

AlgebraElement unit_axis(const GroupElement& g, const char* what, const Tolerances& tol) {
  if (g.is_central(tol)) throw DegenerateGenerator(std::string(what) + " is central");
  return AlgebraElement(g.vec().normalized());
}

}  // namespace

TorusElement::TorusElement(double t1, double t2, double t3) : phi_{wrap(t1), wrap(t2), wrap(t3)} {}

TorusElement TorusElement::canonical_mod_kernel() const {
  if (phi_[2] < std::numbers::pi) return *this;
  constexpr double pi = std::numbers::pi;
  return {phi_[0] + pi, phi_[1] + pi, phi_[2] + pi};
}

double TorusElement::distance(const TorusElement& other) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) d = std::max(d, angular_gap(phi_[i], other.phi_[i]));
  return d;
}

double TorusElement::distance_to_kernel() const {
  constexpr double pi = std::numbers::pi;
  return std::min(distance(TorusElement()), distance(TorusElement(pi, pi, pi)));
}

TorusElement random_torus_element(Rng& rng) {
  return {uniform(rng, 0.0, kTwoPi), uniform(rng, 0.0, kTwoPi), uniform(rng, 0.0, kTwoPi)};
}

AlgebraElement raw_x(const Representation& rho) { return AlgebraElement(2.0 * (rho.h2 * rho.h1).vec()); }
AlgebraElement raw_y(const Representation& rho) { return AlgebraElement(2.0 * (rho.h1 * rho.h2).vec()); }

FlowGenerators generators(const Representation& rho, const Tolerances& tol) {
  FlowGenerators g;
  // log h has the direction of vec(h) whenever h is not central.
  g.xi1_hat = unit_axis(rho.h1, "h1", tol);
  g.xi2_hat = unit_axis(rho.h2, "h2", tol);
  g.x_hat = unit_axis(rho.h2 * rho.h1, "h2 h1", tol);
  g.y_hat = unit_axis(rho.h1 * rho.h2, "h1 h2", tol);
  return g;
}

Representation act(const TorusElement& t, const Representation& rho, const FlowGenerators& gens) {
  Representation out = rho;
  out.g1 = exp_alg(t[2] * gens.x_hat) * rho.g1 * exp_alg(t[0] * gens.xi1_hat);
  out.g2 = exp_alg(t[2] * gens.y_hat) * rho.g2 * exp_alg(t[1] * gens.xi2_hat);
  return out;
}

Representation act(const TorusElement& t, const Representation& rho, const Tolerances& tol) {
  return act(t, rho, generators(rho, tol));
}

FlowIdentityReport verify_flow_identities(const Representation& rho, double t) {
  const GroupElement ex = exp_alg(t * raw_x(rho));
  const GroupElement ey = exp_alg(t * raw_y(rho));
  return {(ex * rho.h2).distance(rho.h2 * ey), (rho.h1 * ex).distance(ey * rho.h1)};
}

KernelReport kernel_and_freeness_check(const Representation& rho, int trials, Rng& rng, const Tolerances& tol,
                                       double kernel_margin) {
  constexpr double pi = std::numbers::pi;
  const FlowGenerators gens = generators(rho, tol);
  KernelReport report;
  const Representation fixed = act(TorusElement(pi, pi, pi), rho, gens);
  report.kernel_residual = fixed.distance(rho);
  report.kernel_fixes = report.kernel_residual < tol.mat;
  report.trials = trials;
  report.min_displacement = std::numeric_limits<double>::infinity();

  const auto xs = rho.elements();
  for (int i = 0; i < trials; ++i) {
    TorusElement t;
    do {
      t = random_torus_element(rng);
    } while (t.distance_to_kernel() < kernel_margin);
    const Representation moved = act(t, rho, gens);
    const auto ys = moved.elements();
    report.min_displacement = std::min(report.min_displacement, best_conjugator(xs, ys).residual);
    if (class_equal(moved, rho, tol)) ++report.violations;
  }
  return report;
}

}  // namespace genus2
