#pragma once

// The torus action generated by the twist flows along the three pants
// curves C1, C2, C3 (represented by h1, h2, h1 h2):
//
//   t . (g1, h1, g2, h2) = (e^{t3 X} g1 e^{t1 xi1}, h1, e^{t3 Y} g2 e^{t2 xi2}, h2)
//
// with xi_i along log h_i, X along h2 h1 - (h2 h1)^-1 and Y along
// h1 h2 - (h1 h2)^-1. Every generator is normalized to unit length, so each
// circle has period 2 pi and angle pi multiplies the acted slot by -I; the
// ineffective kernel is then {(0,0,0), (pi,pi,pi)}.

#include <array>
#include <cstdint>

#include "genus2/repvar.hpp"

namespace genus2 {

class TorusElement {
 public:
  TorusElement() = default;
  TorusElement(double t1, double t2, double t3);

  [[nodiscard]] double operator[](std::size_t i) const { return phi_[i]; }
  [[nodiscard]] const std::array<double, 3>& angles() const { return phi_; }

  // Representative of the class modulo {(0,0,0), (pi,pi,pi)} with t3 in [0, pi).
  [[nodiscard]] TorusElement canonical_mod_kernel() const;
  // Angular distance to the kernel {(0,0,0), (pi,pi,pi)} (max over components).
  [[nodiscard]] double distance_to_kernel() const;
  // Componentwise angular distance (max over components) to another element.
  [[nodiscard]] double distance(const TorusElement& other) const;

  friend TorusElement operator+(const TorusElement& a, const TorusElement& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend TorusElement operator-(const TorusElement& a) { return {-a[0], -a[1], -a[2]}; }

 private:
  std::array<double, 3> phi_{0.0, 0.0, 0.0};  // each in [0, 2 pi)
};

TorusElement random_torus_element(Rng& rng);

struct FlowGenerators {
  AlgebraElement xi1_hat, xi2_hat, x_hat, y_hat;
};

// Throws DegenerateGenerator when h1, h2 or h1 h2 is within tol.center of +-I.
FlowGenerators generators(const Representation& rho, const Tolerances& tol = kDefaultTolerances);

Representation act(const TorusElement& t, const Representation& rho, const Tolerances& tol = kDefaultTolerances);
Representation act(const TorusElement& t, const Representation& rho, const FlowGenerators& gens);

// Unnormalized X = h2 h1 - (h2 h1)^-1 and Y = h1 h2 - (h1 h2)^-1 as su(2) vectors.
AlgebraElement raw_x(const Representation& rho);
AlgebraElement raw_y(const Representation& rho);

struct FlowIdentityReport {
  double h2_residual = 0.0;  // |e^{tX} h2 - h2 e^{tY}|_F
  double h1_residual = 0.0;  // |h1 e^{tX} - e^{tY} h1|_F
};

// Intertwining identities for the raw generators at flow time t.
FlowIdentityReport verify_flow_identities(const Representation& rho, double t);

struct KernelReport {
  bool kernel_fixes = false;        // act((pi,pi,pi), rho) == rho
  double kernel_residual = 0.0;     // its slotwise distance
  int trials = 0;
  int violations = 0;               // non-kernel t with class_equal(act(t, rho), rho)
  double min_displacement = 0.0;    // smallest conjugation residual over non-kernel trials
};

// Checks that (pi,pi,pi) acts trivially and that `trials` random non-kernel
// torus elements all move the class of rho. Elements within `kernel_margin`
// of the kernel are redrawn.
KernelReport kernel_and_freeness_check(const Representation& rho, int trials, Rng& rng,
                                       const Tolerances& tol = kDefaultTolerances,
                                       double kernel_margin = 1e-6);

}  // namespace genus2
