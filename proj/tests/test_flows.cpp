#include <doctest.h>

#include <cmath>
#include <numbers>

#include "genus2/errors.hpp"
#include "genus2/flows.hpp"
#include "genus2/moment.hpp"
#include "genus2/sampler.hpp"
#include "oracles.hpp"

using namespace genus2;

namespace {

constexpr double kPi = std::numbers::pi;

Representation interior(std::uint64_t seed, std::uint64_t i) {
  SampleSpec spec;
  spec.seed = seed;
  spec.conjugate = true;
  return sample_one(spec, i);
}

// X = h2 h1 - (h2 h1)^-1 as a matrix.
oracle::M2 raw_x_matrix(const Representation& r) {
  const oracle::M2 p = oracle::matrix(r.h2) * oracle::matrix(r.h1);
  return p - p.inverse();
}

oracle::M2 raw_y_matrix(const Representation& r) {
  const oracle::M2 p = oracle::matrix(r.h1) * oracle::matrix(r.h2);
  return p - p.inverse();
}

}  // namespace

TEST_CASE("torus elements") {
  const TorusElement t(-0.5, 7.0, 2 * kPi);
  CHECK(t[0] == doctest::Approx(2 * kPi - 0.5));
  CHECK(t[1] == doctest::Approx(7.0 - 2 * kPi));
  CHECK(t[2] == 0.0);
  const TorusElement u = TorusElement(1.0, 2.0, 4.0).canonical_mod_kernel();
  CHECK(u[2] == doctest::Approx(4.0 - kPi));
  CHECK(u[0] == doctest::Approx(1.0 + kPi));
  CHECK(TorusElement(kPi, kPi, kPi).distance_to_kernel() == 0.0);
  CHECK((TorusElement(1, 2, 3) + -TorusElement(1, 2, 3)).distance(TorusElement()) < 1e-15);
}

TEST_CASE("generators") {
  Rng rng = make_rng(1);
  SUBCASE("diagonal h1 gives the z axis") {
    Representation rho;
    rho.h1 = GroupElement::diagonal(kPi / 2.0);
    rho.h2 = exp_alg(AlgebraElement(0.7 * Vec3(std::sin(0.4), 0.0, std::cos(0.4))));
    const FlowGenerators g = generators(rho);
    CHECK((g.xi1_hat.vec() - Vec3::UnitZ()).norm() < 1e-15);
    // X and Y have equal length before normalization: both are 2 sin(theta3).
    CHECK(raw_x(rho).norm() == doctest::Approx(raw_y(rho).norm()).epsilon(1e-14));
    Eigen::ComplexEigenSolver<oracle::M2> es(raw_x_matrix(rho));
    CHECK(std::abs(es.eigenvalues()[0]) == doctest::Approx(raw_x(rho).norm()).epsilon(1e-12));
  }
  SUBCASE("unit norm, orientation, equivariance") {
    for (std::uint64_t i = 0; i < 500; ++i) {
      const Representation rho = interior(1, i);
      const FlowGenerators g = generators(rho);
      for (const auto& v : {g.xi1_hat, g.xi2_hat, g.x_hat, g.y_hat}) {
        CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(exp_alg(kPi * v).distance(GroupElement::minus_identity()) < kDefaultTolerances.mat);
      }
      CHECK(killing(g.xi1_hat, log_grp(rho.h1)) > 0.0);
      CHECK(killing(g.xi2_hat, log_grp(rho.h2)) > 0.0);
      CHECK(oracle::frobenius(raw_x(rho).matrix(), raw_x_matrix(rho)) < 1e-12);
      CHECK(oracle::frobenius(raw_y(rho).matrix(), raw_y_matrix(rho)) < 1e-12);
      CHECK(killing(g.x_hat, raw_x(rho)) > 0.0);

      const GroupElement k = haar_sample(rng);
      const FlowGenerators h = generators(rho.conjugated(k));
      CHECK((h.x_hat.vec() - adjoint(k, g.x_hat).vec()).norm() < kDefaultTolerances.alg);
      CHECK((h.xi1_hat.vec() - adjoint(k, g.xi1_hat).vec()).norm() < kDefaultTolerances.alg);
    }
  }
  SUBCASE("central elements are refused") {
    Representation rho;
    rho.h2 = GroupElement::diagonal(0.5);
    CHECK_THROWS_AS(generators(rho), DegenerateGenerator);
    rho.h1 = GroupElement::diagonal(0.5);
    rho.h2 = GroupElement::diagonal(-0.5);  // h1 h2 = I
    CHECK_THROWS_AS(generators(rho), DegenerateGenerator);
    CHECK_THROWS_AS(act(TorusElement(1, 1, 1), rho), DegenerateGenerator);
  }
}

TEST_CASE("act") {
  Rng rng = make_rng(2);
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const Representation rho = interior(2, i);
    CHECK(act(TorusElement(), rho).distance(rho) < 1e-15);
    CHECK(act(TorusElement(kPi, kPi, kPi), rho).distance(rho) < kDefaultTolerances.mat);

    const TorusElement t = random_torus_element(rng);
    const Representation moved = act(t, rho);
    CHECK(relation_residual(moved) < kDefaultTolerances.rel);
    // h-slots are untouched, so the moment map is bitwise unchanged.
    CHECK(moved.h1 == rho.h1);
    CHECK(moved.h2 == rho.h2);
    CHECK(moment_mu(moved).x == moment_mu(rho).x);

    // Circles commute at tuple level.
    const TorusElement s = random_torus_element(rng);
    CHECK(act(s, act(t, rho)).distance(act(s + t, rho)) < kDefaultTolerances.mat);

    // (pi, pi, 0) negates g1 and g2.
    const Representation half = act(TorusElement(kPi, kPi, 0.0), rho);
    CHECK(half.g1.distance(-rho.g1) < kDefaultTolerances.mat);
    CHECK(half.g2.distance(-rho.g2) < kDefaultTolerances.mat);
    CHECK_FALSE(class_equal(half, rho));
  }
}

TEST_CASE("act matches the matrix formula") {
  Rng rng = make_rng(3);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Representation rho = interior(3, i);
    const TorusElement t = random_torus_element(rng);
    const Representation moved = act(t, rho);
    const FlowGenerators g = generators(rho);
    using oracle::expm;
    const oracle::M2 g1 = expm(t[2] * g.x_hat.matrix()) * oracle::matrix(rho.g1) * expm(t[0] * g.xi1_hat.matrix());
    const oracle::M2 g2 = expm(t[2] * g.y_hat.matrix()) * oracle::matrix(rho.g2) * expm(t[1] * g.xi2_hat.matrix());
    CHECK(oracle::frobenius(moved.g1.matrix(), g1) < kDefaultTolerances.mat);
    CHECK(oracle::frobenius(moved.g2.matrix(), g2) < kDefaultTolerances.mat);
  }
}

TEST_CASE("intertwining identities") {
  Rng rng = make_rng(4);
  for (std::uint64_t i = 0; i < 2000; ++i) {
    const Representation rho = interior(4, i);
    const FlowIdentityReport zero = verify_flow_identities(rho, 0.0);
    CHECK(zero.h1_residual == 0.0);
    CHECK(zero.h2_residual == 0.0);
    const double t = i == 0 ? 0.37 : uniform(rng, -3.0, 3.0);
    const FlowIdentityReport r = verify_flow_identities(rho, t);
    CHECK(r.h1_residual < 1e-10);
    CHECK(r.h2_residual < 1e-10);
  }
  SUBCASE("matrix oracle at t = 0.37") {
    const Representation rho = interior(4, 0);
    const oracle::M2 ex = oracle::expm(0.37 * raw_x_matrix(rho));
    const oracle::M2 ey = oracle::expm(0.37 * raw_y_matrix(rho));
    CHECK(oracle::frobenius(ex * oracle::matrix(rho.h2), oracle::matrix(rho.h2) * ey) < 1e-10);
    CHECK(oracle::frobenius(oracle::matrix(rho.h1) * ex, ey * oracle::matrix(rho.h1)) < 1e-10);
  }
  SUBCASE("commuting h's on the boundary") {
    Representation rho;
    rho.h1 = GroupElement::diagonal(0.4);
    rho.h2 = GroupElement::diagonal(1.1);
    CHECK(raw_x(rho).vec() == raw_y(rho).vec());
    const FlowIdentityReport r = verify_flow_identities(rho, 0.8);
    CHECK(r.h1_residual < 1e-12);
    CHECK(r.h2_residual < 1e-12);
  }
}

TEST_CASE("kernel and freeness") {
  Rng rng = make_rng(5);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Representation rho = interior(5, i);
    const KernelReport r = kernel_and_freeness_check(rho, 5, rng);
    CHECK(r.kernel_fixes);
    CHECK(r.violations == 0);
    CHECK(r.min_displacement > kDefaultTolerances.mat);
  }
}
