#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "genus2/errors.hpp"
#include "genus2/sampler.hpp"
#include "genus2/tau.hpp"

using namespace genus2;

namespace {

constexpr double kPi = std::numbers::pi;

// Kernel-aware angle comparison.
double fiber_gap(const TorusElement& a, const TorusElement& b) {
  return std::min(a.distance(b), a.distance(b + TorusElement(kPi, kPi, kPi)));
}

}  // namespace

TEST_CASE("section") {
  const Vec3 bary(0.25, 0.25, 0.25);
  const Representation s = section(bary);
  CHECK(relation_residual(s) < 1e-8);
  CHECK((mu_lambda(s).x - bary).cwiseAbs().maxCoeff() < 1e-8);

  // a1 = a2 forces equal traces.
  const Vec3 x(0.2, 0.3, 0.2);
  REQUIRE(QuotientMatrix::apply(x)[0] == QuotientMatrix::apply(x)[1]);
  const Representation sym = section(x);
  CHECK(std::abs(sym.h1.trace() - sym.h2.trace()) < 1e-15);

  // tr(h1 h2) = 2 cos(pi a3) pins the angle between the h axes.
  Rng rng = make_rng(1);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Vec3 b = random_interior_base(rng);
    const Vec3 a = QuotientMatrix::apply(b);
    const Representation r = section(b);
    CHECK((r.h1 * r.h2).trace() == doctest::Approx(2.0 * std::cos(kPi * a[2])).epsilon(1e-9));
    CHECK(relation_residual(r) < kDefaultTolerances.rel);
    worst = std::max(worst, (mu_lambda(r).x - b).cwiseAbs().maxCoeff());
    CHECK(section(b) == r);  // deterministic
  }
  CHECK(worst < 1e-7);

  CHECK_THROWS_AS(section(Vec3(0.0, 0.3, 0.3)), PreconditionViolated);
  CHECK_THROWS_AS(section(Vec3(0.5, 0.5, 0.5)), PreconditionViolated);
}

TEST_CASE("section near the boundary") {
  // Base points with one slack at 1e-5 and the rest generic.
  Rng rng = make_rng(2);
  const auto v = vertices(PolytopeTag::StdDelta);
  for (int n = 0; n < 2000; ++n) {
    const std::size_t face = static_cast<std::size_t>(n % 4);
    std::array<double, 4> w{};
    double total = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != face) total += (w[i] = uniform(rng, 0.1, 1.0));
    }
    Vec3 b = 1e-5 * v[face];
    for (std::size_t i = 0; i < 4; ++i) b += (1.0 - 1e-5) * w[i] / total * v[i];
    const auto s = slacks(b, PolytopeTag::StdDelta);
    REQUIRE(*std::min_element(s.begin(), s.end()) > 0.0);
    const Representation r = section(b);
    CHECK(relation_residual(r) < kDefaultTolerances.rel);
    CHECK((mu_lambda(r).x - b).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("fiber coordinates") {
  Rng rng = make_rng(3);
  SUBCASE("on the section") {
    const Vec3 b = random_interior_base(rng);
    const FiberCoordinates fc = fiber_coordinates(section(b));
    CHECK(fiber_gap(fc.angles, TorusElement()) < 1e-9);
    CHECK((fc.base.x - b).norm() < 1e-9);
  }
  SUBCASE("construct then recover") {
    for (int n = 0; n < 1000; ++n) {
      const Vec3 b = random_interior_base(rng);
      const TorusElement t = random_torus_element(rng);
      const Representation rho = act(t, section(b)).conjugated(haar_sample(rng));
      const FiberCoordinates fc = fiber_coordinates(rho);
      CHECK(fiber_gap(fc.angles, t) < 1e-8);
      CHECK(fc.angles[2] < kPi);
      CHECK(class_equal(act(fc.angles, section(fc.base.x)), rho));
    }
  }
  SUBCASE("boundary classes are refused") {
    const Representation edge{GroupElement::identity(), GroupElement::minus_identity(), haar_sample(rng),
                              GroupElement::identity()};
    CHECK_THROWS_AS(fiber_coordinates(edge), PreconditionViolated);
  }
}

TEST_CASE("tau") {
  Rng rng = make_rng(4);
  SampleSpec spec;
  spec.seed = 4;
  spec.conjugate = true;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Representation rho = sample_one(spec, i);
    const Representation image = tau(rho);
    CHECK(class_equal(tau(image), rho));
    CHECK((mu_lambda(image).x - mu_lambda(rho).x).cwiseAbs().maxCoeff() < kDefaultTolerances.f);
    const TorusElement t = random_torus_element(rng);
    CHECK(class_equal(tau(act(t, rho)), act(-t, image)));
  }
  SUBCASE("section points are fixed") {
    const Representation s = section(random_interior_base(rng));
    CHECK(class_equal(tau(s), s));
  }
}

TEST_CASE("tau fixes exactly the half-period fibers") {
  // t -> -t on T^3 / {0, (pi,pi,pi)} fixes t iff 2t lies in the kernel.
  Rng rng = make_rng(5);
  const double p = kPi, h = kPi / 2.0;
  const std::vector<TorusElement> fixed{
      {0, 0, 0}, {p, p, p}, {p, 0, 0}, {0, p, 0}, {0, 0, p}, {p, p, 0}, {h, h, h}, {h, h, 3 * h}, {3 * h, h, h},
  };
  for (int n = 0; n < 50; ++n) {
    const Representation s = section(random_interior_base(rng));
    for (const auto& t : fixed) {
      const Representation rho = act(t, s);
      CHECK(class_equal(tau(rho), rho));
    }
    for (int m = 0; m < 10; ++m) {
      TorusElement t;
      do {
        t = random_torus_element(rng);
      } while ((t + t).distance_to_kernel() < 1e-3);
      const Representation rho = act(t, s);
      CHECK_FALSE(class_equal(tau(rho), rho));
    }
  }
}
