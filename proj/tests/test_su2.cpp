#include <doctest.h>

#include <cmath>
#include <numbers>

#include "genus2/errors.hpp"
#include "genus2/su2.hpp"
#include "oracles.hpp"

using namespace genus2;

namespace {

constexpr double kPi = std::numbers::pi;

const GroupElement kE3 = GroupElement::from_quaternion(0.0, 0.0, 0.0, 1.0);                 // diag(i, -i)
const GroupElement kJ = GroupElement::from_quaternion(0.0, -1.0, 0.0, 0.0);  // [[0,-1],[1,0]]

Vec3 random_vector(Rng& rng, double scale) {
  return Vec3(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)) * scale;
}

}  // namespace

TEST_CASE("matrix view follows the documented convention") {
  CHECK(oracle::frobenius(kE3.matrix(), oracle::matrix(0, 0, 0, 1)) == 0.0);
  oracle::M2 j;
  j << 0.0, -1.0, 1.0, 0.0;
  CHECK(oracle::frobenius(kJ.matrix(), j) == 0.0);

  Rng rng = make_rng(1);
  for (int i = 0; i < 100; ++i) {
    const GroupElement g = haar_sample(rng);
    const oracle::M2 m = g.matrix();
    CHECK(oracle::frobenius(m * m.adjoint(), oracle::identity()) < 1e-12);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
    CHECK(m.trace().real() == doctest::Approx(g.trace()).epsilon(1e-15));
    CHECK(std::abs(g.coords().norm() - 1.0) < kDefaultTolerances.norm);
    CHECK(GroupElement::from_matrix(m).distance(g) < 1e-15);
  }
}

TEST_CASE("quaternion units multiply like E1 E2 = E3") {
  const auto e1 = oracle::matrix(0, 1, 0, 0), e2 = oracle::matrix(0, 0, 1, 0), e3 = oracle::matrix(0, 0, 0, 1);
  CHECK(oracle::frobenius(e1 * e2, e3) == 0.0);
  CHECK(oracle::frobenius(e2 * e3, e1) == 0.0);
  CHECK(oracle::frobenius(e3 * e1, e2) == 0.0);
}

TEST_CASE("mul matches the complex matrix product") {
  Rng rng = make_rng(2);
  const GroupElement g = haar_sample(rng);
  CHECK((GroupElement::identity() * g).distance(g) == 0.0);
  CHECK((g * g.inverse()).distance(GroupElement::identity()) < 1e-15);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement a = haar_sample(rng), b = haar_sample(rng);
    CHECK(oracle::frobenius(mul(a, b).matrix(), oracle::matrix(a) * oracle::matrix(b)) < kDefaultTolerances.mat);
  }
}

TEST_CASE("commutator") {
  Rng rng = make_rng(3);
  const GroupElement h = haar_sample(rng);
  CHECK(commutator(GroupElement::identity(), h).distance(GroupElement::identity()) < 1e-15);
  CHECK(commutator(kE3, kJ).distance(GroupElement::minus_identity()) == 0.0);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement a = haar_sample(rng), b = haar_sample(rng);
    CHECK(oracle::frobenius(commutator(a, b).matrix(), oracle::commutator(oracle::matrix(a), oracle::matrix(b))) <
          kDefaultTolerances.mat);
    // Both commutators are conjugacy-invariant with equal traces.
    CHECK(std::abs(trace_angle(commutator(a, b)) - trace_angle(commutator(b, a))) < kDefaultTolerances.f);
  }
}

TEST_CASE("algebra elements are traceless anti-Hermitian") {
  Rng rng = make_rng(4);
  for (int i = 0; i < 100; ++i) {
    const AlgebraElement v(random_vector(rng, 3.0));
    const oracle::M2 m = v.matrix();
    CHECK(std::abs(m.trace()) < 1e-15);
    CHECK(oracle::frobenius(m.adjoint(), -m) < 1e-15);
    // eigenvalues +-i|v|
    CHECK(std::abs((m * m + v.norm() * v.norm() * oracle::identity()).norm()) < 1e-12);
  }
}

TEST_CASE("exp against the eigendecomposition oracle") {
  CHECK(exp_alg(AlgebraElement()).distance(GroupElement::identity()) == 0.0);
  Rng rng = make_rng(5);
  for (int i = 0; i < 20; ++i) {
    const Vec3 n = random_vector(rng, 1.0).normalized();
    CHECK(exp_alg(AlgebraElement(kPi * n)).distance(GroupElement::minus_identity()) < kDefaultTolerances.mat);
  }
  for (int i = 0; i < 1000; ++i) {
    const AlgebraElement v(random_vector(rng, 4.0));
    CHECK(oracle::frobenius(exp_alg(v).matrix(), oracle::expm(v.matrix())) < kDefaultTolerances.mat);
    CHECK((exp_alg(v) * exp_alg(-v)).distance(GroupElement::identity()) < kDefaultTolerances.mat);
  }
  // Tiny arguments keep full relative precision.
  const AlgebraElement tiny(1e-12, -2e-12, 3e-12);
  CHECK((exp_alg(tiny).vec() - tiny.vec()).norm() < 1e-27);
}

TEST_CASE("log is the principal inverse of exp") {
  CHECK(log_grp(GroupElement::identity()).norm() == 0.0);
  const AlgebraElement d = log_grp(kE3);
  CHECK(d.norm() == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK((d.vec().normalized() - Vec3::UnitZ()).norm() < 1e-15);

  Rng rng = make_rng(6);
  for (int i = 0; i < 1000; ++i) {
    Vec3 v = random_vector(rng, 1.0);
    v = v.normalized() * uniform(rng, 0.0, kPi - 0.01);
    CHECK((log_grp(exp_alg(AlgebraElement(v))).vec() - v).norm() < kDefaultTolerances.alg);
  }
  CHECK_THROWS_AS(log_grp(GroupElement::minus_identity()), CenterAmbiguity);
  CHECK_THROWS_AS(log_grp(exp_alg(AlgebraElement(0, 0, kPi - 1e-12))), CenterAmbiguity);
}

TEST_CASE("trace angle") {
  CHECK(trace_angle(GroupElement::identity()) == 0.0);
  CHECK(trace_angle(kE3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(trace_angle(GroupElement::minus_identity()) == 1.0);
  CHECK(trace_angle_from_trace(2.0) == 0.0);
  CHECK(trace_angle_from_trace(0.0) == doctest::Approx(0.5));
  CHECK(trace_angle_from_trace(-2.0) == doctest::Approx(1.0));
  CHECK(trace_angle_from_trace(2.0000001) == 0.0);  // clamped

  Rng rng = make_rng(7);
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = haar_sample(rng), k = haar_sample(rng);
    CHECK(std::abs(trace_angle(g) - oracle::trace_angle(oracle::matrix(g))) < 1e-12);
    CHECK(std::abs(trace_angle(conjugate(k, g)) - trace_angle(g)) < kDefaultTolerances.f);
  }
}

TEST_CASE("Haar sampling statistics") {
  Rng a = make_rng(8), b = make_rng(8);
  CHECK(haar_sample(a) == haar_sample(b));

  // tr = 2w with E[w] = 0 and E[w^2] = 1/4 on the 3-sphere, so Var(tr) = 1.
  constexpr int n = 100000;
  Rng rng = make_rng(9);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = haar_sample(rng).trace();
    sum += t;
    sum_sq += t * t;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 5.0 / std::sqrt(static_cast<double>(n)));
  // E[tr^4] = 16 E[w^4] = 2, so Var(tr^2) = 1.
  CHECK(std::abs(sum_sq / n - 1.0) < 5.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("adjoint matches conjugation of matrices") {
  Rng rng = make_rng(10);
  for (int i = 0; i < 200; ++i) {
    const GroupElement k = haar_sample(rng);
    const AlgebraElement v(random_vector(rng, 2.0));
    const oracle::M2 expected = oracle::matrix(k) * v.matrix() * oracle::matrix(k).adjoint();
    CHECK(oracle::frobenius(adjoint(k, v).matrix(), expected) < 1e-12);
    CHECK(killing(adjoint(k, v), adjoint(k, v)) == doctest::Approx(killing(v, v)).epsilon(1e-12));
  }
}

TEST_CASE("rotation_between") {
  Rng rng = make_rng(11);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = random_vector(rng, 1.0).normalized(), b = random_vector(rng, 1.0).normalized();
    CHECK((adjoint(rotation_between(a, b), AlgebraElement(a)).vec() - b).norm() < 1e-12);
    CHECK((adjoint(rotation_between(a, -a), AlgebraElement(a)).vec() + a).norm() < 1e-12);
  }
}

TEST_CASE("find_conjugator") {
  Rng rng = make_rng(12);
  SUBCASE("identical lists") {
    const std::array<GroupElement, 3> xs{haar_sample(rng), haar_sample(rng), haar_sample(rng)};
    const auto k = find_conjugator(xs, xs);
    REQUIRE(k);
    CHECK(conjugation_residual(*k, xs, xs) < kDefaultTolerances.mat);
  }
  SUBCASE("construct then recover") {
    for (int i = 0; i < 500; ++i) {
      const GroupElement k0 = haar_sample(rng);
      const std::array<GroupElement, 2> as{haar_sample(rng), haar_sample(rng)};
      const std::array<GroupElement, 2> bs{conjugate(k0, as[0]), conjugate(k0, as[1])};
      const auto k = find_conjugator(as, bs);
      REQUIRE(k);
      CHECK(std::min(k->distance(k0), k->distance(-k0)) < kDefaultTolerances.mat);
      // Solvability is symmetric.
      CHECK(find_conjugator(bs, as).has_value());
    }
  }
  SUBCASE("different traces") {
    const std::array<GroupElement, 1> as{kE3};
    const std::array<GroupElement, 1> bs{GroupElement::diagonal(kPi / 3.0)};  // trace 1
    CHECK_FALSE(find_conjugator(as, bs).has_value());
    CHECK_FALSE(find_conjugator(bs, as).has_value());
  }
  SUBCASE("same traces, different pair invariants") {
    for (int i = 0; i < 100; ++i) {
      const std::array<GroupElement, 2> as{haar_sample(rng), haar_sample(rng)};
      const GroupElement k0 = haar_sample(rng);
      // Conjugate the slots independently: traces agree, tr(ab) does not.
      const std::array<GroupElement, 2> bs{conjugate(k0, as[0]), as[1]};
      CHECK_FALSE(find_conjugator(as, bs).has_value());
    }
  }
  CHECK_THROWS_AS(find_conjugator(std::span<const GroupElement>(), std::span<const GroupElement>()),
                  PreconditionViolated);
}

TEST_CASE("stabilizer type") {
  const std::array<GroupElement, 2> central{GroupElement::identity(), GroupElement::minus_identity()};
  CHECK(stabilizer_type(central) == StabilizerType::Full);
  const std::array<GroupElement, 2> torus{GroupElement::diagonal(0.3), GroupElement::diagonal(1.1)};
  CHECK(stabilizer_type(torus) == StabilizerType::Torus);
  const std::array<GroupElement, 2> center{kE3, kJ};
  CHECK(stabilizer_type(center) == StabilizerType::Center);

  Rng rng = make_rng(13);
  for (int i = 0; i < 100; ++i) {
    const GroupElement k = haar_sample(rng);
    for (const auto& xs : {central, torus, center}) {
      const std::array<GroupElement, 2> ys{conjugate(k, xs[0]), conjugate(k, xs[1])};
      CHECK(stabilizer_type(ys) == stabilizer_type(xs));
    }
  }
}

TEST_CASE("zero quaternion is rejected") {
  CHECK_THROWS_AS(GroupElement::from_quaternion(0, 0, 0, 0), ZeroVector);
}
