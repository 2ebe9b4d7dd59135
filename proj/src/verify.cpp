#include "genus2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <thread>

#include "genus2/errors.hpp"
#include "genus2/flows.hpp"
#include "genus2/moment.hpp"
#include "genus2/sampler.hpp"
#include "genus2/sigma.hpp"
#include "genus2/tau.hpp"

namespace genus2 {

const char* const kNuNormalizationNote =
    "nu normalization: the printed formula (|z1|^2, |z2|^2, |z3|^2) / (2 |z|^2) has image (1/2) Delta, "
    "not Delta; image coincidence with the standard simplex holds only after rescaling by 2 "
    "(factor-2 discrepancy, flagged and not corrected)";

namespace {

constexpr double kPi = std::numbers::pi;

using Stats = std::map<std::string, InvariantStat>;

struct Outcome {
  bool pass = true;
  double residual = 0.0;
  std::optional<double> margin;
  std::string detail;
};

Outcome residual_below(double r, double threshold) { return {r < threshold, r, std::nullopt, {}}; }
Outcome margin_above(double m, double threshold) { return {m > threshold, 0.0, m, {}}; }
Outcome holds(bool pass, std::string detail = {}) { return {pass, 0.0, std::nullopt, std::move(detail)}; }

// Records one invariant evaluation for one trial. Library errors count as
// failures of that invariant and never abort the suite.
class Recorder {
 public:
  Recorder(const std::string& suite, long trial, Stats& stats) : suite_(suite), trial_(trial), stats_(stats) {}

  void check(const std::string& name, double threshold, const std::function<Outcome()>& body) {
    Outcome out;
    try {
      out = body();
    } catch (const Error& e) {
      out = {false, std::numeric_limits<double>::quiet_NaN(), std::nullopt, e.what()};
    }
    InvariantStat& s = stats_[suite_ + "." + name];
    s.threshold = threshold;
    ++s.trials;
    if (std::isfinite(out.residual)) s.max_residual = std::max(s.max_residual, out.residual);
    if (out.margin) s.min_margin = s.min_margin ? std::min(*s.min_margin, *out.margin) : *out.margin;
    if (!out.pass) {
      ++s.failures;
      if (s.first_failure_trial < 0) {
        s.first_failure_trial = trial_;
        s.first_failure = out.detail.empty() ? "residual " + format_double(out.residual) : out.detail;
      }
    }
  }

 private:
  const std::string& suite_;
  long trial_;
  Stats& stats_;
};

struct SuiteContext {
  std::uint64_t seed = 0;
  Tolerances tol;
};

using SuiteFn = void (*)(long trial, const SuiteContext& ctx, Recorder& rec);

Representation interior_sample(const SuiteContext& ctx, long trial) {
  SampleSpec spec;
  spec.seed = ctx.seed;
  spec.conjugate = true;
  return sample_one(spec, static_cast<std::uint64_t>(trial), ctx.tol);
}

GroupElement trace_zero(Rng& rng) {
  const GroupElement g = haar_sample(rng);
  return GroupElement::from_quaternion(0.0, g.vec());
}

double class_residual(const Representation& a, const Representation& b) {
  const auto xs = a.elements();
  const auto ys = b.elements();
  return best_conjugator(xs, ys).residual;
}

// ---------------------------------------------------------------- flows

void flows_trial(long trial, const SuiteContext& ctx, Recorder& rec) {
  const Tolerances& tol = ctx.tol;
  Rng rng = make_rng(ctx.seed ^ 0xf10f5ULL, static_cast<std::uint64_t>(trial));
  const Representation rho = interior_sample(ctx, trial);
  const TorusElement t = random_torus_element(rng);
  const FlowGenerators gens = generators(rho, tol);

  rec.check("relation_under_action", tol.mat, [&] { return residual_below(relation_residual(act(t, rho, gens)), tol.mat); });

  rec.check("intertwining", tol.mat / 10.0, [&] {
    const FlowIdentityReport r = verify_flow_identities(rho, uniform(rng, -kPi, kPi));
    return residual_below(std::max(r.h1_residual, r.h2_residual), tol.mat / 10.0);
  });

  rec.check("h_slots_fixed", tol.mat, [&] {
    const Representation moved = act(t, rho, gens);
    return residual_below(std::max(moved.h1.distance(rho.h1), moved.h2.distance(rho.h2)), tol.mat);
  });

  rec.check("group_law", tol.mat, [&] {
    const TorusElement s = random_torus_element(rng);
    return residual_below(act(s, act(t, rho, gens), tol).distance(act(s + t, rho, gens)), tol.mat);
  });

  rec.check("kernel_acts_trivially", tol.mat, [&] {
    return residual_below(act(TorusElement(kPi, kPi, kPi), rho, gens).distance(rho), tol.mat);
  });

  rec.check("action_is_free", 0.0, [&] {
    TorusElement u;
    do {
      u = random_torus_element(rng);
    } while (u.distance_to_kernel() < 1e-3);
    const Representation moved = act(u, rho, gens);
    Outcome out = margin_above(class_residual(moved, rho), tol.mat);
    out.pass = out.pass && !class_equal(moved, rho, tol);
    return out;
  });
}

// ---------------------------------------------------------------- polytope

bool vertex_bijection_exact() {
  // Integer images of the vertices of Delta under M must be exactly the
  // vertex set of Tilde-Delta.
  const int delta[4][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  const std::set<std::array<int, 3>> tilde{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  std::set<std::array<int, 3>> image;
  for (const auto& v : delta) {
    std::array<int, 3> y{};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) y[r] += QuotientMatrix::matrix[r][c] * v[c];
    }
    image.insert(y);
  }
  return image == tilde;
}

void polytope_trial(long trial, const SuiteContext& ctx, Recorder& rec) {
  const Tolerances& tol = ctx.tol;
  Rng rng = make_rng(ctx.seed ^ 0x9017ULL, static_cast<std::uint64_t>(trial));

  if (trial == 0) rec.check("vertex_bijection", 0.0, [&] { return holds(vertex_bijection_exact()); });

  rec.check("f2_in_tetrahedron", tol.poly, [&] {
    const GroupElement a = haar_sample(rng), b = haar_sample(rng);
    const Vec3 x(trace_angle(a), trace_angle(b), trace_angle(a * b));
    const auto s = slacks(x, PolytopeTag::TildeDelta);
    const double violation = std::max(0.0, -*std::min_element(s.begin(), s.end()));
    return residual_below(violation, tol.poly);
  });

  rec.check("boundary_iff_commuting", 0.0, [&] {
    // h1 = exp(a z), h2 = exp(b n) with n at angle phi from z. Exactly or
    // almost commuting pairs (phi <= 1e-11) must land on the boundary;
    // phi in [1e-3, 1e-2] must not. Slack grows like phi^2 while the
    // commutator grows like phi, so both sides clear their thresholds.
    double a = 0.0, b = 0.0;
    do {
      a = uniform(rng, 0.3, kPi - 0.3);
      b = uniform(rng, 0.3, kPi - 0.3);
    } while (std::abs(a + b - kPi) < 0.3 || std::abs(a - b) < 0.3);
    const bool on_boundary = trial % 2 == 0;
    const double phi = on_boundary ? (trial % 4 == 0 ? 0.0 : uniform(rng, 0.0, 1e-11)) : uniform(rng, 1e-3, 1e-2);
    const double psi = uniform(rng, 0.0, 2.0 * kPi);
    const Vec3 n(std::sin(phi) * std::cos(psi), std::sin(phi) * std::sin(psi), std::cos(phi));
    Representation rho{GroupElement::identity(), exp_alg(AlgebraElement(a * Vec3::UnitZ())),
                       GroupElement::identity(), exp_alg(AlgebraElement(b * n))};
    if (uniform(rng) < 0.5) rho.h2 = -rho.h2;
    rho = rho.conjugated(haar_sample(rng));
    const bool boundary = moment_mu(rho, tol).region.kind != RegionKind::Interior;
    return holds(boundary_commutation_check(rho, tol) && boundary == on_boundary,
                 on_boundary ? "commuting pair off the boundary" : "non-commuting pair on the boundary");
  });

  rec.check("interior_mu_lambda_strict", tol.poly, [&] {
    const SimplexPoint p = mu_lambda(interior_sample(ctx, trial), tol);
    const auto s = slacks(p.x, PolytopeTag::StdDelta);
    Outcome out = margin_above(*std::min_element(s.begin(), s.end()), tol.poly);
    out.pass = out.pass && p.region.kind == RegionKind::Interior;
    return out;
  });

  rec.check("section_round_trip", 100.0 * tol.f, [&] {
    const Vec3 x = random_interior_base(rng);
    const Vec3 back = mu_lambda(section(x, tol), tol).x;
    return residual_below((back - x).cwiseAbs().maxCoeff(), 100.0 * tol.f);
  });

  rec.check("mu_conjugation_invariant", tol.f, [&] {
    const Representation rho = interior_sample(ctx, trial);
    const Vec3 d = moment_mu(rho.conjugated(haar_sample(rng)), tol).x - moment_mu(rho, tol).x;
    return residual_below(d.cwiseAbs().maxCoeff(), tol.f);
  });

  rec.check("nu_rescaled_in_delta", tol.poly, [&] {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<std::complex<double>, 4> z;
    for (auto& c : z) c = {gauss(rng), gauss(rng)};
    const SimplexPoint p = nu_p3(std::span<const std::complex<double>, 4>(z), tol);
    const auto s = slacks(2.0 * p.x, PolytopeTag::StdDelta);
    return residual_below(std::max(0.0, -*std::min_element(s.begin(), s.end())), tol.poly);
  });
}

// ---------------------------------------------------------------- tau

void tau_trial(long trial, const SuiteContext& ctx, Recorder& rec) {
  const Tolerances& tol = ctx.tol;
  Rng rng = make_rng(ctx.seed ^ 0x7a0ULL, static_cast<std::uint64_t>(trial));
  const Representation rho = interior_sample(ctx, trial);

  rec.check("involution", tol.mat, [&] {
    const Representation twice = tau(tau(rho, tol), tol);
    Outcome out = residual_below(class_residual(twice, rho), tol.mat);
    out.pass = out.pass && class_equal(twice, rho, tol);
    return out;
  });

  rec.check("preserves_mu_lambda", 100.0 * tol.f, [&] {
    const Vec3 d = mu_lambda(tau(rho, tol), tol).x - mu_lambda(rho, tol).x;
    return residual_below(d.cwiseAbs().maxCoeff(), 100.0 * tol.f);
  });

  rec.check("reverses_action", tol.mat, [&] {
    const TorusElement t = random_torus_element(rng);
    const Representation lhs = tau(act(t, rho, tol), tol);
    const Representation rhs = act(-t, tau(rho, tol), tol);
    Outcome out = residual_below(class_residual(lhs, rhs), tol.mat);
    out.pass = out.pass && class_equal(lhs, rhs, tol);
    return out;
  });

  rec.check("fixed_classes", tol.mat, [&] {
    // tau fixes t . s(x) iff 2t lies in the kernel: t in {0, pi}^3 or
    // {pi/2, 3pi/2}^3. Alternate between such t and generic t.
    const Vec3 x = random_interior_base(rng);
    const Representation s = section(x, tol);
    const bool fixed = trial % 2 == 0;
    TorusElement t;
    if (fixed) {
      const double offset = uniform(rng) < 0.5 ? 0.0 : kPi / 2.0;
      auto pick = [&] { return offset + (uniform(rng) < 0.5 ? 0.0 : kPi); };
      const double t1 = pick(), t2 = pick(), t3 = pick();
      t = TorusElement(t1, t2, t3);
    } else {
      do {
        t = random_torus_element(rng);
      } while ((t + t).distance_to_kernel() < 1e-2);
    }
    const Representation p = act(t, s, tol).conjugated(haar_sample(rng));
    const Representation image = tau(p, tol);
    const bool equal = class_equal(image, p, tol);
    Outcome out = residual_below(fixed ? class_residual(image, p) : 0.0, tol.mat);
    out.pass = equal == fixed;
    if (!out.pass) out.detail = fixed ? "half-period class moved by tau" : "generic class fixed by tau";
    return out;
  });
}

// ---------------------------------------------------------------- sigma

void sigma_trial(long trial, const SuiteContext& ctx, Recorder& rec) {
  const Tolerances& tol = ctx.tol;
  Rng rng = make_rng(ctx.seed ^ 0x5167aULL, static_cast<std::uint64_t>(trial));
  const Representation rho = interior_sample(ctx, trial);
  const GroupElement g = haar_sample(rng), h = haar_sample(rng);

  rec.check("relation_preserved", tol.rel, [&] { return residual_below(relation_residual(sigma(rho)), tol.rel); });
  rec.check("involution", 0.0, [&] { return holds(sigma(sigma(rho)) == rho); });
  rec.check("descends_to_classes", tol.mat, [&] {
    const Representation other = rho.conjugated(haar_sample(rng));
    return holds(class_equal(sigma(rho), sigma(other), tol));
  });
  rec.check("generic_not_fixed", 0.0, [&] { return holds(!sigma_fixed_conjugator(rho, tol).has_value()); });

  rec.check("pillow_fixed", tol.mat, [&] {
    const Representation p = pillow_point(g, h);
    const SigmaFixedPoint fp = classify_fixed_point(p, tol);
    return holds(sigma(p) == p && fp.stratum == Stratum::I && fp.piece == Piece::PillowInterior,
                 std::string("classified ") + to_string(fp.piece));
  });

  rec.check("blowup_fixed", tol.mat, [&] {
    const GroupElement k = blowup_partner(g, h, tol);
    const Representation b = blowup_point(g, h, k, tol);
    const auto found = sigma_fixed_conjugator(b, tol);
    if (!found) return holds(false, "no sigma conjugator");
    const double residual = b.conjugated(*found).distance(sigma(b));
    const SigmaFixedPoint fp = classify_fixed_point(b, tol);
    Outcome out = residual_below(residual, tol.mat);
    out.pass = out.pass && fp.stratum == Stratum::I && fp.piece == Piece::BlowupInterior &&
               relation_residual(b) < tol.rel;
    return out;
  });

  rec.check("blowup_partner_unique", tol.mat, [&] {
    // Trace-zero elements commuting with C = [g, h]: the stabilizer of C is
    // the circle through 1 and C/|C|, which meets the trace-zero sphere in
    // exactly two antipodal points.
    const GroupElement c = commutator(g, h);
    const std::array<GroupElement, 1> cs{c};
    const auto basis = conjugator_space(cs, cs, tol);
    if (basis.size() != 2) return holds(false, "stabilizer of [g, h] is not a circle");
    const Eigen::Vector4d w = basis[0][0] * basis[1] - basis[1][0] * basis[0];
    const GroupElement k = GroupElement::from_quaternion(w[0], w[1], w[2], w[3]);
    const GroupElement partner = blowup_partner(g, h, tol);
    return residual_below(std::min(k.distance(partner), k.distance(-partner)), tol.mat);
  });

  rec.check("rp2_identification", tol.mat, [&] {
    const GroupElement k1 = trace_zero(rng), k2 = trace_zero(rng);
    const Representation p = rp2_fiber_point(k1, tol);
    const bool same = class_equal(p, rp2_fiber_point(-k1, tol), tol);
    const bool apart = std::min(k1.distance(k2), k1.distance(-k2)) < 1e-3 ||
                       !class_equal(p, rp2_fiber_point(k2, tol), tol);
    const SigmaFixedPoint fp = classify_fixed_point(p, tol);
    return holds(same && apart && fp.piece == Piece::RP2Fiber && fp.stratum == Stratum::I,
                 same ? (apart ? "misclassified" : "distinct fiber points identified") : "k and -k differ");
  });

  rec.check("interval_certificate", tol.mat, [&] {
    const double theta = uniform(rng, 0.1, kPi - 0.1), s = uniform(rng, 0.1, kPi - 0.1);
    const IntervalReport r = certify_interval_injectivity(theta, s, 10, tol);
    Outcome out = residual_below(r.max_residual, tol.mat);
    out.pass = out.pass && r.ok();
    if (!r.violations.empty()) out.detail = r.violations.front();
    return out;
  });

  rec.check("stratum_matches_axes", 0.0, [&] {
    const double theta = uniform(rng, 0.1, kPi - 0.1), s = uniform(rng, 0.1, kPi - 0.1);
    const double alpha = trial % 3 == 0 ? 0.0 : (trial % 3 == 1 ? kPi / 2.0 : uniform(rng, 0.05, kPi / 2.0 - 0.05));
    const Representation p = n2_interval(theta, s, alpha, tol).conjugated(haar_sample(rng));
    // Brute force: do the four slots share one axis?
    const auto xs = p.elements();
    const Vec3 axis = xs[0].vec().normalized();
    bool shared = true;
    for (const auto& x : xs) shared = shared && x.vec().cross(axis).norm() < tol.mat;
    const SigmaFixedPoint fp = classify_fixed_point(p, tol);
    return holds((fp.stratum == Stratum::II) == shared,
                 std::string("stratum ") + to_string(fp.stratum) + (shared ? " on a shared axis" : " off axis"));
  });

  if (trial == 0) {
    rec.check("canonical_point", tol.mat, [&] {
      const GroupElement e3 = GroupElement::diagonal(kPi / 2.0);
      const GroupElement j = GroupElement::from_quaternion(0.0, -1.0, 0.0, 0.0);
      const Representation p = pillow_point(e3, j);
      const double phi = goldman_phi(p).cwiseAbs().maxCoeff();
      const double comm = commutator(e3, j).distance(GroupElement::minus_identity());
      return residual_below(std::max(phi, comm), tol.mat);
    });
    rec.check("central_vertices", 0.0, [&] {
      bool ok = true;
      for (const auto& a : {GroupElement::identity(), GroupElement::minus_identity()}) {
        for (const auto& b : {GroupElement::identity(), GroupElement::minus_identity()}) {
          const SigmaFixedPoint fp = classify_fixed_point(pillow_point(a, b), tol);
          ok = ok && fp.stratum == Stratum::III && fp.piece == Piece::CentralVertex;
        }
      }
      return holds(ok);
    });
  }
}

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  std::uint64_t salt;
};

constexpr SuiteEntry kSuites[] = {
    {"flows", flows_trial, 0x1},
    {"polytope", polytope_trial, 0x2},
    {"tau", tau_trial, 0x3},
    {"sigma", sigma_trial, 0x4},
};

Stats run_suite(const SuiteEntry& suite, long samples, const VerifyOptions& options) {
  const SuiteContext ctx{splitmix64(options.seed ^ splitmix64(suite.salt)), options.tol};
  const int jobs = static_cast<int>(std::min<long>(options.jobs, samples));
  std::vector<Stats> partial(static_cast<std::size_t>(jobs));
  std::atomic<long> next{0};
  constexpr long kChunk = 16;

  auto worker = [&](int w) {
    const std::string name = suite.name;
    Stats& stats = partial[static_cast<std::size_t>(w)];
    for (;;) {
      const long begin = next.fetch_add(kChunk);
      if (begin >= samples) break;
      const long end = std::min(samples, begin + kChunk);
      for (long i = begin; i < end; ++i) {
        Recorder rec(name, i, stats);
        suite.fn(i, ctx, rec);
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }

  Stats merged;
  for (const auto& p : partial) {
    for (const auto& [key, stat] : p) merged[key].merge(stat);
  }
  return merged;
}

Json tolerance_json(const Tolerances& t) {
  Json j = Json::object();
  j["norm"] = t.norm;
  j["mat"] = t.mat;
  j["alg"] = t.alg;
  j["f"] = t.f;
  j["center"] = t.center;
  j["rel"] = t.rel;
  j["poly"] = t.poly;
  return j;
}

}  // namespace

void InvariantStat::merge(const InvariantStat& other) {
  trials += other.trials;
  failures += other.failures;
  max_residual = std::max(max_residual, other.max_residual);
  threshold = std::max(threshold, other.threshold);
  if (other.min_margin) min_margin = min_margin ? std::min(*min_margin, *other.min_margin) : *other.min_margin;
  // Keep the earliest failing trial so merged reports are independent of sharding.
  if (other.first_failure_trial >= 0 &&
      (first_failure_trial < 0 || other.first_failure_trial < first_failure_trial)) {
    first_failure_trial = other.first_failure_trial;
    first_failure = other.first_failure;
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flows", "polytope", "tau", "sigma"};
  return names;
}

bool is_suite_name(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (!is_suite_name(options.suite)) throw PreconditionViolated("unknown suite " + options.suite);
  if (options.samples < 1) throw PreconditionViolated("verify needs at least one sample");
  if (options.jobs < 1) throw PreconditionViolated("verify needs at least one job");

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.jobs = options.jobs;
  report.tol = options.tol;

  for (const auto& suite : kSuites) {
    if (options.suite != "all" && options.suite != suite.name) continue;
    const Stats stats = run_suite(suite, options.samples, options);
    report.trials += options.samples;
    for (const auto& [key, stat] : stats) {
      report.failures += stat.failures;
      report.invariants[key] = stat;
    }
    if (std::string(suite.name) == "polytope") report.notes.emplace_back(kNuNormalizationNote);
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json VerifyReport::to_json() const {
  Json j = Json::object();
  j["suite"] = suite;
  j["trials"] = trials;
  j["failures"] = failures;
  j["seed"] = seed;
  j["jobs"] = jobs;
  j["wall_time_s"] = wall_seconds;
  j["tolerances"] = tolerance_json(tol);
  Json inv = Json::object();
  for (const auto& [key, s] : invariants) {
    Json e = Json::object();
    e["trials"] = s.trials;
    e["failures"] = s.failures;
    e["max_residual"] = s.max_residual;
    e["threshold"] = s.threshold;
    if (s.min_margin) e["min_margin"] = *s.min_margin;
    if (s.first_failure_trial >= 0) {
      e["first_failure_trial"] = s.first_failure_trial;
      e["first_failure"] = s.first_failure;
    }
    inv[key] = e;
  }
  j["invariants"] = inv;
  j["notes"] = notes;
  return j;
}

}  // namespace genus2
