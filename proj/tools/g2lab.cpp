// g2lab: sampling, flows, involutions and verification suites for the
// SU(2) character variety of the genus-2 surface.
//
// Exit codes: 0 success, 1 verification failures, 2 flag or input errors,
// 3 solve failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genus2/errors.hpp"
#include "genus2/flows.hpp"
#include "genus2/io.hpp"
#include "genus2/moment.hpp"
#include "genus2/sampler.hpp"
#include "genus2/sigma.hpp"
#include "genus2/tau.hpp"
#include "genus2/verify.hpp"

namespace {

using namespace genus2;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolve = 3;

struct Common {
  double tol = kDefaultTolerances.mat;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string in = "-";
  std::string out = "-";

  [[nodiscard]] Tolerances tolerances() const { return kDefaultTolerances.scaled(tol / kDefaultTolerances.mat); }
};

// Output sink: a file, or stdout for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ParseError("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<RepresentationRecord> read_input(const std::string& path) {
  if (path == "-") return read_jsonl(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_jsonl(in);
}

Json moment_columns(const Representation& rho, const Tolerances& tol) {
  Json j = Json::object();
  const SimplexPoint mu = moment_mu(rho, tol);
  j["mu"] = to_json(mu);
  j["mu_lambda"] = to_json(mu_lambda_from_mu(mu.x, tol));
  return j;
}

Json merged(Json base, const Json& more) {
  for (const auto& [k, v] : more.items()) base[k] = v;
  return base;
}

// ------------------------------------------------------------------ sample

struct SampleArgs {
  int count = 1;
  std::string target = "interior";
  std::vector<double> base;
  bool conjugate = false;
};

int cmd_sample(const Common& c, const SampleArgs& a) {
  const Tolerances tol = c.tolerances();
  SampleSpec spec;
  spec.count = a.count;
  spec.seed = c.seed;
  spec.conjugate = a.conjugate;
  const auto target = parse_sample_target(a.target);
  if (!target || *target == SampleTarget::FixedBase) throw ParseError("unknown target " + a.target);
  spec.target = *target;
  if (!a.base.empty()) {
    if (spec.target != SampleTarget::InteriorUniformBase) throw ParseError("--base applies to --target interior");
    spec.target = SampleTarget::FixedBase;
    spec.base = Vec3(a.base[0], a.base[1], a.base[2]);
  }
  validate(spec, tol);

  Sink sink(c.out);
  for (int i = 0; i < spec.count; ++i) {
    const Representation rho = sample_one(spec, static_cast<std::uint64_t>(i), tol);
    Json extra = Json::object();
    extra["index"] = i;
    extra["target"] = to_string(spec.target);
    sink.stream() << jsonl_line(rho, merged(extra, moment_columns(rho, tol))) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ flow

int cmd_flow(const Common& c, const std::vector<double>& t) {
  const Tolerances tol = c.tolerances();
  const TorusElement element(t[0], t[1], t[2]);
  Sink sink(c.out);
  for (const auto& rec : read_input(c.in)) {
    // The zero element acts trivially, including on the boundary where
    // the generators are undefined.
    const bool trivial = t[0] == 0.0 && t[1] == 0.0 && t[2] == 0.0;
    const Representation moved = trivial ? rec.rep : act(element, rec.rep, tol);
    Json extra = rec.extra;
    extra.erase("residual");
    extra["t"] = Json::array({t[0], t[1], t[2]});
    sink.stream() << jsonl_line(moved, merged(extra, moment_columns(moved, tol))) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ moment

int cmd_moment(const Common& c) {
  const Tolerances tol = c.tolerances();
  const auto records = read_input(c.in);
  Sink sink(c.out);
  sink.stream() << moment_csv_header() << '\n';
  std::size_t index = 0;
  for (const auto& rec : records) sink.stream() << moment_csv_row(index++, rec.rep, tol) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ tau

int cmd_tau(const Common& c, bool check) {
  const Tolerances tol = c.tolerances();
  Sink sink(c.out);
  int failures = 0;
  for (const auto& rec : read_input(c.in)) {
    const Representation image = tau(rec.rep, tol);
    Json extra = rec.extra;
    extra.erase("residual");
    extra["input_residual"] = relation_residual(rec.rep);
    extra["mu_lambda_before"] = to_json(mu_lambda(rec.rep, tol));
    if (check) {
      const bool back = class_equal(tau(image, tol), rec.rep, tol);
      extra["tau_twice_class_equal"] = back;
      if (!back) ++failures;
    }
    sink.stream() << jsonl_line(image, merged(extra, moment_columns(image, tol))) << '\n';
  }
  return failures == 0 ? kExitOk : kExitFailures;
}

// ------------------------------------------------------------------ fixed points

Representation fixed_point_sample(const std::string& piece, int index, Rng& rng, const Tolerances& tol) {
  static const char* const kCycle[] = {"pillow", "blowup", "rp2", "interval"};
  const std::string kind = piece == "all" ? kCycle[index % 4] : piece;
  if (kind == "pillow") return pillow_point(haar_sample(rng), haar_sample(rng));
  if (kind == "blowup") {
    const GroupElement g = haar_sample(rng), h = haar_sample(rng);
    return blowup_point(g, h, blowup_partner(g, h, tol), tol);
  }
  if (kind == "rp2") return rp2_fiber_point(GroupElement::from_quaternion(0.0, haar_sample(rng).vec()), tol);
  if (kind == "interval") {
    constexpr double pi = std::numbers::pi;
    const double theta = uniform(rng, 0.1, pi - 0.1), s = uniform(rng, 0.1, pi - 0.1);
    return n2_interval(theta, s, uniform(rng, 0.0, pi / 2.0), tol);
  }
  throw ParseError("unknown piece " + piece);
}

int cmd_fixed_points(const Common& c, int count, const std::string& piece, bool conjugate) {
  const Tolerances tol = c.tolerances();
  Sink sink(c.out);
  for (int i = 0; i < count; ++i) {
    Rng rng = make_rng(c.seed, static_cast<std::uint64_t>(i));
    Representation rho = fixed_point_sample(piece, i, rng, tol);
    if (conjugate) rho = rho.conjugated(haar_sample(rng));
    const SigmaFixedPoint fp = classify_fixed_point(rho, tol);
    Json extra = Json::object();
    extra["index"] = i;
    extra["stratum"] = to_string(fp.stratum);
    extra["piece"] = to_string(fp.piece);
    extra["conjugator"] = to_json(fp.conjugator);
    extra["conjugator_residual"] = rho.conjugated(fp.conjugator).distance(sigma(rho));
    sink.stream() << jsonl_line(rho, merged(extra, moment_columns(rho, tol))) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int emit_report(const VerifyReport& report, const std::string& out) {
  Sink sink(out);
  sink.stream() << report.to_json().dump(2) << '\n';
  return report.ok() ? kExitOk : kExitFailures;
}

int cmd_verify(const Common& c, const std::string& suite, long samples) {
  if (!is_suite_name(suite)) throw ParseError("unknown suite " + suite);
  VerifyOptions o;
  o.suite = suite;
  o.samples = samples;
  o.seed = c.seed;
  o.tol = c.tolerances();
  o.jobs = c.jobs;
  return emit_report(run_verify(o), c.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2lab: SU(2) representations of the genus-2 surface group"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; flags override it");

  Common common;
  auto add_common = [&](CLI::App* sub, bool io) {
    sub->add_option("--tol", common.tol, "base matrix tolerance; every threshold scales by tol/1e-9")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", common.seed, "master seed");
    if (io) {
      sub->add_option("--in", common.in, "input JSONL (- for stdin)");
    }
    sub->add_option("--out", common.out, "output file (- for stdout)");
  };

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "draw representations as JSONL");
  add_common(sample, false);
  sample->add_option("--count", sample_args.count, "number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--target", sample_args.target, "interior|face|edge|vertex|abelian")
      ->check(CLI::IsMember({"interior", "face", "edge", "vertex", "abelian"}));
  sample->add_option("--base", sample_args.base, "fixed interior base point x1,x2,x3")
      ->delimiter(',')
      ->expected(3);
  sample->add_flag("--conjugate", sample_args.conjugate, "apply a random global conjugation");

  std::vector<double> flow_t{0.0, 0.0, 0.0};
  auto* flow = app.add_subcommand("flow", "apply a torus element to every input line");
  add_common(flow, true);
  flow->add_option("--t", flow_t, "torus angles t1,t2,t3")->delimiter(',')->expected(3)->required();

  auto* moment = app.add_subcommand("moment", "CSV of moment coordinates for every input line");
  add_common(moment, true);

  bool tau_check = false;
  auto* tau_cmd = app.add_subcommand("tau", "apply the involution tau to every input line");
  add_common(tau_cmd, true);
  tau_cmd->add_flag("--check", tau_check, "verify tau twice returns the input class");

  int fp_count = 10;
  std::string fp_piece = "all";
  bool fp_conjugate = false;
  auto* fixed = app.add_subcommand("fixed-points", "sample sigma-fixed points with stratum and piece tags");
  add_common(fixed, false);
  fixed->add_option("--count", fp_count, "number of points")->check(CLI::PositiveNumber);
  fixed->add_option("--piece", fp_piece, "pillow|blowup|rp2|interval|all")
      ->check(CLI::IsMember({"pillow", "blowup", "rp2", "interval", "all"}));
  fixed->add_flag("--conjugate", fp_conjugate, "apply a random global conjugation");

  long certify_samples = 100;
  auto* certify = app.add_subcommand("certify-sigma", "run the sigma fixed-set certification suite");
  add_common(certify, false);
  certify->add_option("--samples", certify_samples, "trials")->check(CLI::PositiveNumber);
  certify->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);

  std::string suite = "all";
  long verify_samples = 1000;
  auto* verify = app.add_subcommand("verify", "run property suites and print a JSON report");
  add_common(verify, false);
  verify->add_option("--suite", suite, "all|flows|polytope|tau|sigma");
  verify->add_option("--samples", verify_samples, "trials per suite")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sample) return cmd_sample(common, sample_args);
    if (*flow) return cmd_flow(common, flow_t);
    if (*moment) return cmd_moment(common);
    if (*tau_cmd) return cmd_tau(common, tau_check);
    if (*fixed) return cmd_fixed_points(common, fp_count, fp_piece, fp_conjugate);
    if (*certify) return cmd_verify(common, "sigma", certify_samples);
    if (*verify) return cmd_verify(common, suite, verify_samples);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "g2lab: %s\n", e.what());
    return kExitUsage;
  } catch (const PreconditionViolated& e) {
    std::fprintf(stderr, "g2lab: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "g2lab: %s\n", e.what());
    return kExitSolve;
  }
  return kExitUsage;
}
