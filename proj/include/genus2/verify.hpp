#pragma once

// Seeded property suites behind `g2lab verify`. Trial i of a suite draws its
// randomness from make_rng(suite seed, i), so reports do not depend on the
// number of worker threads.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus2/io.hpp"
#include "genus2/tolerances.hpp"

namespace genus2 {

struct InvariantStat {
  long trials = 0;
  long failures = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  // For lower-bound checks (freeness, strict interiority): the smallest
  // observed margin. Unset for pure residual checks.
  std::optional<double> min_margin;
  long first_failure_trial = -1;
  std::string first_failure;

  void merge(const InvariantStat& other);
};

struct VerifyOptions {
  std::string suite = "all";  // all | flows | polytope | tau | sigma
  long samples = 1000;
  std::uint64_t seed = 0;
  Tolerances tol = kDefaultTolerances;
  int jobs = 1;
};

struct VerifyReport {
  std::string suite;
  long trials = 0;
  long failures = 0;
  std::map<std::string, InvariantStat> invariants;  // keyed "suite.invariant"
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  int jobs = 1;
  Tolerances tol;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const { return failures == 0; }
  [[nodiscard]] Json to_json() const;
};

const std::vector<std::string>& suite_names();  // flows, polytope, tau, sigma
bool is_suite_name(const std::string& name);   // also accepts "all"

// Throws PreconditionViolated for an unknown suite, samples < 1 or jobs < 1.
VerifyReport run_verify(const VerifyOptions& options);

// Wording of the note the polytope suite attaches about the normalization of
// the reference moment map on CP^3.
extern const char* const kNuNormalizationNote;

}  // namespace genus2
