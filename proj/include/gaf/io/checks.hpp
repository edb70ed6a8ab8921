#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gaf/io/descriptors.hpp"
#include "gaf/perm.hpp"

namespace gaf::io {

inline constexpr unsigned kDefaultSeed = 20170613;

struct RunOptions {
  double tolerance = 1e-9;
  std::size_t cap = perm::kDefaultCap;
  unsigned seed = kDefaultSeed;
  int word_len = 6;
  int jobs = 1;
  bool timings = false;
  std::string fault;                // check id whose generator is corrupted
  std::vector<std::string> only;    // check id prefixes; empty runs everything
};

enum class Status { PASS, FAIL, SKIPPED };
std::string to_string(Status s);

struct CheckContext {
  double tolerance = 1e-9;
  std::size_t cap = perm::kDefaultCap;
  unsigned seed = kDefaultSeed;
  int word_len = 6;
  bool corrupt = false;
  std::string id;

  /// Generator seeded from the run seed and the check id.
  std::mt19937 rng() const;
};

/// pass = false must come with details["counterexample"].
struct Outcome {
  bool pass = true;
  Json details = Json::object();
};

struct Check {
  std::string id;
  std::string anchor;
  bool corruptible = false;
  std::function<Outcome(const CheckContext&)> run;
};

struct CheckResult {
  std::string check_id;
  std::string anchor;
  Status status = Status::PASS;
  Json details = Json::object();
  double elapsed_ms = 0;
};

/// Every registered check, sorted by id.
const std::vector<Check>& checks();

/// Gaf errors other than CAP_EXCEEDED become FAIL entries; CAP_EXCEEDED becomes SKIPPED.
CheckResult run_check(const Check& c, const RunOptions& opt);

/// Runs the selected checks on up to opt.jobs threads; results sorted by id.
/// Throws UNKNOWN_CHECK or NOT_CORRUPTIBLE for a bad fault target, NO_CHECKS when the filter selects nothing.
std::vector<CheckResult> run_checks(const RunOptions& opt);

}  // namespace gaf::io
