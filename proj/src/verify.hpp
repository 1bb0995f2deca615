#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace g2forge {

/// One named verification check. The tolerance is the pass threshold baked
/// into the suite (0 means the comparison is exact); `measured` is the worst
/// residual actually observed, so failures are diagnosable from the report.
struct CheckResult {
  std::string name;
  int criterion = 0;  // 1..10 grouping for the acceptance gate
  std::string description;
  double tolerance = 0.0;
  double measured = 0.0;
  bool passed = false;
  std::string details;
};

struct VerifyOptions {
  std::optional<double> tol_override;  // replaces residual thresholds when set
  std::uint64_t seed = 20698;
  bool float_mode = false;  // run the exact-value checks in binary64
  int threads = 0;
  std::string only;  // run just the check with this name ("" = all)
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }

  /// First failing check name, empty when everything passed.
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.name;
    return {};
  }

  OrderedJson to_json() const;
  std::string to_table() const;

  /// One pass/fail line per criterion group (the acceptance gate view).
  std::string criterion_lines() const;
};

/// Runs the full verification suite against the built-in instances,
/// randomized oracles and the flow, with every threshold pinned here.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace g2forge
