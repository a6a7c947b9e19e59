#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steenrod/partition.hpp"

namespace steenrod {

/// A request against the check registry. Unspecified parameters range over
/// the check's documented default grid.
struct CheckRequest {
  std::string check_id;
  std::optional<u32> p;
  std::optional<i64> n;
  std::optional<i64> b;
  std::optional<i64> r;
  std::optional<i64> u;
  std::optional<i64> v;
  std::optional<Partition> lambda;
  i64 max_ds = 400;  // per-check degree bound, overridable
  /// Golden fixture: canonical serialization the check's computed value must
  /// match exactly. Requires parameters that pin a single instance.
  std::optional<std::string> expected;
};

enum class CheckStatus { Pass, Fail, Skip, Conjecture };

std::string to_string(CheckStatus s);

struct CheckReport {
  std::string check_id;
  std::string params;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // skip reason, conjecture outcome, instance counts
  std::string lhs;     // serialized values on failure
  std::string rhs;
  double wall_ms = 0.0;
};

const std::vector<std::string>& registry_ids();
bool is_registered(const std::string& check_id);

/// Runs one registry check; one report per parameter instance (or one
/// aggregated report for grid-style checks).
std::vector<CheckReport> run_check(const CheckRequest& request);

/// Runs the registry over the default grid, in registry order. An empty
/// filter means all checks.
std::vector<CheckReport> run_suite(const std::vector<std::string>& filter = {},
                                   std::optional<u32> p = std::nullopt);

/// Runs the requests listed in a params file (JSON: {"schema": 1, "checks":
/// [{"check": id, "p": .., "lambda": "a,b,c", "expected": "...", ...}]}),
/// in file order. Malformed input is a usage error.
std::vector<CheckReport> run_params_file(const std::string& json_text);

/// Deterministic JSON ("schema": 1). Timings are excluded so that reports
/// are byte-identical across runs.
std::string reports_to_json(const std::vector<CheckReport>& reports);

/// 0 if no check failed, 1 otherwise. Skip and conjecture statuses do not
/// affect the exit code.
int exit_code_for(const std::vector<CheckReport>& reports);

}  // namespace steenrod
