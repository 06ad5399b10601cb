#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relp {

/// One verified identity: a stable id, a human-readable statement of the
/// identity, and the worst residual observed.
struct CheckRecord {
  std::string check_id;
  std::string identity;
  double max_residual = 0;
  bool pass = false;
};

struct SuiteConfig {
  std::string suite;
  std::string fixture;
  int samples = 50;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string backend = "exact";  // "exact" (polynomial) or "float" (group)
};

struct SuiteReport {
  std::string suite;
  std::string fixture;
  std::string backend;
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0;
  double wall_time_ms = 0;
  std::string note;  // resolved conventions, precondition failures
  std::vector<CheckRecord> checks;

  bool all_pass() const;
};

/// Serialize a report; format is "json" (schema version "v1") or "md".
std::string emit(const SuiteReport& r, const std::string& format);

/// Inverse of emit(r, "json"); throws std::invalid_argument on bad input.
SuiteReport report_from_json(const std::string& text);

}  // namespace relp
