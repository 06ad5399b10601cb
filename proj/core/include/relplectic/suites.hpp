#pragma once

#include "relplectic/report.hpp"

namespace relp {

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Built-in fixtures (polynomial structures and group presets) plus any
/// *.json files found in RELPLECTIC_FIXTURE_DIR.
std::vector<std::string> fixture_names();

/// Run a named verification suite.  Polynomial fixtures pair with the
/// "exact" backend, group presets with "float".  Unknown suites, unknown
/// fixtures and backend mismatches throw std::invalid_argument; failed
/// numerical preconditions are reported in the returned record set.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace relp
