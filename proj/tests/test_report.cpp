#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "relplectic/report.hpp"
#include "relplectic/suites.hpp"

using namespace relp;

TEST_CASE("suite and fixture registries") {
  const auto suites = suite_names();
  for (const char* s : {"cartan", "qham-axioms", "gen-jacobi", "lie2-axioms", "leibniz",
                        "quasi-iso", "atiyah", "courant", "morphism"})
    CHECK(std::count(suites.begin(), suites.end(), s) == 1);
  const auto fixtures = fixture_names();
  for (const char* f : {"poly-n3", "poly-n3-degenerate", "poly-r4-r3", "conj-su2",
                        "conj-so3", "double-su2", "double-so3"})
    CHECK(std::count(fixtures.begin(), fixtures.end(), f) == 1);
}

TEST_CASE("configuration validation") {
  SuiteConfig cfg;
  cfg.suite = "no-such-suite";
  cfg.fixture = "poly-n3";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.suite = "cartan";
  cfg.samples = 0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.samples = 5;
  cfg.backend = "float";  // poly fixture on the float backend
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.backend = "exact";
  cfg.fixture = "conj-su2";  // group fixture on the exact backend
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.fixture = "no-such-fixture";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.fixture = "poly-n3";
  cfg.backend = "simd";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("precondition failures are reported, not thrown") {
  SuiteConfig cfg;
  cfg.suite = "quasi-iso";
  cfg.fixture = "poly-r4-r3";
  cfg.samples = 3;
  const SuiteReport r = run_suite(cfg);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].check_id == "precondition");
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("identical configs give byte-identical JSON modulo wall time") {
  SuiteConfig cfg;
  cfg.suite = "gen-jacobi";
  cfg.fixture = "poly-n3";
  cfg.samples = 8;
  cfg.seed = 99;
  SuiteReport a = run_suite(cfg);
  SuiteReport b = run_suite(cfg);
  a.wall_time_ms = 0;
  b.wall_time_ms = 0;
  CHECK(emit(a, "json") == emit(b, "json"));
}

TEST_CASE("JSON round trip preserves every field") {
  SuiteReport r;
  r.suite = "cartan";
  r.fixture = "poly-n3";
  r.backend = "exact";
  r.seed = 42;
  r.samples = 7;
  r.tol = 1e-9;
  r.wall_time_ms = 12.5;
  r.note = "sample note";
  r.checks = {{"a", "first identity", 0.0, true}, {"b", "second identity", 2.5, false}};
  const SuiteReport back = report_from_json(emit(r, "json"));
  CHECK(emit(back, "json") == emit(r, "json"));
  CHECK_FALSE(back.all_pass());
}

TEST_CASE("empty report is valid JSON with an empty checks array") {
  SuiteReport r;
  r.suite = "cartan";
  const std::string text = emit(r, "json");
  CHECK(text.find("\"checks\": []") != std::string::npos);
  CHECK(text.find("\"schema\": \"v1\"") != std::string::npos);
  CHECK(report_from_json(text).checks.empty());
  CHECK(r.all_pass());  // vacuously
}

TEST_CASE("markdown has one table row per check") {
  SuiteConfig cfg;
  cfg.suite = "leibniz";
  cfg.fixture = "poly-n3";
  cfg.samples = 3;
  const SuiteReport r = run_suite(cfg);
  const std::string md = emit(r, "markdown");
  std::istringstream in(md);
  std::string line;
  size_t rows = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.rfind("| ---", 0) == 0 || line.rfind("|---", 0) == 0) {
      saw_header = true;
      continue;
    }
    if (saw_header && line.rfind("|", 0) == 0) ++rows;
  }
  CHECK(rows == r.checks.size());
  for (const auto& c : r.checks) CHECK(md.find(c.identity) != std::string::npos);
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(report_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("{\"schema\":\"v0\"}"), std::invalid_argument);
}
