#include "relplectic/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace relp {

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string emit_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "v1";
  j["suite"] = r.suite;
  j["fixture"] = r.fixture;
  j["backend"] = r.backend;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["tol"] = r.tol;
  j["wall_time_ms"] = r.wall_time_ms;
  j["note"] = r.note;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["check_id"] = c.check_id;
    cj["identity"] = c.identity;
    cj["max_residual"] = c.max_residual;
    cj["pass"] = c.pass;
    j["checks"].push_back(cj);
  }
  return j.dump(2);
}

std::string emit_markdown(const SuiteReport& r) {
  std::ostringstream out;
  out << "# Verification report: " << r.suite << " / " << r.fixture << "\n\n";
  out << "- backend: " << r.backend << "\n";
  out << "- seed: " << r.seed << ", samples: " << r.samples << ", tol: " << r.tol << "\n";
  out << "- wall time: " << r.wall_time_ms << " ms\n";
  if (!r.note.empty()) out << "- note: " << r.note << "\n";
  out << "\n| check | identity | max residual | pass |\n";
  out << "|---|---|---|---|\n";
  for (const auto& c : r.checks) {
    std::ostringstream res;
    res.precision(3);
    res << std::scientific << c.max_residual;
    out << "| " << c.check_id << " | " << c.identity << " | " << res.str() << " | "
        << (c.pass ? "yes" : "NO") << " |\n";
  }
  out << "\nresult: " << (r.all_pass() ? "all checks pass" : "FAILURES above") << "\n";
  return out.str();
}

}  // namespace

std::string emit(const SuiteReport& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "md" || format == "markdown") return emit_markdown(r);
  throw std::invalid_argument("unknown report format: " + format);
}

SuiteReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  if (j.value("schema", "") != "v1")
    throw std::invalid_argument("unsupported report schema");
  SuiteReport r;
  r.suite = j.value("suite", "");
  r.fixture = j.value("fixture", "");
  r.backend = j.value("backend", "");
  r.seed = j.value("seed", std::uint64_t{0});
  r.samples = j.value("samples", 0);
  r.tol = j.value("tol", 0.0);
  r.wall_time_ms = j.value("wall_time_ms", 0.0);
  r.note = j.value("note", "");
  for (const auto& cj : j.value("checks", nlohmann::json::array())) {
    CheckRecord c;
    c.check_id = cj.value("check_id", "");
    c.identity = cj.value("identity", "");
    c.max_residual = cj.value("max_residual", 0.0);
    c.pass = cj.value("pass", false);
    r.checks.push_back(c);
  }
  return r;
}

}  // namespace relp
