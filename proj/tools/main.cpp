// Command-line front end: run verification suites against builtin or
// user-supplied fixtures and emit JSON or markdown reports.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "relplectic/report.hpp"
#include "relplectic/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"relplectic: verification suites for relative multisymplectic structures"};
  app.require_subcommand(1);

  relp::SuiteConfig cfg;
  std::string format = "json";
  std::string out_path;

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "Suite name (see list-suites)")->required();
  verify->add_option("--fixture", cfg.fixture, "Fixture preset name or file path")
      ->required();
  verify->add_option("--samples", cfg.samples, "Random instances per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  verify->add_option("--tol", cfg.tol, "Pass/fail residual tolerance");
  verify->add_option("--backend", cfg.backend, "Arithmetic backend")
      ->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--report", format, "Report format")
      ->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--out", out_path, "Write the report to a file instead of stdout");

  CLI::App* ls = app.add_subcommand("list-suites", "List available suite names");
  CLI::App* lf = app.add_subcommand("list-fixtures", "List available fixtures");

  CLI11_PARSE(app, argc, argv);

  if (ls->parsed()) {
    for (const auto& s : relp::suite_names()) std::cout << s << "\n";
    return 0;
  }
  if (lf->parsed()) {
    for (const auto& f : relp::fixture_names()) std::cout << f << "\n";
    return 0;
  }

  try {
    const relp::SuiteReport report = relp::run_suite(cfg);
    const std::string text = relp::emit(report, format == "md" ? "markdown" : "json");
    if (out_path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      out << text << "\n";
    }
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
