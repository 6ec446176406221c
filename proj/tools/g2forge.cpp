// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// g2forge command line interface.
//
//   g2forge analyze <file>  [--mode exact|float] [--tol E] [--format json|md]
//   g2forge battery <file>  [--mode exact|float] [--tol E] [--format json|md]
//   g2forge catalog list    [--format json|md]
//   g2forge catalog run <name> [--mode exact|float] [--tol E] [--format json|md]
//
// The default format is json, overridable by the G2FORGE_FORMAT environment
// variable ("json" or "md") and by --format.  Exit codes: 0 every check
// passed; 2 a verified identity failed or the structure is not integrable;
// 3 invalid input; 4 internal error.

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "g2forge/catalog.hpp"
#include "g2forge/report.hpp"
#include "g2forge/torsion_connection.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitInternalError = 4;

g2forge::ReportFormat parse_format(const std::string& text) {
  if (text == "json") return g2forge::ReportFormat::json;
  if (text == "md") return g2forge::ReportFormat::markdown;
  throw g2forge::InputError("unknown format \"" + text + "\"; expected json or md");
}

g2forge::ReportFormat default_format() {
  const char* env = std::getenv("G2FORGE_FORMAT");
  if (env == nullptr || *env == '\0') return g2forge::ReportFormat::json;
  return parse_format(env);
}

struct ModeFlags {
  std::string mode = "exact";
  double tol = 0.0;
  bool tol_given = false;
  std::string format;
};

void add_mode_options(CLI::App* cmd, ModeFlags& flags) {
  cmd->add_option("--mode", flags.mode, "Arithmetic for verdicts: exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--tol", flags.tol, "Residual tolerance (float mode only)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", flags.format, "Report format: json or md")
      ->check(CLI::IsMember({"json", "md"}));
}

g2forge::ReportOptions report_options(const CLI::App* cmd, const ModeFlags& flags) {
  g2forge::ReportOptions opt;
  opt.mode = flags.mode == "float" ? g2forge::ReportMode::floating : g2forge::ReportMode::exact;
  if (cmd->count("--tol") > 0 && opt.mode == g2forge::ReportMode::exact) {
    throw g2forge::InputError("--tol requires --mode float; exact mode accepts only zero residuals");
  }
  opt.tol = flags.tol;
  opt.format = flags.format.empty() ? default_format() : parse_format(flags.format);
  return opt;
}

int emit(const g2forge::AnalysisResult& result) {
  std::cout << result.text;
  return result.pass ? kExitPass : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact G2 structures with skew torsion on 7-dimensional Lie algebras"};
  app.require_subcommand(1);

  std::string analyze_path;
  ModeFlags analyze_flags;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a structure document");
  analyze->add_option("file", analyze_path, "Path to a structure JSON document")->required();
  add_mode_options(analyze, analyze_flags);

  std::string battery_path;
  ModeFlags battery_flags;
  CLI::App* battery = app.add_subcommand("battery", "Run the identity battery on a document");
  battery->add_option("file", battery_path, "Path to a structure JSON document")->required();
  add_mode_options(battery, battery_flags);

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in structure catalog");
  catalog->require_subcommand(1);
  std::string list_format;
  CLI::App* list = catalog->add_subcommand("list", "List the catalog entries");
  list->add_option("--format", list_format, "Report format: json or md")
      ->check(CLI::IsMember({"json", "md"}));
  std::string run_name;
  ModeFlags run_flags;
  CLI::App* run = catalog->add_subcommand("run", "Analyze a catalog entry");
  run->add_option("name", run_name, "Catalog entry name")->required();
  add_mode_options(run, run_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);  // prints the message to stderr
    return kExitInvalidInput;
  }

  try {
    if (*analyze) {
      return emit(g2forge::analyze_structure(g2forge::load_structure(analyze_path),
                                             report_options(analyze, analyze_flags)));
    }
    if (*battery) {
      return emit(g2forge::battery_report(g2forge::load_structure(battery_path),
                                          report_options(battery, battery_flags)));
    }
    if (*list) {
      const g2forge::ReportFormat fmt =
          list_format.empty() ? default_format() : parse_format(list_format);
      std::cout << g2forge::catalog_listing(fmt);
      return kExitPass;
    }
    if (*run) {
      return emit(g2forge::analyze_structure(g2forge::catalog_structure(run_name),
                                             report_options(run, run_flags)));
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitInvalidInput;
  } catch (const g2forge::NotIntegrableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIdentityFailure;
  } catch (const g2forge::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}
