// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Deterministic report rendering.  A report is assembled once as an ordered
// document and rendered to JSON or markdown; identical inputs and options
// produce byte-identical text.  In exact mode every residual is printed as
// an exact scalar string and passes iff it is zero; in floating mode the
// residuals (squared norms) are printed as doubles and pass iff they are
// <= the tolerance.  All non-residual data is exact in both modes.

#pragma once

#include <string>

#include "g2forge/structure_io.hpp"

namespace g2forge {

enum class ReportMode { exact, floating };
enum class ReportFormat { json, markdown };

struct ReportOptions {
  ReportMode mode = ReportMode::exact;
  double tol = 0.0;  // floating mode only; must be >= 0
  ReportFormat format = ReportFormat::json;
};

struct AnalysisResult {
  std::string text;  // rendered report, newline terminated
  bool pass = false;
};

// Full analysis: first-order data, classification, the characteristic
// connection and its invariants, the identity battery, the Lee-form soliton
// (when the torsion is closed), the parallel-field implication, the
// Schrodinger-operator potential, and the bi-G2 check when the document
// requests it.  Non-integrable structures yield a report with the defect
// and pass = false.
AnalysisResult analyze_structure(const StructureSpec& spec, const ReportOptions& opt);

// The identity battery alone, one entry per identity.  Throws
// NotIntegrableError when the structure has no characteristic connection.
AnalysisResult battery_report(const StructureSpec& spec, const ReportOptions& opt);

// One line per catalog entry: name, torsion classes, Lee form, type constant.
std::string catalog_listing(ReportFormat format);

}  // namespace g2forge
