// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/report.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "g2forge/catalog.hpp"
#include "g2forge/solitons.hpp"
#include "g2forge/torsion_connection.hpp"
#include "json.hpp"

namespace g2forge {

namespace {

using nlohmann::ordered_json;

bool entry_passes(const LedgerEntry& e, const ReportOptions& o) {
  if (o.mode == ReportMode::exact) return e.pass;
  return e.residual_sq.to_double() <= o.tol;
}

ordered_json residual_value(const Scalar& r, const ReportOptions& o) {
  if (o.mode == ReportMode::exact) return ordered_json(r.str());
  return ordered_json(r.to_double());
}

// Renders a ledger and folds its (mode-aware) verdict into `overall`.
ordered_json ledger_json(const IdentityLedger& led, const ReportOptions& o, bool& overall) {
  ordered_json entries = ordered_json::array();
  bool all = true;
  for (const LedgerEntry& e : led.entries) {
    const bool pass = entry_passes(e, o);
    all = all && pass;
    ordered_json row;
    row["name"] = e.name;
    row["residual_sq"] = residual_value(e.residual_sq, o);
    row["pass"] = pass;
    if (!e.note.empty()) row["note"] = e.note;
    entries.push_back(std::move(row));
  }
  overall = overall && all;
  ordered_json out;
  out["entries"] = std::move(entries);
  out["all_pass"] = all;
  return out;
}

ordered_json algebra_json(const InvariantCalculus& calc) {
  ordered_json out;
  out["dimension"] = kDim;
  out["unimodular"] = calc.algebra().is_unimodular();
  ordered_json eqs = ordered_json::array();
  for (int m = 1; m <= kDim; ++m) {
    eqs.push_back("de" + std::to_string(m) + " = " + calc.structure_two_form(m).str());
  }
  out["structure_equations"] = std::move(eqs);
  return out;
}

ordered_json g2_json(const G2Structure& s) {
  ordered_json out;
  out["phi"] = s.phi().str();
  out["psi"] = s.psi().str();
  out["dphi"] = s.dphi().str();
  out["dpsi"] = s.dpsi().str();
  out["lee_form"] = s.lee_form().str();
  out["type_constant"] = s.type_constant().str();
  out["integrability_defect"] = s.integrability_defect().str();
  out["integrable"] = s.is_integrable();
  ordered_json classes = ordered_json::array();
  for (const std::string& label : s.classify().labels()) classes.push_back(label);
  out["classes"] = std::move(classes);
  return out;
}

ordered_json connection_json(const ConnectionGeometry& g) {
  ordered_json out;
  out["torsion"] = g.torsion.str();
  out["torsion_norm_sq"] = g.torsion_norm_sq.str();
  out["dT"] = g.dT.str();
  out["closed_torsion"] = g.dT.is_zero();
  out["deltaT"] = g.deltaT.str();
  out["scalar_curvature"] = g.scalar.str();
  out["riemannian_scalar_curvature"] = g.scalar_lc.str();
  out["flat"] = g.curv.is_zero();
  out["ricci_zero"] = g.ricci.is_zero();
  return out;
}

std::string render_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string primitive_md(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_object_array(const ordered_json& v) {
  return v.is_array() && !v.empty() && v.front().is_object();
}

std::string escape_md_cell(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

void render_md_table(std::ostream& os, const ordered_json& rows) {
  // Column order: keys in order of first appearance across all rows.
  std::vector<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [key, value] : row.items()) {
      (void)value;
      bool seen = false;
      for (const std::string& c : cols) seen = seen || (c == key);
      if (!seen) cols.push_back(key);
    }
  }
  os << "|";
  for (const std::string& c : cols) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : rows) {
    os << "|";
    for (const std::string& c : cols) {
      os << " ";
      if (row.contains(c)) os << escape_md_cell(primitive_md(row[c]));
      os << " |";
    }
    os << "\n";
  }
}

void render_md_section_item(std::ostream& os, const std::string& key, const ordered_json& v,
                            bool first_in_section) {
  if (is_object_array(v)) {
    if (!first_in_section) os << "\n";
    render_md_table(os, v);
    return;
  }
  if (v.is_array()) {
    os << "- " << key << ":";
    if (v.empty()) os << " (none)";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : " ") << primitive_md(v[i]);
    os << "\n";
    return;
  }
  os << "- " << key << ": " << primitive_md(v) << "\n";
}

std::string render_markdown(const std::string& title, const ordered_json& doc) {
  std::ostringstream os;
  os << "# " << title << "\n\n";
  bool in_bullets = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "name") continue;
    if (value.is_object()) {
      if (in_bullets) os << "\n";
      in_bullets = false;
      os << "## " << key << "\n\n";
      bool first = true;
      for (const auto& [k, v] : value.items()) {
        render_md_section_item(os, k, v, first);
        first = false;
      }
      os << "\n";
    } else {
      render_md_section_item(os, key, value, false);
      in_bullets = true;
    }
  }
  std::string text = os.str();
  while (text.size() >= 2 && text[text.size() - 1] == '\n' && text[text.size() - 2] == '\n') {
    text.pop_back();
  }
  return text;
}

std::string render(const std::string& title, const ordered_json& doc, const ReportOptions& o) {
  if (o.format == ReportFormat::json) return render_json(doc);
  return render_markdown(title, doc);
}

void add_mode(ordered_json& doc, const ReportOptions& o) {
  doc["mode"] = o.mode == ReportMode::exact ? "exact" : "float";
  if (o.mode == ReportMode::floating) doc["tolerance"] = o.tol;
}

}  // namespace

AnalysisResult analyze_structure(const StructureSpec& spec, const ReportOptions& opt) {
  const G2Structure s(spec.algebra, spec.phi);

  ordered_json doc;
  doc["name"] = spec.name;
  add_mode(doc, opt);
  doc["algebra"] = algebra_json(s.calculus());
  doc["g2_structure"] = g2_json(s);

  bool overall = s.is_integrable();
  if (s.is_integrable()) {
    const ConnectionGeometry geom = characteristic_connection(s);
    doc["characteristic_connection"] = connection_json(geom);

    const SchrodingerPotential pot = schrodinger_potential(s);
    {
      ordered_json sec;
      sec["from_riemannian"] = pot.from_riemannian.str();
      sec["from_torsion"] = pot.from_torsion.str();
      const Scalar diff = pot.from_riemannian - pot.from_torsion;
      IdentityLedger led;
      led.add("schrodinger_consistency", diff * diff,
              "Riemannian and torsion expressions for the potential agree");
      sec["residual_sq"] = residual_value(led.entries.front().residual_sq, opt);
      const bool consistent = entry_passes(led.entries.front(), opt);
      sec["consistent"] = consistent;
      overall = overall && consistent;
      doc["schrodinger_potential"] = std::move(sec);
    }

    doc["identity_battery"] = ledger_json(identity_battery(s), opt, overall);

    if (geom.dT.is_zero()) {
      const LeeSolitonResult sol = soliton_from_lee(s);
      ordered_json sec;
      sec["applicable"] = true;
      sec["x"] = to_one_form(sol.data.x).str();
      sec["b"] = sol.data.b.str();
      bool sol_pass = true;
      const ordered_json led = ledger_json(sol.ledger, opt, sol_pass);
      sec["is_soliton"] = sol_pass;
      sec["entries"] = led["entries"];
      overall = overall && sol_pass;
      doc["lee_soliton"] = std::move(sec);
    } else {
      ordered_json sec;
      sec["applicable"] = false;
      sec["reason"] = "the torsion is not closed";
      doc["lee_soliton"] = std::move(sec);
    }

    {
      const ParallelFieldReport rep = parallel_field_check(s, Vector());
      ordered_json sec;
      sec["v"] = to_one_form(rep.v).str();
      sec["v_parallel"] = rep.v_parallel;
      bool rep_pass = true;
      const ordered_json led = ledger_json(rep.ledger, opt, rep_pass);
      sec["implication_holds"] = rep_pass;
      if (!rep.corollary_note.empty()) sec["note"] = rep.corollary_note;
      sec["entries"] = led["entries"];
      overall = overall && rep_pass;
      doc["parallel_field"] = std::move(sec);
    }

    if (spec.bi_g2_with_opposite) {
      const BiG2Report rep = bi_g2_check(bi_g2_from_opposite(spec.algebra, spec.phi));
      ordered_json sec;
      bool rep_pass = true;
      const ordered_json led = ledger_json(rep.ledger, opt, rep_pass);
      sec["is_bi_g2"] = rep_pass;
      sec["entries"] = led["entries"];
      overall = overall && rep_pass;
      doc["bi_g2"] = std::move(sec);
    }
  }

  doc["verdict"] = overall ? "pass" : "fail";
  return AnalysisResult{render("g2forge analysis: " + spec.name, doc, opt), overall};
}

AnalysisResult battery_report(const StructureSpec& spec, const ReportOptions& opt) {
  const G2Structure s(spec.algebra, spec.phi);
  const IdentityLedger led = identity_battery(s);  // throws NotIntegrableError

  ordered_json doc;
  doc["name"] = spec.name;
  add_mode(doc, opt);
  bool overall = true;
  doc["identity_battery"] = ledger_json(led, opt, overall);
  doc["verdict"] = overall ? "pass" : "fail";
  return AnalysisResult{render("g2forge identity battery: " + spec.name, doc, opt), overall};
}

std::string catalog_listing(ReportFormat format) {
  ordered_json rows = ordered_json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    const StructureSpec spec = catalog_structure(e.name);
    const G2Structure s(spec.algebra, spec.phi);
    ordered_json row;
    row["name"] = std::string(e.name);
    ordered_json classes = ordered_json::array();
    for (const std::string& label : s.classify().labels()) classes.push_back(label);
    row["classes"] = std::move(classes);
    row["lee_form"] = s.lee_form().str();
    row["type_constant"] = s.type_constant().str();
    row["bi_g2_with_opposite"] = spec.bi_g2_with_opposite;
    rows.push_back(std::move(row));
  }
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["catalog"] = std::move(rows);
    return render_json(doc);
  }
  std::ostringstream os;
  os << "# g2forge catalog\n\n";
  // The classes column is a list; flatten it for the table.
  for (auto& row : rows) {
    std::string flat;
    for (const auto& c : row["classes"]) flat += (flat.empty() ? "" : ", ") + c.get<std::string>();
    row["classes"] = flat.empty() ? "(none)" : flat;
  }
  render_md_table(os, rows);
  return os.str();
}

}  // namespace g2forge
