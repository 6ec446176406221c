// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/structure_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace g2forge {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

// A coefficient is either a JSON integer or a string in the scalar grammar.
// Floating-point literals are rejected: they cannot represent the exact
// values this tool computes with.
Scalar parse_coefficient(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
  if (v.is_number()) {
    fail(where, "non-integer numeric literal; write an exact string such as \"1/2\" or \"sqrt2/2\"");
  }
  if (v.is_string()) {
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or an exact scalar string");
}

int parse_index(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected a frame index (integer 1..7)");
  const long long k = v.get<long long>();
  if (k < 1 || k > kDim) {
    fail(where, "frame index " + std::to_string(k) + " out of range 1.." + std::to_string(kDim));
  }
  return static_cast<int>(k);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (allowed.find(key) == allowed.end()) fail(where + "/" + key, "unknown key");
  }
}

std::vector<BracketTerm> parse_brackets(const json& arr) {
  if (!arr.is_array()) fail("/brackets", "expected an array of bracket terms");
  std::vector<BracketTerm> terms;
  terms.reserve(arr.size());
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string where = "/brackets/" + std::to_string(n);
    const json& t = arr[n];
    if (!t.is_object()) fail(where, "expected an object {i, j, k, c}");
    reject_unknown_keys(t, {"i", "j", "k", "c"}, where);
    for (const char* key : {"i", "j", "k", "c"}) {
      if (!t.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
    }
    BracketTerm term;
    term.i = parse_index(t["i"], where + "/i");
    term.j = parse_index(t["j"], where + "/j");
    term.k = parse_index(t["k"], where + "/k");
    term.coeff = parse_coefficient(t["c"], where + "/c");
    if (term.i >= term.j) {
      fail(where, "bracket indices must satisfy i < j (got i = " + std::to_string(term.i) +
                      ", j = " + std::to_string(term.j) + ")");
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

AltForm parse_phi(const json& arr) {
  if (!arr.is_array()) fail("/phi", "expected an array of 3-form terms");
  if (arr.empty()) fail("/phi", "a G2 form cannot be zero; omit the key for the default form");
  AltForm phi = AltForm::zero(3);
  for (std::size_t n = 0; n < arr.size(); ++n) {
    const std::string where = "/phi/" + std::to_string(n);
    const json& t = arr[n];
    if (!t.is_object()) fail(where, "expected an object {idx, c}");
    reject_unknown_keys(t, {"idx", "c"}, where);
    for (const char* key : {"idx", "c"}) {
      if (!t.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
    }
    const json& idx = t["idx"];
    if (!idx.is_array() || idx.size() != 3) fail(where + "/idx", "expected three frame indices");
    int a = parse_index(idx[0], where + "/idx/0");
    int b = parse_index(idx[1], where + "/idx/1");
    int c = parse_index(idx[2], where + "/idx/2");
    if (!(a < b && b < c)) fail(where + "/idx", "indices must be strictly increasing");
    const MultiIndex mi({a, b, c});
    if (!phi.coefficient(mi).is_zero()) fail(where + "/idx", "duplicate index triple");
    phi.add_term(mi, parse_coefficient(t["c"], where + "/c"));
  }
  return phi;
}

}  // namespace

StructureSpec parse_structure(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("/", "expected a JSON object");
  reject_unknown_keys(doc, {"name", "dimension", "brackets", "phi", "bi_g2_with_opposite"}, "");

  if (!doc.contains("name") || !doc["name"].is_string() || doc["name"].get<std::string>().empty()) {
    fail("/name", "a non-empty string name is required");
  }
  if (doc.contains("dimension") &&
      (!doc["dimension"].is_number_integer() || doc["dimension"].get<int>() != kDim)) {
    fail("/dimension", "only dimension 7 is supported");
  }
  if (!doc.contains("brackets")) fail("/brackets", "required (may be an empty array)");

  std::vector<BracketTerm> terms = parse_brackets(doc["brackets"]);
  LieAlgebra algebra = [&]() {
    try {
      return LieAlgebra(terms);
    } catch (const InputError& e) {
      throw InputError(std::string("/brackets: ") + e.what());
    }
  }();

  AltForm phi = doc.contains("phi") ? parse_phi(doc["phi"]) : G2FormData::standard().phi();
  try {
    (void)G2FormData::from_phi(phi);
  } catch (const InputError& e) {
    throw InputError(std::string("/phi: ") + e.what());
  }

  bool bi = false;
  if (doc.contains("bi_g2_with_opposite")) {
    if (!doc["bi_g2_with_opposite"].is_boolean()) fail("/bi_g2_with_opposite", "expected a boolean");
    bi = doc["bi_g2_with_opposite"].get<bool>();
  }

  return StructureSpec{doc["name"].get<std::string>(), std::move(algebra), std::move(phi), bi};
}

StructureSpec load_structure(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open structure file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("read failure on structure file: " + path);
  return parse_structure(buf.str());
}

}  // namespace g2forge
