// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// JSON input format for structures.  A structure document is an object:
//
//   {
//     "name": "su2su2u1_phi0",
//     "dimension": 7,                               // optional, must be 7
//     "brackets": [ {"i": 1, "j": 2, "k": 3, "c": -1}, ... ],
//     "phi": [ {"idx": [1, 4, 7], "c": 1}, ... ],   // optional; default phi
//     "bi_g2_with_opposite": true                   // optional; default false
//   }
//
// brackets lists [e_i, e_j] = sum_k c * e_k with i < j; omitted pairs
// commute.  Coefficients are exact: JSON integers or strings accepted by
// the scalar parser, e.g. "1/2", "sqrt2/2", "-3/2+1/2*sqrt2".  "phi" gives
// the 3-form in strictly increasing index triples; when omitted the
// standard G2 form is used.  Unknown keys are rejected.  All validation
// failures throw InputError with a JSON-pointer-style location.

#pragma once

#include <string>
#include <string_view>

#include "g2forge/g2core.hpp"
#include "g2forge/liegeom.hpp"

namespace g2forge {

// A parsed and fully validated structure document: the algebra satisfies
// Jacobi and the 3-form induces the identity frame metric.
struct StructureSpec {
  std::string name;
  LieAlgebra algebra;
  AltForm phi;
  bool bi_g2_with_opposite = false;
};

// Parse a JSON document.  Throws InputError on malformed JSON, schema
// violations, Jacobi failures, or a 3-form that is not a G2 form for the
// orthonormal frame.
StructureSpec parse_structure(const std::string& json_text);

// Read the file and parse it.  IO failures throw InputError naming the path.
StructureSpec load_structure(const std::string& path);

}  // namespace g2forge
