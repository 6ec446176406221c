// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// The built-in structure catalog: a fixed set of named structure documents
// embedded in the library, mirrored one-to-one by the JSON files shipped in
// catalog/.  Entries parse with parse_structure and analyze deterministically.

#pragma once

#include <string_view>
#include <vector>

#include "g2forge/structure_io.hpp"

namespace g2forge {

struct CatalogEntry {
  std::string_view name;
  std::string_view json_text;  // byte-identical to catalog/<name>.json
};

// All entries, in a fixed documented order.
const std::vector<CatalogEntry>& catalog_entries();

// Lookup by name; throws InputError listing the valid names when absent.
const CatalogEntry& catalog_lookup(std::string_view name);

// Parse the named entry.
StructureSpec catalog_structure(std::string_view name);

}  // namespace g2forge
