// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// catalog_data.inc is generated from the files in catalog/ by
// tools/regen_catalog.py; keep the two in sync -- the unit tests compare
// them byte for byte.

#include "g2forge/catalog.hpp"

#include <string>

namespace g2forge {

namespace {

#include "catalog_data.inc"

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries(std::begin(kEntries), std::end(kEntries));
  return entries;
}

const CatalogEntry& catalog_lookup(std::string_view name) {
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  std::string msg = "no catalog entry named \"" + std::string(name) + "\"; available:";
  for (const CatalogEntry& e : catalog_entries()) msg += " " + std::string(e.name);
  throw InputError(msg);
}

StructureSpec catalog_structure(std::string_view name) {
  return parse_structure(std::string(catalog_lookup(name).json_text));
}

}  // namespace g2forge
