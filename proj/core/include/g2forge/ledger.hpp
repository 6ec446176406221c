// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// The unit of verification output: a named list of residuals.  Each entry
// records the exact squared norm of a residual tensor together with a plain
// statement of the identity it came from.  In exact mode an entry passes iff
// the residual is exactly zero.

#pragma once

#include <string>
#include <vector>

#include "g2forge/scalar.hpp"

namespace g2forge {

struct LedgerEntry {
  std::string name;     // stable machine-readable identifier
  Scalar residual_sq;   // exact squared norm of the residual
  bool pass = false;    // residual_sq == 0 in exact mode
  std::string note;     // human-readable statement of the identity
};

struct IdentityLedger {
  std::vector<LedgerEntry> entries;

  void add(std::string name, Scalar residual_sq, std::string note) {
    const bool pass = residual_sq.is_zero();
    entries.push_back({std::move(name), std::move(residual_sq), pass, std::move(note)});
  }

  // Convenience for boolean conditions with no natural residual tensor.
  void add_flag(std::string name, bool pass, std::string note) {
    entries.push_back({std::move(name), pass ? Scalar(0) : Scalar(1), pass, std::move(note)});
  }

  void append(const IdentityLedger& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  bool all_pass() const {
    for (const auto& e : entries) {
      if (!e.pass) return false;
    }
    return true;
  }

  const LedgerEntry* find(const std::string& name) const {
    for (const auto& e : entries) {
      if (e.name == name) return &e;
    }
    return nullptr;
  }
};

}  // namespace g2forge
