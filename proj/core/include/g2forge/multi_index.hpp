// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Strictly increasing multi-indices over {1,...,7}, stored as 7-bit masks.
// These key the sparse coefficient maps of alternating forms.  All the sign
// bookkeeping of the exterior algebra (wedge merge signs, interior-product
// position signs, Hodge complement signs) lives here as small exact helpers.

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2forge/scalar.hpp"

namespace g2forge {

inline constexpr int kDim = 7;

class MultiIndex {
 public:
  MultiIndex() : mask_(0) {}
  explicit MultiIndex(std::uint8_t mask) : mask_(mask) {
    if (mask_ & ~0x7Fu) throw InputError("multi-index out of range");
  }
  MultiIndex(std::initializer_list<int> indices) : mask_(0) {
    int prev = 0;
    for (int i : indices) {
      if (i < 1 || i > kDim) throw InputError("index outside 1..7");
      if (i <= prev) throw InputError("multi-index not strictly increasing");
      mask_ |= static_cast<std::uint8_t>(1u << (i - 1));
      prev = i;
    }
  }
  static MultiIndex from_sorted(const std::vector<int>& indices) {
    std::uint8_t m = 0;
    int prev = 0;
    for (int i : indices) {
      if (i < 1 || i > kDim) throw InputError("index outside 1..7");
      if (i <= prev) throw InputError("multi-index not strictly increasing");
      m |= static_cast<std::uint8_t>(1u << (i - 1));
      prev = i;
    }
    return MultiIndex(m);
  }

  std::uint8_t mask() const { return mask_; }
  int degree() const { return std::popcount(mask_); }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  bool disjoint(MultiIndex o) const { return (mask_ & o.mask_) == 0; }

  // The increasing index tuple, e.g. {1,3,7}.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(degree());
    for (int i = 1; i <= kDim; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  MultiIndex complement() const { return MultiIndex(static_cast<std::uint8_t>(~mask_ & 0x7Fu)); }

  // Union of disjoint multi-indices (the monomial of a wedge product).
  MultiIndex unite(MultiIndex o) const {
    return MultiIndex(static_cast<std::uint8_t>(mask_ | o.mask_));
  }
  // Removal of one contained index.
  MultiIndex erase(int i) const {
    return MultiIndex(static_cast<std::uint8_t>(mask_ & ~(1u << (i - 1))));
  }

  // Sign (+1/-1) of the shuffle that sorts the concatenation (this, o) of two
  // disjoint increasing tuples: (-1)^{#inversions}.
  int merge_sign(MultiIndex o) const {
    int inversions = 0;
    for (int i = 1; i <= kDim; ++i) {
      if (!o.contains(i)) continue;
      // Count members of *this larger than i: each must hop over i.
      inversions += std::popcount(static_cast<unsigned>(mask_ >> i));
    }
    return (inversions % 2 == 0) ? 1 : -1;
  }

  // Sign of the permutation (this, complement) of (1..7); this is the Hodge
  // coefficient on an oriented orthonormal frame: *e_I = sign * e_{I^c}.
  int hodge_sign() const { return merge_sign(complement()); }

  // Sign picked up when index i (contained) is pulled to the front:
  // e_I = sign * e_i ^ e_{I \ i}.  Used by the interior product.
  int pull_front_sign(int i) const {
    const int before = std::popcount(static_cast<unsigned>(mask_ & ((1u << (i - 1)) - 1u)));
    return (before % 2 == 0) ? 1 : -1;
  }

  // Degree-then-lexicographic order on index tuples; total and stable, used
  // for map keys and for deterministic emission.
  friend bool operator<(MultiIndex a, MultiIndex b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 1; i <= kDim; ++i) {
      const bool ia = a.contains(i), ib = b.contains(i);
      if (ia != ib) return ia;  // the one containing the smaller index first
    }
    return false;
  }
  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  friend bool operator!=(MultiIndex a, MultiIndex b) { return a.mask_ != b.mask_; }

  // Name like "e134"; "1" for the empty index.
  std::string label() const {
    if (mask_ == 0) return "1";
    std::string out = "e";
    for (int i : indices()) out += static_cast<char>('0' + i);
    return out;
  }

 private:
  std::uint8_t mask_;
};

// All increasing multi-indices of the given degree, in canonical order.
std::vector<MultiIndex> all_multi_indices(int degree);

// Sign of the permutation sorting `indices` (duplicates give 0); fills
// `sorted` with the increasing result when nonzero.  The workhorse behind
// component evaluation of alternating forms.
int sort_sign(std::vector<int>& indices);

}  // namespace g2forge
