// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/linalg.hpp"

namespace g2forge {

std::size_t ExactMatrix::rank() const {
  std::vector<Scalar> m = a_;
  const auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return m[r * cols_ + c]; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    // Find a pivot in this column at or below `rank`.
    std::size_t pivot = rank;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const Scalar inv = at(rank, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) at(rank, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || at(r, col).is_zero()) continue;
      const Scalar factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) at(r, c) -= factor * at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace g2forge
