// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Exact dense linear algebra over Q(sqrt2): just enough Gaussian elimination
// to certify ranks of the representation-theoretic maps (projector images,
// the 4-form injectivity map).

#pragma once

#include <vector>

#include "g2forge/scalar.hpp"

namespace g2forge {

// Row-major exact matrix; rank by fraction-free-ish Gaussian elimination
// (exact division in the field, no pivoting subtleties: any nonzero pivot
// is exact).
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  Scalar& operator()(std::size_t r, std::size_t c) { return a_.at(r * cols_ + c); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_.at(r * cols_ + c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Rank over Q(sqrt2); destroys a working copy, the matrix is untouched.
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace g2forge
