// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Small dense exact tensors on the 7-frame (1-based indices throughout).
// Used wherever identity verification sweeps all index tuples: curvature
// R_{ijkl}, connection coefficients Gamma_{ijk}, Ricci matrices, and dense
// mirrors of alternating forms for contraction-heavy loops.

#pragma once

#include <array>

#include "g2forge/alt_form.hpp"
#include "g2forge/scalar.hpp"

namespace g2forge {

class Mat7 {
 public:
  Scalar& operator()(int i, int j) { return a_.at(ofs(i, j)); }
  const Scalar& operator()(int i, int j) const { return a_.at(ofs(i, j)); }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  Scalar trace() const {
    Scalar t(0);
    for (int i = 1; i <= kDim; ++i) t += (*this)(i, i);
    return t;
  }
  Scalar norm_sq() const {
    Scalar t(0);
    for (const auto& x : a_) t += x * x;
    return t;
  }
  friend bool operator==(const Mat7& a, const Mat7& b) { return a.a_ == b.a_; }
  friend Mat7 operator+(const Mat7& a, const Mat7& b) {
    Mat7 out;
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
    return out;
  }
  friend Mat7 operator-(const Mat7& a, const Mat7& b) {
    Mat7 out;
    for (std::size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
  }
  friend Mat7 operator*(const Scalar& s, const Mat7& m) {
    Mat7 out;
    for (std::size_t i = 0; i < m.a_.size(); ++i) out.a_[i] = s * m.a_[i];
    return out;
  }

 private:
  static std::size_t ofs(int i, int j) { return static_cast<std::size_t>(i - 1) * kDim + (j - 1); }
  std::array<Scalar, kDim * kDim> a_{};
};

class Ten3 {
 public:
  Scalar& operator()(int i, int j, int k) { return a_.at(ofs(i, j, k)); }
  const Scalar& operator()(int i, int j, int k) const { return a_.at(ofs(i, j, k)); }
  bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  Scalar norm_sq() const {
    Scalar t(0);
    for (const auto& x : a_) t += x * x;
    return t;
  }

 private:
  static std::size_t ofs(int i, int j, int k) {
    return (static_cast<std::size_t>(i - 1) * kDim + (j - 1)) * kDim + (k - 1);
  }
  std::array<Scalar, kDim * kDim * kDim> a_{};
};

class Ten4 {
 public:
  Scalar& operator()(int i, int j, int k, int l) { return a_.at(ofs(i, j, k, l)); }
  const Scalar& operator()(int i, int j, int k, int l) const { return a_.at(ofs(i, j, k, l)); }
  bool is_zero() const {
    for (const auto& x : a_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }
  Scalar norm_sq() const {
    Scalar t(0);
    for (const auto& x : a_) t += x * x;
    return t;
  }

 private:
  static std::size_t ofs(int i, int j, int k, int l) {
    return ((static_cast<std::size_t>(i - 1) * kDim + (j - 1)) * kDim + (k - 1)) * kDim + (l - 1);
  }
  std::array<Scalar, kDim * kDim * kDim * kDim> a_{};
};

// Dense mirrors of alternating forms: t(i,j,k) = alpha(e_i,e_j,e_k) etc.
// Contraction loops over all tuples read these instead of re-sorting indices.
Ten3 dense3(const AltForm& alpha);
Ten4 dense4(const AltForm& alpha);
Mat7 dense2(const AltForm& alpha);

}  // namespace g2forge
