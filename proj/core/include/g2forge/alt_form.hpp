// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Alternating k-forms on an oriented orthonormal 7-frame, stored sparsely as
// maps from increasing multi-indices to exact scalars.  Provides the wedge
// and interior products, the Hodge star, and full index contractions -- the
// complete exterior-algebra kernel the geometry layers are built on.
//
// Conventions (fixed throughout the project):
//   * the coefficient of a monomial is its evaluation on frame vectors:
//     alpha = sum_{i1<...<ik} alpha_{i1...ik} e_{i1...ik} with
//     alpha_{i1...ik} = alpha(e_{i1},...,e_{ik});
//   * full_contract(alpha,beta) = sum over ALL ordered index tuples of
//     alpha_{i1...ik} beta_{i1...ik} = k! * (form inner product);
//   * the volume form is e1234567 and *1 = e1234567, ** = id in all degrees.

#pragma once

#include <array>
#include <map>
#include <vector>

#include "g2forge/multi_index.hpp"
#include "g2forge/scalar.hpp"

namespace g2forge {

// A vector (equivalently, via the identity metric, a 1-form) with exact
// components.  Component access is 1-based to match index notation.
class Vector {
 public:
  Vector() = default;

  Scalar& operator()(int i) { return comp_.at(i - 1); }
  const Scalar& operator()(int i) const { return comp_.at(i - 1); }

  bool is_zero() const {
    for (const auto& c : comp_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Vector& a, const Vector& b) { return a.comp_ == b.comp_; }

 private:
  std::array<Scalar, kDim> comp_{};
};

class AltForm {
 public:
  explicit AltForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw InputError("form degree outside 0..7");
  }

  static AltForm monomial(int degree, MultiIndex idx, Scalar coeff = Scalar(1)) {
    AltForm f(degree);
    f.add_term(idx, std::move(coeff));
    return f;
  }
  static AltForm zero(int degree) { return AltForm(degree); }
  static AltForm volume() { return monomial(kDim, MultiIndex{1, 2, 3, 4, 5, 6, 7}); }
  static AltForm scalar_form(Scalar value) {
    AltForm f(0);
    f.add_term(MultiIndex(), std::move(value));
    return f;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t term_count() const { return coeffs_.size(); }

  // Coefficient on an increasing multi-index (zero when absent).
  Scalar coefficient(MultiIndex idx) const {
    const auto it = coeffs_.find(idx);
    return it == coeffs_.end() ? Scalar(0) : it->second;
  }

  // Adds c to the coefficient of idx, dropping the entry if it cancels.
  void add_term(MultiIndex idx, Scalar c);

  // Component with general (not necessarily increasing) indices, evaluated
  // with the sign of the sorting permutation; repeated indices give zero.
  // This is alpha(e_{i1},...,e_{ik}).
  Scalar component(std::vector<int> indices) const;

  const std::map<MultiIndex, Scalar>& terms() const { return coeffs_; }

  AltForm operator-() const;
  AltForm& operator+=(const AltForm& o);
  AltForm& operator-=(const AltForm& o);
  AltForm& operator*=(const Scalar& s);

  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(AltForm a, const Scalar& s) { return a *= s; }
  friend AltForm operator*(const Scalar& s, AltForm a) { return a *= s; }

  friend bool operator==(const AltForm& a, const AltForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const AltForm& a, const AltForm& b) { return !(a == b); }

  // Sum over the sparse support of coefficient^2; exactly zero iff the form
  // is zero, and equal to full_contract(f,f)/k! for a k-form.
  Scalar coefficient_norm_sq() const;

  std::string str() const;  // e.g. "e123 + e456" with scalar coefficients

 private:
  int degree_;
  std::map<MultiIndex, Scalar> coeffs_;
};

// Exterior product.  Degrees must satisfy k + l <= 7.
AltForm wedge(const AltForm& a, const AltForm& b);

// Interior product e_j -| alpha (contraction with a frame vector in the
// first slot) and its extension X -| alpha by linearity.  Degree must be
// at least 1.
AltForm interior(int j, const AltForm& alpha);
AltForm interior(const Vector& x, const AltForm& alpha);

// Hodge star on the oriented orthonormal frame; an involution in dim 7.
AltForm hodge(const AltForm& alpha);

// Full index contraction over all ordered tuples: k! * (form inner product).
// Degrees must agree.
Scalar full_contract(const AltForm& a, const AltForm& b);

// Form inner product <a,b> = full_contract(a,b)/k!, the one satisfying
// a ^ *b = <a,b> vol.
Scalar form_inner(const AltForm& a, const AltForm& b);

// Conversions between degree-1 forms and vectors (identity metric).
Vector to_vector(const AltForm& one_form);
AltForm to_one_form(const Vector& v);

// Coefficient of the volume monomial of a 7-form (zero for the zero form).
Scalar volume_coefficient(const AltForm& seven_form);

}  // namespace g2forge
