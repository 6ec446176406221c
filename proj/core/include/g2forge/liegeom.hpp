// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// Seven-dimensional Lie algebras with an orthonormal invariant frame, and the
// invariant tensor calculus on them: the Chevalley-Eilenberg differential,
// the codifferential for the frame metric, and Lie derivatives of invariant
// forms and of the metric.

#pragma once

#include <array>
#include <vector>

#include "g2forge/alt_form.hpp"
#include "g2forge/tensor.hpp"

namespace g2forge {

// One term of a bracket table: [e_i, e_j] += coeff * e_k, with i < j.
struct BracketTerm {
  int i = 0;
  int j = 0;
  int k = 0;
  Scalar coeff;
};

// A 7-dimensional real Lie algebra given by structure constants on the frame
// e_1..e_7, which is declared orthonormal.  Construction validates index
// ranges and the Jacobi identity (with the offending indices in the error).
class LieAlgebra {
 public:
  explicit LieAlgebra(const std::vector<BracketTerm>& brackets);

  // Coefficient of e_k in [e_i, e_j].
  const Scalar& c(int i, int j, int k) const { return c_.at(index(i, j, k)); }

  Vector bracket(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  // tr(ad_X) = 0 for every X; equivalently sum_i c(j,i,i) = 0 for every j.
  // The codifferential is adjoint to the differential exactly on this class.
  bool is_unimodular() const;

  // The algebra with negated brackets; the structure constants of the frame
  // made right-invariant instead of left-invariant.  An involution.
  LieAlgebra opposite() const;

 private:
  LieAlgebra() = default;
  static std::size_t index(int i, int j, int k);
  void validate() const;  // Jacobi; throws InputError naming the indices

  std::array<Scalar, kDim * kDim * kDim> c_{};
};

// Invariant exterior calculus for a fixed algebra.  Degrees are those of the
// identity frame metric; the volume form is e1234567.
class InvariantCalculus {
 public:
  explicit InvariantCalculus(LieAlgebra algebra);

  const LieAlgebra& algebra() const { return algebra_; }

  // de_m as a 2-form: d alpha (X,Y) = -alpha([X,Y]).
  const AltForm& structure_two_form(int m) const { return de_.at(static_cast<std::size_t>(m - 1)); }

  // Chevalley-Eilenberg differential, extended as an antiderivation; zero on
  // 0-forms.  Squares to zero precisely because Jacobi was validated.
  AltForm ce_differential(const AltForm& alpha) const;

  // Codifferential of the frame metric: (-1)^p * d * on p-forms (dimension
  // 7), equal to minus the divergence of the Levi-Civita derivative on every
  // algebra, and adjoint to d exactly when the algebra is unimodular.
  AltForm codifferential(const AltForm& alpha) const;

  // Lie derivative of an invariant form along an invariant field:
  // (L_V alpha)(e_{j1},..,e_{jk}) = -sum_t alpha(.., [V, e_{jt}], ..).
  AltForm lie_derivative(const Vector& v, const AltForm& alpha) const;

  // Lie derivative of the frame metric: (L_V g)_ij = -([V,e_i])_j - ([V,e_j])_i.
  Mat7 lie_derivative_metric(const Vector& v) const;

 private:
  LieAlgebra algebra_;
  std::vector<AltForm> de_;
};

}  // namespace g2forge
