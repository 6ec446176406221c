// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/liegeom.hpp"

#include <string>
#include <utility>

namespace g2forge {

std::size_t LieAlgebra::index(int i, int j, int k) {
  return static_cast<std::size_t>(((i - 1) * kDim + (j - 1)) * kDim + (k - 1));
}

LieAlgebra::LieAlgebra(const std::vector<BracketTerm>& brackets) {
  for (const auto& t : brackets) {
    if (t.i < 1 || t.i > kDim || t.j < 1 || t.j > kDim || t.k < 1 || t.k > kDim) {
      throw InputError("bracket term [" + std::to_string(t.i) + "," + std::to_string(t.j) +
                       "] -> " + std::to_string(t.k) + " has an index outside 1..7");
    }
    if (t.i >= t.j) {
      throw InputError("bracket term [" + std::to_string(t.i) + "," + std::to_string(t.j) +
                       "] must have i < j (the table stores each pair once)");
    }
    c_.at(index(t.i, t.j, t.k)) += t.coeff;
    c_.at(index(t.j, t.i, t.k)) -= t.coeff;
  }
  validate();
}

void LieAlgebra::validate() const {
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      for (int k = j + 1; k <= kDim; ++k) {
        for (int m = 1; m <= kDim; ++m) {
          Scalar s(0);
          for (int p = 1; p <= kDim; ++p) {
            s += c(i, j, p) * c(p, k, m) + c(j, k, p) * c(p, i, m) + c(k, i, p) * c(p, j, m);
          }
          if (!s.is_zero()) {
            throw InputError("Jacobi identity fails on (e" + std::to_string(i) + ",e" +
                             std::to_string(j) + ",e" + std::to_string(k) + "): the e" +
                             std::to_string(m) + " component of the cyclic sum is " + s.str());
          }
        }
      }
    }
  }
}

Vector LieAlgebra::bracket(int i, int j) const {
  Vector out;
  for (int k = 1; k <= kDim; ++k) out(k) = c(i, j, k);
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      if (x(i).is_zero() || y(j).is_zero()) continue;
      const Scalar f = x(i) * y(j);
      for (int k = 1; k <= kDim; ++k) out(k) += f * c(i, j, k);
    }
  }
  return out;
}

bool LieAlgebra::is_unimodular() const {
  for (int j = 1; j <= kDim; ++j) {
    Scalar tr(0);
    for (int i = 1; i <= kDim; ++i) tr += c(j, i, i);
    if (!tr.is_zero()) return false;
  }
  return true;
}

LieAlgebra LieAlgebra::opposite() const {
  LieAlgebra out;
  for (std::size_t n = 0; n < out.c_.size(); ++n) out.c_[n] = -c_[n];
  // Negating brackets preserves Jacobi (each double bracket is quadratic),
  // so no revalidation is needed; keep it anyway as a cheap invariant.
  out.validate();
  return out;
}

InvariantCalculus::InvariantCalculus(LieAlgebra algebra) : algebra_(std::move(algebra)) {
  de_.reserve(kDim);
  for (int m = 1; m <= kDim; ++m) {
    // d alpha (X,Y) = -alpha([X,Y]) gives (de_m)(e_i,e_j) = -c(i,j,m).
    AltForm f(2);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = i + 1; j <= kDim; ++j) {
        f.add_term(MultiIndex::from_sorted({i, j}), -algebra_.c(i, j, m));
      }
    }
    de_.push_back(std::move(f));
  }
}

AltForm InvariantCalculus::ce_differential(const AltForm& alpha) const {
  const int k = alpha.degree();
  if (k == 0) return AltForm::zero(1);
  if (k == kDim) {
    throw InputError("the differential of a top-degree form is zero but has no degree-8 carrier");
  }
  AltForm out(k + 1);
  for (const auto& [idx, coeff] : alpha.terms()) {
    const auto indices = idx.indices();
    for (std::size_t t = 0; t < indices.size(); ++t) {
      const Scalar sign((t % 2 == 0) ? 1 : -1);
      const AltForm rest = AltForm::monomial(k - 1, idx.erase(indices[t]), sign * coeff);
      out += wedge(structure_two_form(indices[t]), rest);
    }
  }
  return out;
}

AltForm InvariantCalculus::codifferential(const AltForm& alpha) const {
  const int p = alpha.degree();
  if (p == 0) return AltForm::zero(0);
  AltForm out = hodge(ce_differential(hodge(alpha)));
  if (p % 2 != 0) out *= Scalar(-1);
  return out;
}

AltForm InvariantCalculus::lie_derivative(const Vector& v, const AltForm& alpha) const {
  const int k = alpha.degree();
  if (k == 0) return AltForm::zero(0);
  // [V, e_j] as a matrix column: ad_j(s) = ([V, e_j])_s.
  Mat7 ad;
  for (int j = 1; j <= kDim; ++j) {
    for (int s = 1; s <= kDim; ++s) {
      Scalar acc(0);
      for (int i = 1; i <= kDim; ++i) acc += v(i) * algebra_.c(i, j, s);
      ad(j, s) = std::move(acc);
    }
  }
  AltForm out(k);
  for (MultiIndex idx : all_multi_indices(k)) {
    const auto indices = idx.indices();
    Scalar comp(0);
    for (std::size_t t = 0; t < indices.size(); ++t) {
      std::vector<int> slot(indices.begin(), indices.end());
      for (int s = 1; s <= kDim; ++s) {
        if (ad(indices[t], s).is_zero()) continue;
        slot[t] = s;
        comp -= ad(indices[t], s) * alpha.component(slot);
      }
    }
    out.add_term(idx, std::move(comp));
  }
  return out;
}

Mat7 InvariantCalculus::lie_derivative_metric(const Vector& v) const {
  Mat7 out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      Scalar s(0);
      for (int a = 1; a <= kDim; ++a) {
        s -= v(a) * (algebra_.c(a, i, j) + algebra_.c(a, j, i));
      }
      out(i, j) = std::move(s);
    }
  }
  return out;
}

}  // namespace g2forge
