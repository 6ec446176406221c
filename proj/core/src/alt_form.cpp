// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/alt_form.hpp"

#include <algorithm>
#include <sstream>

#include "g2forge/tensor.hpp"

namespace g2forge {

std::vector<MultiIndex> all_multi_indices(int degree) {
  std::vector<MultiIndex> out;
  for (unsigned mask = 0; mask < (1u << kDim); ++mask) {
    if (std::popcount(mask) == degree) out.emplace_back(static_cast<std::uint8_t>(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sort_sign(std::vector<int>& indices) {
  // Insertion sort counting swaps; fine at size <= 7.
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i - 1] == indices[i]) return 0;
  }
  return sign;
}

void AltForm::add_term(MultiIndex idx, Scalar c) {
  if (idx.degree() != degree_) throw InputError("term degree mismatch");
  if (c.is_zero()) return;
  const auto it = coeffs_.find(idx);
  if (it == coeffs_.end()) {
    coeffs_.emplace(idx, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Scalar AltForm::component(std::vector<int> indices) const {
  if (static_cast<int>(indices.size()) != degree_) throw InputError("component arity mismatch");
  const int sign = sort_sign(indices);
  if (sign == 0) return Scalar(0);
  const Scalar c = coefficient(MultiIndex::from_sorted(indices));
  return sign > 0 ? c : -c;
}

AltForm AltForm::operator-() const {
  AltForm out(degree_);
  for (const auto& [idx, c] : coeffs_) out.coeffs_.emplace(idx, -c);
  return out;
}

AltForm& AltForm::operator+=(const AltForm& o) {
  if (degree_ != o.degree_) throw InputError("adding forms of different degree");
  for (const auto& [idx, c] : o.coeffs_) add_term(idx, c);
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& o) {
  if (degree_ != o.degree_) throw InputError("subtracting forms of different degree");
  for (const auto& [idx, c] : o.coeffs_) add_term(idx, -c);
  return *this;
}

AltForm& AltForm::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [idx, c] : coeffs_) c *= s;
  return *this;
}

Scalar AltForm::coefficient_norm_sq() const {
  Scalar out(0);
  for (const auto& [idx, c] : coeffs_) out += c * c;
  return out;
}

std::string AltForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : coeffs_) {
    // Render "e123", "-e123", "1/2*e123", "sqrt2/..", or "(1-sqrt2)*e123";
    // terms with a leading minus join the sum as " - ".
    std::string term;
    if (c == Scalar(1)) {
      term = idx.label();
    } else if (c == Scalar(-1)) {
      term = "-" + idx.label();
    } else {
      std::string cs = c.str();
      const bool mixed = cs.find_first_of("+-", 1) != std::string::npos;
      term = (mixed ? "(" + cs + ")" : cs) + "*" + idx.label();
    }
    if (first) {
      os << term;
      first = false;
    } else if (term.front() == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
  }
  return os.str();
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  const int k = a.degree(), l = b.degree();
  if (k + l > kDim) throw InputError("wedge degree overflow");
  AltForm out(k + l);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      if (!ia.disjoint(ib)) continue;
      const int sign = ia.merge_sign(ib);
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(ia.unite(ib), std::move(c));
    }
  }
  return out;
}

AltForm interior(int j, const AltForm& alpha) {
  if (alpha.degree() < 1) throw InputError("interior product of a 0-form");
  if (j < 1 || j > kDim) throw InputError("frame index outside 1..7");
  AltForm out(alpha.degree() - 1);
  for (const auto& [idx, c] : alpha.terms()) {
    if (!idx.contains(j)) continue;
    const int sign = idx.pull_front_sign(j);
    out.add_term(idx.erase(j), sign > 0 ? c : -c);
  }
  return out;
}

AltForm interior(const Vector& x, const AltForm& alpha) {
  if (alpha.degree() < 1) throw InputError("interior product of a 0-form");
  AltForm out(alpha.degree() - 1);
  for (int j = 1; j <= kDim; ++j) {
    const Scalar& xj = x(j);
    if (xj.is_zero()) continue;
    out += xj * interior(j, alpha);
  }
  return out;
}

AltForm hodge(const AltForm& alpha) {
  AltForm out(kDim - alpha.degree());
  for (const auto& [idx, c] : alpha.terms()) {
    const int sign = idx.hodge_sign();
    out.add_term(idx.complement(), sign > 0 ? c : -c);
  }
  return out;
}

Scalar full_contract(const AltForm& a, const AltForm& b) {
  if (a.degree() != b.degree()) throw InputError("contracting forms of different degree");
  // Orthonormal frame: distinct increasing monomials are orthogonal, and each
  // ordered-tuple sum contributes k! copies of the increasing-tuple product.
  Scalar sum(0);
  const auto& small = a.term_count() <= b.term_count() ? a : b;
  const auto& large = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [idx, c] : small.terms()) {
    const Scalar d = large.coefficient(idx);
    if (!d.is_zero()) sum += c * d;
  }
  long factorial = 1;
  for (int i = 2; i <= a.degree(); ++i) factorial *= i;
  return Scalar(factorial) * sum;
}

Scalar form_inner(const AltForm& a, const AltForm& b) {
  if (a.degree() != b.degree()) throw InputError("contracting forms of different degree");
  Scalar sum(0);
  const auto& small = a.term_count() <= b.term_count() ? a : b;
  const auto& large = a.term_count() <= b.term_count() ? b : a;
  for (const auto& [idx, c] : small.terms()) {
    const Scalar d = large.coefficient(idx);
    if (!d.is_zero()) sum += c * d;
  }
  return sum;
}

Vector to_vector(const AltForm& one_form) {
  if (one_form.degree() != 1) throw InputError("to_vector needs a 1-form");
  Vector v;
  for (int i = 1; i <= kDim; ++i) v(i) = one_form.coefficient(MultiIndex{i});
  return v;
}

AltForm to_one_form(const Vector& v) {
  AltForm out(1);
  for (int i = 1; i <= kDim; ++i) out.add_term(MultiIndex{i}, v(i));
  return out;
}

Scalar volume_coefficient(const AltForm& seven_form) {
  if (seven_form.degree() != kDim) throw InputError("volume_coefficient needs a 7-form");
  return seven_form.coefficient(MultiIndex{1, 2, 3, 4, 5, 6, 7});
}

namespace {

// Spreads each sparse monomial over all permutations of its index tuple with
// the permutation sign; much faster than per-component sorting when a dense
// mirror is read 7^k times.
template <typename Sink>
void spread(const AltForm& alpha, int degree, Sink&& sink) {
  if (alpha.degree() != degree) throw InputError("dense mirror degree mismatch");
  for (const auto& [idx, c] : alpha.terms()) {
    std::vector<int> tuple = idx.indices();
    std::sort(tuple.begin(), tuple.end());
    // Walk all permutations, tracking parity via sorted-ness of each one.
    do {
      std::vector<int> copy = tuple;
      const int sign = sort_sign(copy);
      sink(tuple, sign > 0 ? c : -c);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
}

}  // namespace

Mat7 dense2(const AltForm& alpha) {
  Mat7 t;
  spread(alpha, 2, [&](const std::vector<int>& i, Scalar c) { t(i[0], i[1]) = std::move(c); });
  return t;
}

Ten3 dense3(const AltForm& alpha) {
  Ten3 t;
  spread(alpha, 3,
         [&](const std::vector<int>& i, Scalar c) { t(i[0], i[1], i[2]) = std::move(c); });
  return t;
}

Ten4 dense4(const AltForm& alpha) {
  Ten4 t;
  spread(alpha, 4,
         [&](const std::vector<int>& i, Scalar c) { t(i[0], i[1], i[2], i[3]) = std::move(c); });
  return t;
}

}  // namespace g2forge
