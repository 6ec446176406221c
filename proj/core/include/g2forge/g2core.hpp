// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// The standard G2 form and its linear algebra: the induced metric, the
// contraction-identity suite, the irreducible projectors on 2-forms and
// 3-forms, the isomorphism gamma between traceless symmetric tensors and the
// 27-dimensional piece of Lambda^3, and the exact-rank certificate that a
// 4-form all of whose frame contractions lie in that piece must vanish.

#pragma once

#include <utility>

#include "g2forge/alt_form.hpp"
#include "g2forge/ledger.hpp"
#include "g2forge/tensor.hpp"

namespace g2forge {

// A positive G2 form phi inducing the identity metric, with its dual psi
// cached.  Construction validates both the metric normalization
// g_ij = (1/6) phi_ikl phi_jkl = delta_ij and the orientation (through the
// signed contraction identity phi_ijk phi_abk = delta delta - delta delta
// + psi_ijab, which rejects -phi).
class G2FormData {
 public:
  static G2FormData standard();
  static G2FormData from_phi(AltForm phi);  // throws InputError with diagnostics

  const AltForm& phi() const { return phi_; }
  const AltForm& psi() const { return psi_; }

 private:
  G2FormData(AltForm phi, AltForm psi) : phi_(std::move(phi)), psi_(std::move(psi)) {}
  AltForm phi_;
  AltForm psi_;
};

// The metric determined by a 3-form: g_ij = (1/6) sum_kl phi_ikl phi_jkl.
Mat7 induced_metric(const AltForm& phi);

// All eight contraction-identity families between phi and psi, as exact
// residual norms.  The overload on a raw 3-form evaluates the same residuals
// for forms that would fail the G2FormData gate (perturbation experiments).
IdentityLedger identity_suite(const G2FormData& data);
IdentityLedger identity_suite(const AltForm& phi_degree3);

// Orthogonal splitting of a 2-form into the 7- and 14-dimensional pieces:
// beta = beta7 + beta14 with *(beta7 ^ phi) = 2 beta7 and
// *(beta14 ^ phi) = -beta14 (beta14 lies in the g2 subalgebra).
std::pair<AltForm, AltForm> project2(const G2FormData& data, const AltForm& beta);

// Orthogonal splitting of a 3-form into the 1-, 7-, and 27-dimensional
// pieces; p27 satisfies p27 ^ phi = p27 ^ psi = 0 exactly.
struct Split3 {
  AltForm p1;
  AltForm p7;
  AltForm p27;
};
Split3 project3(const G2FormData& data, const AltForm& gamma);

// A symmetric traceless 7x7 tensor; the domain of gamma.
class SymTraceless {
 public:
  static SymTraceless from_matrix(Mat7 h);  // throws InputError if invalid
  const Mat7& entries() const { return h_; }

 private:
  explicit SymTraceless(Mat7 h) : h_(std::move(h)) {}
  Mat7 h_;
};

// gamma(h)_ijk = h_ip phi_pjk + h_jp phi_pki + h_kp phi_pij; an isomorphism
// from traceless symmetric tensors onto the 27-dimensional piece of Lambda^3.
AltForm gamma_map(const G2FormData& data, const SymTraceless& h);

// Inverse of gamma on its image: h_im = (1/4) B_ijk phi_mjk.  Rejects input
// with nonzero 1- or 7-piece, reporting both projections.
SymTraceless gamma_inv(const G2FormData& data, const AltForm& b);

// Exact rank of the map sending a 4-form A to the tuple of (1+7)-piece
// projections of all frame contractions e_p -| A.  Rank 35 = injective on
// the whole of Lambda^4: a 4-form whose frame contractions all lie in the
// 27-piece vanishes identically.
struct RankReport {
  std::size_t rank = 0;
  std::size_t expected = 0;
  bool full_rank = false;
};
RankReport four_form_injectivity(const G2FormData& data);

// Exact ranks of the five projectors (7/14 on 2-forms, 1/7/27 on 3-forms).
struct ProjectorRanks {
  std::size_t two_7 = 0;
  std::size_t two_14 = 0;
  std::size_t three_1 = 0;
  std::size_t three_7 = 0;
  std::size_t three_27 = 0;
};
ProjectorRanks projector_ranks(const G2FormData& data);

}  // namespace g2forge
