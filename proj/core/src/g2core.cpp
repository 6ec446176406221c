// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/g2core.hpp"

#include <string>

#include "g2forge/linalg.hpp"

namespace g2forge {

namespace {

Scalar delta(int i, int j) { return Scalar(i == j ? 1 : 0); }

AltForm standard_phi_form() {
  AltForm phi(3);
  phi.add_term(MultiIndex{1, 2, 7}, Scalar(1));
  phi.add_term(MultiIndex{1, 3, 5}, Scalar(1));
  phi.add_term(MultiIndex{1, 4, 6}, Scalar(-1));
  phi.add_term(MultiIndex{2, 3, 6}, Scalar(-1));
  phi.add_term(MultiIndex{2, 4, 5}, Scalar(-1));
  phi.add_term(MultiIndex{3, 4, 7}, Scalar(1));
  phi.add_term(MultiIndex{5, 6, 7}, Scalar(1));
  return phi;
}

// Residual of the signed two-common-index contraction identity
// phi_ijk phi_abk - (delta_ia delta_jb - delta_ib delta_ja + psi_ijab);
// zero exactly when phi is a positively oriented G2 form.  Quadratic in phi
// on the left but linear in psi on the right, so it detects orientation
// reversal (psi flips sign, the left side does not).
Scalar orientation_residual_sq(const Ten3& phi, const Ten4& psi) {
  Scalar total(0);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      for (int a = 1; a <= kDim; ++a) {
        for (int b = 1; b <= kDim; ++b) {
          Scalar lhs(0);
          for (int k = 1; k <= kDim; ++k) lhs += phi(i, j, k) * phi(a, b, k);
          const Scalar rhs = delta(i, a) * delta(j, b) - delta(i, b) * delta(j, a) + psi(i, j, a, b);
          const Scalar r = lhs - rhs;
          total += r * r;
        }
      }
    }
  }
  return total;
}

}  // namespace

Mat7 induced_metric(const AltForm& phi) {
  if (phi.degree() != 3) throw InputError("induced metric needs a 3-form");
  const Ten3 p = dense3(phi);
  Mat7 g;
  const Scalar sixth(1, 6);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i; j <= kDim; ++j) {
      Scalar s(0);
      for (int k = 1; k <= kDim; ++k) {
        for (int l = 1; l <= kDim; ++l) s += p(i, k, l) * p(j, k, l);
      }
      g(i, j) = sixth * s;
      g(j, i) = g(i, j);
    }
  }
  return g;
}

G2FormData G2FormData::standard() {
  AltForm phi = standard_phi_form();
  AltForm psi = hodge(phi);
  return G2FormData(std::move(phi), std::move(psi));
}

G2FormData G2FormData::from_phi(AltForm phi) {
  if (phi.degree() != 3) throw InputError("a G2 form must have degree 3");
  const Mat7 g = induced_metric(phi);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      if (g(i, j) != delta(i, j)) {
        throw InputError("3-form does not induce the identity metric: g(" +
                         std::to_string(i) + "," + std::to_string(j) + ") = " + g(i, j).str());
      }
    }
  }
  AltForm psi = hodge(phi);
  if (!orientation_residual_sq(dense3(phi), dense4(psi)).is_zero()) {
    throw InputError(
        "3-form induces the identity metric but fails the signed contraction "
        "identity; it is a G2 form for the reversed orientation");
  }
  if (full_contract(phi, phi) != Scalar(42)) {
    throw InternalError("identity metric without |phi|^2 = 42");
  }
  return G2FormData(std::move(phi), std::move(psi));
}

IdentityLedger identity_suite(const G2FormData& data) { return identity_suite(data.phi()); }

IdentityLedger identity_suite(const AltForm& phi_form) {
  if (phi_form.degree() != 3) throw InputError("identity suite needs a 3-form");
  const AltForm psi_form = hodge(phi_form);
  const Ten3 phi = dense3(phi_form);
  const Ten4 psi = dense4(psi_form);
  IdentityLedger ledger;
  const Scalar third(1, 3);

  {  // family 1: phi_ijk phi_ajk = 6 delta_ia
    Scalar total(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int a = 1; a <= kDim; ++a) {
        Scalar lhs(0);
        for (int j = 1; j <= kDim; ++j) {
          for (int k = 1; k <= kDim; ++k) lhs += phi(i, j, k) * phi(a, j, k);
        }
        const Scalar r = lhs - Scalar(6) * delta(i, a);
        total += r * r;
      }
    }
    ledger.add("phi_phi_single_trace", total, "phi_ijk phi_ajk = 6 delta_ia");
  }

  {  // family 2: full traces
    ledger.add("phi_phi_full_trace", [&] {
      const Scalar r = full_contract(phi_form, phi_form) - Scalar(42);
      return r * r;
    }(), "phi_ijk phi_ijk = 42");
  }

  {  // family 3: two common indices, the signed identity fixing orientation
    ledger.add("phi_phi_one_common",
               orientation_residual_sq(phi, psi),
               "phi_ijk phi_abk = delta_ia delta_jb - delta_ib delta_ja + psi_ijab");
  }

  {  // family 4: phi_ijk psi_abjk = 4 phi_iab
    Scalar total(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int a = 1; a <= kDim; ++a) {
        for (int b = 1; b <= kDim; ++b) {
          Scalar lhs(0);
          for (int j = 1; j <= kDim; ++j) {
            for (int k = 1; k <= kDim; ++k) lhs += phi(i, j, k) * psi(a, b, j, k);
          }
          const Scalar r = lhs - Scalar(4) * phi(i, a, b);
          total += r * r;
        }
      }
    }
    ledger.add("phi_psi_two_common", total, "phi_ijk psi_abjk = 4 phi_iab");
  }

  {  // family 5: one common index between phi and psi
    Scalar total(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int a = 1; a <= kDim; ++a) {
          for (int b = 1; b <= kDim; ++b) {
            for (int c = 1; c <= kDim; ++c) {
              Scalar lhs(0);
              for (int k = 1; k <= kDim; ++k) lhs += phi(i, j, k) * psi(k, a, b, c);
              const Scalar rhs = delta(i, a) * phi(j, b, c) + delta(i, b) * phi(a, j, c) +
                                 delta(i, c) * phi(a, b, j) - delta(a, j) * phi(i, b, c) -
                                 delta(b, j) * phi(a, i, c) - delta(c, j) * phi(a, b, i);
              const Scalar r = lhs - rhs;
              total += r * r;
            }
          }
        }
      }
    }
    ledger.add("phi_psi_one_common", total,
               "phi_ijk psi_kabc expands into six delta*phi terms");
  }

  {  // family 6: psi single traces
    Scalar total(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int a = 1; a <= kDim; ++a) {
        Scalar lhs(0);
        for (int j = 1; j <= kDim; ++j) {
          for (int k = 1; k <= kDim; ++k) {
            for (int l = 1; l <= kDim; ++l) lhs += psi(i, j, k, l) * psi(a, j, k, l);
          }
        }
        const Scalar r = lhs - Scalar(24) * delta(i, a);
        total += r * r;
      }
    }
    ledger.add("psi_psi_single_trace", total, "psi_ijkl psi_ajkl = 24 delta_ia");
    const Scalar full = full_contract(psi_form, psi_form) - Scalar(168);
    ledger.add("psi_psi_full_trace", full * full, "psi_ijkl psi_ijkl = 168");
  }

  {  // family 7: psi with two common indices
    Scalar total(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int a = 1; a <= kDim; ++a) {
          for (int b = 1; b <= kDim; ++b) {
            Scalar lhs(0);
            for (int k = 1; k <= kDim; ++k) {
              for (int l = 1; l <= kDim; ++l) lhs += psi(i, j, k, l) * psi(a, b, k, l);
            }
            const Scalar rhs = Scalar(4) * delta(i, a) * delta(j, b) -
                               Scalar(4) * delta(i, b) * delta(j, a) + Scalar(2) * psi(i, j, a, b);
            const Scalar r = lhs - rhs;
            total += r * r;
          }
        }
      }
    }
    ledger.add("psi_psi_two_common", total,
               "psi_ijkl psi_abkl = 4(delta_ia delta_jb - delta_ib delta_ja) + 2 psi_ijab");
  }

  {  // family 8: psi with one common index, the full 24-term expansion
    Scalar total(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          for (int a = 1; a <= kDim; ++a) {
            for (int b = 1; b <= kDim; ++b) {
              for (int c = 1; c <= kDim; ++c) {
                Scalar lhs(0);
                for (int l = 1; l <= kDim; ++l) lhs += psi(i, j, k, l) * psi(a, b, c, l);
                Scalar rhs = delta(i, a) * delta(j, b) * delta(k, c) +
                             delta(i, b) * delta(j, c) * delta(k, a) +
                             delta(i, c) * delta(j, a) * delta(k, b) -
                             delta(i, a) * delta(j, c) * delta(k, b) -
                             delta(i, b) * delta(j, a) * delta(k, c) -
                             delta(i, c) * delta(j, b) * delta(k, a);
                rhs -= third * (phi(a, j, k) * phi(i, b, c) + phi(b, j, k) * phi(i, c, a) +
                                phi(c, j, k) * phi(i, a, b));
                rhs -= third * (phi(i, a, k) * phi(j, b, c) + phi(i, b, k) * phi(j, c, a) +
                                phi(i, c, k) * phi(j, a, b));
                rhs -= third * (phi(i, j, a) * phi(k, b, c) + phi(i, j, b) * phi(k, c, a) +
                                phi(i, j, c) * phi(k, a, b));
                rhs += third * (delta(i, a) * psi(j, k, b, c) + delta(i, b) * psi(j, k, c, a) +
                                delta(i, c) * psi(j, k, a, b));
                rhs += third * (delta(j, a) * psi(k, i, b, c) + delta(j, b) * psi(k, i, c, a) +
                                delta(j, c) * psi(k, i, a, b));
                rhs += third * (delta(k, a) * psi(i, j, b, c) + delta(k, b) * psi(i, j, c, a) +
                                delta(k, c) * psi(i, j, a, b));
                const Scalar r = lhs - rhs;
                total += r * r;
              }
            }
          }
        }
      }
    }
    ledger.add("psi_psi_one_common_expansion", total,
               "psi_ijkl psi_abcl expands into 24 delta/phi/psi terms");
  }

  return ledger;
}

std::pair<AltForm, AltForm> project2(const G2FormData& data, const AltForm& beta) {
  if (beta.degree() != 2) throw InputError("project2 needs a 2-form");
  // L(beta) = *(beta ^ phi) has eigenvalue 2 on the 7-piece and -1 on the
  // 14-piece, so p7 = (L+1)/3 and p14 = (2-L)/3.
  const AltForm l = hodge(wedge(beta, data.phi()));
  const Scalar third(1, 3);
  AltForm p7 = third * (l + beta);
  AltForm p14 = third * (Scalar(2) * beta - l);
  return {std::move(p7), std::move(p14)};
}

Split3 project3(const G2FormData& data, const AltForm& gamma) {
  if (gamma.degree() != 3) throw InputError("project3 needs a 3-form");
  // 1-piece: (full(gamma,phi)/42) phi.
  const Scalar c1 = full_contract(gamma, data.phi()) / Scalar(42);
  AltForm p1 = c1 * data.phi();
  // 7-piece: alpha -| psi with alpha_i = (1/24) gamma_jkl psi_ijkl.
  const Ten3 g3 = dense3(gamma);
  const Ten4 psi = dense4(data.psi());
  Vector alpha;
  const Scalar c24(1, 24);
  for (int i = 1; i <= kDim; ++i) {
    Scalar s(0);
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        for (int l = 1; l <= kDim; ++l) s += g3(j, k, l) * psi(i, j, k, l);
      }
    }
    alpha(i) = c24 * s;
  }
  AltForm p7 = interior(alpha, data.psi());
  AltForm p27 = gamma - p1 - p7;
  return {std::move(p1), std::move(p7), std::move(p27)};
}

SymTraceless SymTraceless::from_matrix(Mat7 h) {
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      if (h(i, j) != h(j, i)) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
  if (!h.trace().is_zero()) {
    throw InputError("matrix has nonzero trace " + h.trace().str());
  }
  return SymTraceless(std::move(h));
}

AltForm gamma_map(const G2FormData& data, const SymTraceless& h) {
  const Ten3 phi = dense3(data.phi());
  const Mat7& m = h.entries();
  AltForm out(3);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) {
      for (int k = j + 1; k <= kDim; ++k) {
        Scalar s(0);
        for (int p = 1; p <= kDim; ++p) {
          s += m(i, p) * phi(p, j, k) + m(j, p) * phi(p, k, i) + m(k, p) * phi(p, i, j);
        }
        out.add_term(MultiIndex::from_sorted({i, j, k}), std::move(s));
      }
    }
  }
  return out;
}

SymTraceless gamma_inv(const G2FormData& data, const AltForm& b) {
  if (b.degree() != 3) throw InputError("gamma_inv needs a 3-form");
  const Split3 split = project3(data, b);
  if (!split.p1.is_zero() || !split.p7.is_zero()) {
    throw InputError("gamma_inv input is not in the 27-piece; 1-piece = " + split.p1.str() +
                     ", 7-piece = " + split.p7.str());
  }
  const Ten3 bt = dense3(b);
  const Ten3 phi = dense3(data.phi());
  Mat7 h;
  const Scalar quarter(1, 4);
  for (int i = 1; i <= kDim; ++i) {
    for (int m = 1; m <= kDim; ++m) {
      Scalar s(0);
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) s += bt(i, j, k) * phi(m, j, k);
      }
      h(i, m) = quarter * s;
    }
  }
  // Symmetry and tracelessness are theorems for 27-piece input; any failure
  // here is a bug in the projectors, not a data problem.
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      if (h(i, j) != h(j, i)) throw InternalError("gamma_inv produced a non-symmetric tensor");
    }
  }
  if (!h.trace().is_zero()) throw InternalError("gamma_inv produced a traced tensor");
  return SymTraceless::from_matrix(std::move(h));
}

RankReport four_form_injectivity(const G2FormData& data) {
  // Columns: the 35 basis monomials of Lambda^4.  Rows: for each frame index
  // p, the coefficient of the 1-piece (on phi's monomial span: one scalar,
  // the full contraction with phi) and the 7 components of the 7-piece
  // vector of e_p -| A.  56 rows by 35 columns; expected rank 35.
  const auto basis = all_multi_indices(4);
  const Ten4 psi = dense4(data.psi());
  ExactMatrix mat(7 * 8, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const AltForm a = AltForm::monomial(4, basis[col]);
    for (int p = 1; p <= kDim; ++p) {
      const AltForm contraction = interior(p, a);
      const std::size_t row0 = static_cast<std::size_t>(p - 1) * 8;
      mat(row0, col) = full_contract(contraction, data.phi());
      const Ten3 g3 = dense3(contraction);
      for (int i = 1; i <= kDim; ++i) {
        Scalar s(0);
        for (int j = 1; j <= kDim; ++j) {
          for (int k = 1; k <= kDim; ++k) {
            for (int l = 1; l <= kDim; ++l) s += g3(j, k, l) * psi(i, j, k, l);
          }
        }
        mat(row0 + static_cast<std::size_t>(i), col) = std::move(s);
      }
    }
  }
  RankReport report;
  report.expected = basis.size();
  report.rank = mat.rank();
  report.full_rank = report.rank == report.expected;
  return report;
}

ProjectorRanks projector_ranks(const G2FormData& data) {
  ProjectorRanks out;
  {
    const auto basis = all_multi_indices(2);
    ExactMatrix m7(basis.size(), basis.size());
    ExactMatrix m14(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto [p7, p14] = project2(data, AltForm::monomial(2, basis[col]));
      for (std::size_t row = 0; row < basis.size(); ++row) {
        m7(row, col) = p7.coefficient(basis[row]);
        m14(row, col) = p14.coefficient(basis[row]);
      }
    }
    out.two_7 = m7.rank();
    out.two_14 = m14.rank();
  }
  {
    const auto basis = all_multi_indices(3);
    ExactMatrix m1(basis.size(), basis.size());
    ExactMatrix m7(basis.size(), basis.size());
    ExactMatrix m27(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const Split3 s = project3(data, AltForm::monomial(3, basis[col]));
      for (std::size_t row = 0; row < basis.size(); ++row) {
        m1(row, col) = s.p1.coefficient(basis[row]);
        m7(row, col) = s.p7.coefficient(basis[row]);
        m27(row, col) = s.p27.coefficient(basis[row]);
      }
    }
    out.three_1 = m1.rank();
    out.three_7 = m7.rank();
    out.three_27 = m27.rank();
  }
  return out;
}

}  // namespace g2forge
