// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT
//
// The geometric core: G2 structures on 7-dimensional Lie algebras, their
// torsion forms (Lee form, type constant), the metric connection with
// prescribed skew torsion, its curvature, and the exact identity battery
// relating d, delta, torsion, curvature, and the G2 form.

#pragma once

#include <string>
#include <vector>

#include "g2forge/alt_form.hpp"
#include "g2forge/g2core.hpp"
#include "g2forge/ledger.hpp"
#include "g2forge/liegeom.hpp"
#include "g2forge/tensor.hpp"

namespace g2forge {

// A structure whose torsion 3-form does not exist: dpsi != theta ^ psi.
// Distinct from InputError so callers can separate "well-formed input that
// fails the geometric condition" from "malformed input".
struct NotIntegrableError : InputError {
  using InputError::InputError;
};

// Exact membership flags for the standard torsion classes, all decided by
// residuals in Q(sqrt2).
struct G2Classification {
  bool parallel = false;                        // dphi = 0 and dpsi = 0
  bool nearly_parallel = false;                 // dphi = c psi, c != 0, dpsi = 0
  bool locally_conformally_parallel = false;    // dphi = (3/4) theta^phi, dpsi = theta^psi
  bool cocalibrated = false;                    // dpsi = 0
  bool integrable = false;                      // dpsi = theta ^ psi
  bool strictly_integrable = false;             // integrable and lambda = 0
  bool pure_27 = false;                         // dpsi = 0 and lambda = 0
  Scalar lambda;                                // type constant
  AltForm theta = AltForm::zero(1);             // Lee form

  std::vector<std::string> labels() const;      // the true flags, most specific first
};

// A validated G2 form on a validated algebra, with the first-order data
// cached: dphi, dpsi, the Lee form, the type constant, the integrability
// defect, and (when integrable) the characteristic torsion.
class G2Structure {
 public:
  G2Structure(LieAlgebra algebra, AltForm phi);

  const LieAlgebra& algebra() const { return calc_.algebra(); }
  const InvariantCalculus& calculus() const { return calc_; }
  const G2FormData& form() const { return form_; }
  const AltForm& phi() const { return form_.phi(); }
  const AltForm& psi() const { return form_.psi(); }
  const AltForm& dphi() const { return dphi_; }
  const AltForm& dpsi() const { return dpsi_; }

  // theta = -(1/3) * (*dphi ^ phi).
  const AltForm& lee_form() const { return theta_; }

  // lambda = (1/144) full_contract(dphi, psi).
  const Scalar& type_constant() const { return lambda_; }

  // dpsi - theta ^ psi; zero exactly when the structure is integrable.
  const AltForm& integrability_defect() const { return defect_; }
  bool is_integrable() const { return integrable_; }

  // T = -*dphi + *(theta ^ phi) + lambda phi; the unique invariant 3-form
  // making the metric connection with skew torsion T preserve phi.
  // Throws NotIntegrableError when the defect is nonzero.
  const AltForm& characteristic_torsion() const;

  G2Classification classify() const;

 private:
  InvariantCalculus calc_;
  G2FormData form_;
  AltForm dphi_, dpsi_, theta_, defect_, torsion_;
  Scalar lambda_;
  bool integrable_;
};

// Koszul coefficients of the Levi-Civita connection of the frame metric:
// gamma(i,j,k) = g(D_{e_i} e_j, e_k) = (c_ijk - c_jki + c_kij)/2.
Ten3 levi_civita(const LieAlgebra& a);

// Curvature of a metric connection given by coefficients gamma:
// R(i,j,k,l) = g(R(e_i,e_j)e_k, e_l)
//            = sum_s [gamma(j,k,s) gamma(i,s,l) - gamma(i,k,s) gamma(j,s,l)]
//            - sum_s c(i,j,s) gamma(s,k,l).
Ten4 connection_curvature(const LieAlgebra& a, const Ten3& gamma);

// Covariant derivative of an invariant k-form along e_i (all slots).
AltForm covariant_derivative(const Ten3& gamma, const AltForm& omega, int i);

// Everything computed once for the pair (metric connection with skew torsion
// T, its Levi-Civita base): coefficients, curvatures, Ricci tensors, scalar
// curvatures, and the torsion derivatives dT, delta T, sigma T, T^2.
struct ConnectionGeometry {
  Ten3 gamma_lc;        // Levi-Civita
  Ten3 gamma;           // gamma_lc + T/2
  Ten4 curv;            // curvature of gamma
  Ten4 curv_lc;         // curvature of gamma_lc
  Mat7 ricci;           // Ric_ij = sum_a curv(a,i,j,a)
  Mat7 ricci_lc;
  Scalar scalar;
  Scalar scalar_lc;
  AltForm torsion = AltForm::zero(3);  // T
  AltForm dT = AltForm::zero(4);
  AltForm deltaT = AltForm::zero(2);
  AltForm sigmaT = AltForm::zero(4);   // (1/2) sum_j (e_j -| T) ^ (e_j -| T)
  Mat7 t_squared;       // sum_ab T_iab T_jab
  Scalar torsion_norm_sq;  // full_contract(T, T)
};

ConnectionGeometry connection_geometry(const InvariantCalculus& calc, const AltForm& torsion3);

// connection_geometry on the characteristic torsion, with the defining
// properties verified exactly: metric compatibility, parallel phi and psi,
// and connection torsion equal to T.  A failure there is a bug, not bad
// input, and raises InternalError.
ConnectionGeometry characteristic_connection(const G2Structure& s);

// The symmetry-equivalence triple: R pair-symmetric <=> the torsion is
// D-parallel-antisymmetric <=> dT = 4 D^g T.  The three residuals vanish
// together or not at all.
struct SymmetryReport {
  Scalar pair_symmetry_sq;        // R_ijkl - R_klij
  Scalar nabla_t_antisym_sq;      // (D_i T)_jkl + (D_j T)_ikl
  Scalar dt_vs_lc_nabla_t_sq;     // dT_ijkl - 4 (D^g_i T)_jkl
  bool equivalent = false;        // all three zero, or all three nonzero
};
SymmetryReport symmetry_checks(const InvariantCalculus& calc, const ConnectionGeometry& g);

// Identities valid for ANY skew-torsion metric connection on any algebra
// (Bianchi identities, Ricci comparisons, divergence identities).  Every
// entry must pass for every input; this battery is the property-test surface.
IdentityLedger connection_identity_battery(const InvariantCalculus& calc,
                                           const ConnectionGeometry& g);

// The full battery for an integrable G2 structure: the connection battery on
// the characteristic torsion plus the G2-specific identities (torsion and
// Lee-form formulas, curvature-in-g2, scalar curvature formulas, closed-
// torsion consequences).  Throws NotIntegrableError when not integrable.
IdentityLedger identity_battery(const G2Structure& s);

}  // namespace g2forge
