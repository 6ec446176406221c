// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/solitons.hpp"

#include <utility>

namespace g2forge {

namespace {

// (D_i v)_j for a vector (1-form) in the given connection coefficients.
Mat7 vector_derivative(const Ten3& gamma, const Vector& v) {
  Mat7 out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      Scalar s(0);
      for (int p = 1; p <= kDim; ++p) s -= gamma(i, j, p) * v(p);
      out(i, j) = std::move(s);
    }
  }
  return out;
}

void require_closed_torsion(const ConnectionGeometry& g, const char* op) {
  if (!g.dT.is_zero()) {
    throw InputError(std::string(op) +
                     " requires closed torsion, but dT = " + g.dT.str());
  }
}

}  // namespace

LeeSolitonResult soliton_from_lee(const G2Structure& s) {
  const ConnectionGeometry g = characteristic_connection(s);
  require_closed_torsion(g, "the Lee-form soliton construction");

  const InvariantCalculus& calc = s.calculus();
  const AltForm& theta = s.lee_form();
  const Vector x = to_vector(theta);
  const AltForm x_hook_t = interior(x, g.torsion);
  const AltForm b = calc.ce_differential(theta) - x_hook_t;

  LeeSolitonResult out;
  out.data.x = x;
  out.data.b = b;

  // Ric^g = (1/4) T^2 - L_X g.
  const Mat7 lie_g = calc.lie_derivative_metric(x);
  Scalar einstein(0);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      const Scalar r = g.ricci_lc(i, j) - g.t_squared(i, j) / Scalar(4) + lie_g(i, j);
      einstein += r * r;
    }
  }
  out.ledger.add("lee_soliton_einstein", einstein, "Ric^g = (1/4) T^2 - L_theta g");

  out.ledger.add("lee_soliton_delta_t", (g.deltaT - b).coefficient_norm_sq(),
                 "delta T = B with B = d theta - theta -| T");

  out.ledger.add("lee_soliton_flux",
                 calc.ce_differential(b + x_hook_t).coefficient_norm_sq(),
                 "d(B + theta -| T) = 0");

  // Stationarity under the generalized flow: d delta T + L_theta T = 0.
  const AltForm flow = calc.ce_differential(g.deltaT) + calc.lie_derivative(x, g.torsion);
  out.ledger.add("torsion_flow_stationary", flow.coefficient_norm_sq(),
                 "d delta T + L_theta T = 0 when dT = 0");

  out.is_soliton = out.ledger.all_pass();
  return out;
}

IdentityLedger check_gradient_soliton(const G2Structure& s, const Vector& f_gradient) {
  const ConnectionGeometry g = characteristic_connection(s);
  require_closed_torsion(g, "the gradient soliton check");
  const AltForm df = to_one_form(f_gradient);
  if (!s.calculus().ce_differential(df).is_zero()) {
    throw InputError("the supplied df is not closed; no function has it as gradient: df = " +
                     df.str());
  }

  const Ten3 t3 = dense3(g.torsion);
  const Mat7 ndf = vector_derivative(g.gamma, f_gradient);
  const Mat7 deltat2 = dense2(g.deltaT);

  IdentityLedger ledger;
  Scalar ric_res(0), dt_res(0);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      const Scalar r1 = g.ricci(i, j) + ndf(i, j);
      ric_res += r1 * r1;
      Scalar r2 = deltat2(i, j);
      for (int p = 1; p <= kDim; ++p) r2 += f_gradient(p) * t3(p, i, j);
      dt_res += r2 * r2;
    }
  }
  ledger.add("gradient_ricci", ric_res, "Ric_ij = -(D_i df)_j");
  ledger.add("gradient_delta_t", dt_res, "(delta T)_ij = -df_s T_sij");
  ledger.add("gradient_closed_torsion", g.dT.coefficient_norm_sq(), "dT = 0");
  return ledger;
}

ParallelFieldReport parallel_field_check(const G2Structure& s, const Vector& f_gradient) {
  const ConnectionGeometry g = characteristic_connection(s);
  const InvariantCalculus& calc = s.calculus();
  const AltForm df = to_one_form(f_gradient);
  if (!calc.ce_differential(df).is_zero()) {
    throw InputError("the supplied df is not closed; no function has it as gradient: df = " +
                     df.str());
  }

  ParallelFieldReport rep;
  const Vector theta_v = to_vector(s.lee_form());
  for (int i = 1; i <= kDim; ++i) rep.v(i) = theta_v(i) - f_gradient(i);

  rep.nabla_v_residual_sq = vector_derivative(g.gamma, rep.v).norm_sq();
  rep.v_parallel = rep.nabla_v_residual_sq.is_zero();

  const AltForm dtheta = calc.ce_differential(s.lee_form());
  rep.dtheta_residual_sq =
      (dtheta - interior(rep.v, g.torsion)).coefficient_norm_sq();
  rep.killing_residual_sq = calc.lie_derivative_metric(rep.v).norm_sq();
  rep.phi_invariance_residual_sq =
      calc.lie_derivative(rep.v, s.phi()).coefficient_norm_sq();

  rep.consequences_hold = rep.dtheta_residual_sq.is_zero() &&
                          rep.killing_residual_sq.is_zero() &&
                          rep.phi_invariance_residual_sq.is_zero();
  rep.implication_holds = !rep.v_parallel || rep.consequences_hold;

  rep.ledger.add_flag("parallel_field_implication", rep.implication_holds,
                      "D V = 0 implies d theta = V -| T, L_V g = 0, L_V phi = 0");
  rep.ledger.add_flag("parallel_field_dtheta",
                      !rep.v_parallel || rep.dtheta_residual_sq.is_zero(),
                      "d theta = V -| T when V is parallel");
  rep.ledger.add_flag("parallel_field_killing",
                      !rep.v_parallel || rep.killing_residual_sq.is_zero(),
                      "V is Killing when parallel");
  rep.ledger.add_flag("parallel_field_preserves_phi",
                      !rep.v_parallel || rep.phi_invariance_residual_sq.is_zero(),
                      "L_V phi = 0 when V is parallel");

  // Compactness corollary: V = 0 with a strictly integrable structure and
  // closed torsion forces T = 0 on a compact manifold.  The proof integrates
  // by parts; from the algebra alone we only record what the torsion is.
  if (rep.v.is_zero() && s.classify().strictly_integrable && g.dT.is_zero()) {
    rep.corollary_note = g.torsion.is_zero()
                             ? "V = 0 and T = 0: the structure is parallel"
                             : "V = 0 with T != 0: the compactness corollary is not "
                               "decidable at the algebra level";
  }
  return rep;
}

SchrodingerPotential schrodinger_potential(const G2Structure& s) {
  const ConnectionGeometry g = characteristic_connection(s);
  SchrodingerPotential out;
  out.from_riemannian = g.scalar_lc - g.torsion_norm_sq / Scalar(12);
  out.from_torsion = g.scalar + g.torsion_norm_sq / Scalar(6);
  out.consistent = (out.from_riemannian == out.from_torsion);
  return out;
}

BiG2Pair bi_g2_from_opposite(const LieAlgebra& a, const AltForm& phi) {
  return BiG2Pair{G2Structure(a, phi), G2Structure(a.opposite(), phi)};
}

BiG2Report bi_g2_check(const BiG2Pair& pair) {
  const AltForm& t1 = pair.s1.characteristic_torsion();
  const AltForm& t2 = pair.s2.characteristic_torsion();

  BiG2Report rep;

  const Mat7 g1 = induced_metric(pair.s1.phi());
  const Mat7 g2m = induced_metric(pair.s2.phi());
  rep.same_metric = (g1 == g2m);
  rep.ledger.add_flag("bi_same_metric", rep.same_metric,
                      "both structures induce the same metric");

  rep.opposite_torsion_residual_sq = (t2 + t1).coefficient_norm_sq();
  rep.ledger.add("bi_opposite_torsion", rep.opposite_torsion_residual_sq,
                 "the torsions are opposite: T2 = -T1");

  const AltForm dt1 = pair.s1.calculus().ce_differential(t1);
  const AltForm dt2 = pair.s2.calculus().ce_differential(t2);
  rep.closed = dt1.is_zero() && dt2.is_zero();
  rep.ledger.add("bi_closed_torsion", dt1.coefficient_norm_sq(), "dT1 = 0");
  rep.ledger.add("bi_partner_closed_torsion", dt2.coefficient_norm_sq(), "dT2 = 0");

  // Structural consequences of passing to the opposite algebra.
  rep.ledger.add("bi_opposite_lee",
                 (pair.s2.lee_form() + pair.s1.lee_form()).coefficient_norm_sq(),
                 "the Lee forms are opposite");
  const Scalar lam = pair.s2.type_constant() + pair.s1.type_constant();
  rep.ledger.add("bi_opposite_type_constant", lam * lam,
                 "the type constants are opposite");

  rep.is_bi_g2 = rep.same_metric && rep.opposite_torsion_residual_sq.is_zero() && rep.closed;
  return rep;
}

}  // namespace g2forge
