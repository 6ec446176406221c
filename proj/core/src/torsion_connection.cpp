// Copyright (c) g2forge contributors.
// SPDX-License-Identifier: MIT

#include "g2forge/torsion_connection.hpp"

#include <utility>

namespace g2forge {

namespace {

// (D_i omega)_J for every frame direction and every ordered index tuple of a
// dense 3-tensor: NT(i,j,k,l) = (D_i T)_{jkl}.
Ten4 derivative_of_3tensor(const Ten3& gamma, const Ten3& t) {
  Ten4 out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        for (int l = 1; l <= kDim; ++l) {
          Scalar s(0);
          for (int p = 1; p <= kDim; ++p) {
            s -= gamma(i, j, p) * t(p, k, l) + gamma(i, k, p) * t(j, p, l) +
                 gamma(i, l, p) * t(j, k, p);
          }
          out(i, j, k, l) = std::move(s);
        }
      }
    }
  }
  return out;
}

// (D_i M)_{jk} for a dense 2-tensor (not assumed symmetric).
Scalar derivative_of_2tensor(const Ten3& gamma, const Mat7& m, int i, int j, int k) {
  Scalar s(0);
  for (int p = 1; p <= kDim; ++p) {
    s -= gamma(i, j, p) * m(p, k) + gamma(i, k, p) * m(j, p);
  }
  return s;
}

Mat7 ricci_of(const Ten4& r) {
  Mat7 out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      Scalar s(0);
      for (int a = 1; a <= kDim; ++a) s += r(a, i, j, a);
      out(i, j) = std::move(s);
    }
  }
  return out;
}

// sigma_abcd = sum_j [T_jab T_jcd - T_jac T_jbd + T_jad T_jbc].
Scalar sigma_component(const Ten3& t, int a, int b, int c, int d) {
  Scalar s(0);
  for (int j = 1; j <= kDim; ++j) {
    s += t(j, a, b) * t(j, c, d) - t(j, a, c) * t(j, b, d) + t(j, a, d) * t(j, b, c);
  }
  return s;
}

}  // namespace

G2Structure::G2Structure(LieAlgebra algebra, AltForm phi)
    : calc_(std::move(algebra)),
      form_(G2FormData::from_phi(std::move(phi))),
      dphi_(calc_.ce_differential(form_.phi())),
      dpsi_(calc_.ce_differential(form_.psi())),
      theta_(Scalar(-1, 3) * hodge(wedge(hodge(dphi_), form_.phi()))),
      defect_(dpsi_ - wedge(theta_, form_.psi())),
      torsion_(AltForm::zero(3)),
      lambda_(full_contract(dphi_, form_.psi()) / Scalar(144)),
      integrable_(defect_.is_zero()) {
  if (integrable_) {
    torsion_ = -hodge(dphi_) + hodge(wedge(theta_, form_.phi())) + lambda_ * form_.phi();
  }
}

const AltForm& G2Structure::characteristic_torsion() const {
  if (!integrable_) {
    throw NotIntegrableError(
        "the structure is not integrable (dpsi != theta ^ psi); no connection with skew "
        "torsion preserves this G2 form.  Defect dpsi - theta^psi = " +
        defect_.str());
  }
  return torsion_;
}

G2Classification G2Structure::classify() const {
  G2Classification c;
  c.lambda = lambda_;
  c.theta = theta_;
  c.cocalibrated = dpsi_.is_zero();
  c.integrable = integrable_;
  c.parallel = dphi_.is_zero() && c.cocalibrated;
  if (c.cocalibrated && !dphi_.is_zero()) {
    const Scalar coef = full_contract(dphi_, form_.psi()) / Scalar(168);
    c.nearly_parallel = !coef.is_zero() && (dphi_ - coef * form_.psi()).is_zero();
  }
  c.locally_conformally_parallel =
      integrable_ && (dphi_ - Scalar(3, 4) * wedge(theta_, form_.phi())).is_zero();
  c.strictly_integrable = integrable_ && lambda_.is_zero();
  c.pure_27 = c.cocalibrated && lambda_.is_zero();
  return c;
}

std::vector<std::string> G2Classification::labels() const {
  std::vector<std::string> out;
  if (parallel) out.push_back("parallel");
  if (nearly_parallel) out.push_back("nearly_parallel");
  if (locally_conformally_parallel) out.push_back("locally_conformally_parallel");
  if (pure_27) out.push_back("pure_27");
  if (strictly_integrable) out.push_back("strictly_integrable");
  if (cocalibrated) out.push_back("cocalibrated");
  if (integrable) out.push_back("integrable");
  return out;
}

Ten3 levi_civita(const LieAlgebra& a) {
  Ten3 out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        out(i, j, k) = (a.c(i, j, k) - a.c(j, k, i) + a.c(k, i, j)) / Scalar(2);
      }
    }
  }
  return out;
}

Ten4 connection_curvature(const LieAlgebra& a, const Ten3& gamma) {
  Ten4 out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        for (int l = 1; l <= kDim; ++l) {
          Scalar s(0);
          for (int p = 1; p <= kDim; ++p) {
            s += gamma(j, k, p) * gamma(i, p, l) - gamma(i, k, p) * gamma(j, p, l) -
                 a.c(i, j, p) * gamma(p, k, l);
          }
          out(i, j, k, l) = std::move(s);
        }
      }
    }
  }
  return out;
}

AltForm covariant_derivative(const Ten3& gamma, const AltForm& omega, int i) {
  const int k = omega.degree();
  if (k == 0) return AltForm::zero(0);
  AltForm out(k);
  for (MultiIndex idx : all_multi_indices(k)) {
    const auto indices = idx.indices();
    Scalar comp(0);
    for (std::size_t t = 0; t < indices.size(); ++t) {
      std::vector<int> slot(indices.begin(), indices.end());
      for (int s = 1; s <= kDim; ++s) {
        const Scalar& g = gamma(i, indices[t], s);
        if (g.is_zero()) continue;
        slot[t] = s;
        comp -= g * omega.component(slot);
      }
    }
    out.add_term(idx, std::move(comp));
  }
  return out;
}

ConnectionGeometry connection_geometry(const InvariantCalculus& calc, const AltForm& torsion3) {
  if (torsion3.degree() != 3) throw InputError("a skew torsion must be a 3-form");
  const LieAlgebra& a = calc.algebra();
  ConnectionGeometry g;
  g.torsion = torsion3;
  g.gamma_lc = levi_civita(a);
  const Ten3 t3 = dense3(torsion3);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        g.gamma(i, j, k) = g.gamma_lc(i, j, k) + t3(i, j, k) / Scalar(2);
      }
    }
  }
  g.curv = connection_curvature(a, g.gamma);
  g.curv_lc = connection_curvature(a, g.gamma_lc);
  g.ricci = ricci_of(g.curv);
  g.ricci_lc = ricci_of(g.curv_lc);
  g.scalar = g.ricci.trace();
  g.scalar_lc = g.ricci_lc.trace();
  g.dT = calc.ce_differential(torsion3);
  g.deltaT = calc.codifferential(torsion3);
  AltForm sigma(4);
  for (int j = 1; j <= kDim; ++j) {
    const AltForm jt = interior(j, torsion3);
    sigma += wedge(jt, jt);
  }
  g.sigmaT = Scalar(1, 2) * sigma;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      Scalar s(0);
      for (int x = 1; x <= kDim; ++x) {
        for (int y = 1; y <= kDim; ++y) s += t3(i, x, y) * t3(j, x, y);
      }
      g.t_squared(i, j) = std::move(s);
    }
  }
  g.torsion_norm_sq = full_contract(torsion3, torsion3);
  return g;
}

ConnectionGeometry characteristic_connection(const G2Structure& s) {
  ConnectionGeometry g = connection_geometry(s.calculus(), s.characteristic_torsion());
  const LieAlgebra& a = s.algebra();
  const Ten3 t3 = dense3(g.torsion);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        if (!(g.gamma(i, j, k) + g.gamma(i, k, j)).is_zero()) {
          throw InternalError("characteristic connection is not metric");
        }
        if (g.gamma(i, j, k) - g.gamma(j, i, k) - a.c(i, j, k) != t3(i, j, k)) {
          throw InternalError("characteristic connection torsion does not match T");
        }
      }
    }
  }
  for (int i = 1; i <= kDim; ++i) {
    if (!covariant_derivative(g.gamma, s.phi(), i).is_zero()) {
      throw InternalError("characteristic connection fails to make phi parallel");
    }
    if (!covariant_derivative(g.gamma, s.psi(), i).is_zero()) {
      throw InternalError("characteristic connection fails to make psi parallel");
    }
  }
  return g;
}

SymmetryReport symmetry_checks(const InvariantCalculus& calc, const ConnectionGeometry& g) {
  const Ten3 t3 = dense3(g.torsion);
  const Ten4 nt = derivative_of_3tensor(g.gamma, t3);
  const Ten4 nt_lc = derivative_of_3tensor(g.gamma_lc, t3);
  const Ten4 dt4 = dense4(g.dT);
  SymmetryReport rep;
  rep.pair_symmetry_sq = Scalar(0);
  rep.nabla_t_antisym_sq = Scalar(0);
  rep.dt_vs_lc_nabla_t_sq = Scalar(0);
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      for (int k = 1; k <= kDim; ++k) {
        for (int l = 1; l <= kDim; ++l) {
          const Scalar p = g.curv(i, j, k, l) - g.curv(k, l, i, j);
          rep.pair_symmetry_sq += p * p;
          const Scalar q = nt(i, j, k, l) + nt(j, i, k, l);
          rep.nabla_t_antisym_sq += q * q;
          const Scalar r = dt4(i, j, k, l) - Scalar(4) * nt_lc(i, j, k, l);
          rep.dt_vs_lc_nabla_t_sq += r * r;
        }
      }
    }
  }
  const bool a = rep.pair_symmetry_sq.is_zero();
  const bool b = rep.nabla_t_antisym_sq.is_zero();
  const bool c = rep.dt_vs_lc_nabla_t_sq.is_zero();
  rep.equivalent = (a == b) && (b == c);
  (void)calc;
  return rep;
}

IdentityLedger connection_identity_battery(const InvariantCalculus& calc,
                                           const ConnectionGeometry& g) {
  const LieAlgebra& a = calc.algebra();
  const Ten3 t3 = dense3(g.torsion);
  const Ten4 dt4 = dense4(g.dT);
  const Mat7 deltat2 = dense2(g.deltaT);
  const Ten4 sig4 = dense4(g.sigmaT);
  const Ten4 nt = derivative_of_3tensor(g.gamma, t3);
  const Ten4 nt_lc = derivative_of_3tensor(g.gamma_lc, t3);

  IdentityLedger ledger;

  {  // Levi-Civita is torsion-free; the torsion of gamma is exactly T.
    Scalar lc_res(0), tor_res(0), met_res(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          const Scalar r1 = g.gamma_lc(i, j, k) - g.gamma_lc(j, i, k) - a.c(i, j, k);
          lc_res += r1 * r1;
          const Scalar r2 = g.gamma(i, j, k) - g.gamma(j, i, k) - a.c(i, j, k) - t3(i, j, k);
          tor_res += r2 * r2;
          const Scalar r3 = g.gamma(i, j, k) + g.gamma(i, k, j);
          const Scalar r4 = g.gamma_lc(i, j, k) + g.gamma_lc(i, k, j);
          met_res += r3 * r3 + r4 * r4;
        }
      }
    }
    ledger.add("lc_torsion_free", lc_res, "the Koszul connection has zero torsion");
    ledger.add("connection_torsion_matches", tor_res,
               "the torsion of gamma_lc + T/2 is exactly the 3-form T");
    ledger.add("metric_compatibility", met_res,
               "both connections are metric: gamma(i,j,k) + gamma(i,k,j) = 0");
  }

  {  // Curvature skew symmetries and the Levi-Civita pair symmetry.
    Scalar skew(0), pair_lc(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          for (int l = 1; l <= kDim; ++l) {
            const Scalar r1 = g.curv(i, j, k, l) + g.curv(j, i, k, l);
            const Scalar r2 = g.curv(i, j, k, l) + g.curv(i, j, l, k);
            const Scalar r3 = g.curv_lc(i, j, k, l) + g.curv_lc(j, i, k, l);
            const Scalar r4 = g.curv_lc(i, j, k, l) + g.curv_lc(i, j, l, k);
            skew += r1 * r1 + r2 * r2 + r3 * r3 + r4 * r4;
            const Scalar r5 = g.curv_lc(i, j, k, l) - g.curv_lc(k, l, i, j);
            pair_lc += r5 * r5;
          }
        }
      }
    }
    ledger.add("curvature_skew_symmetries", skew,
               "R and R^g are antisymmetric in the first and in the last index pair");
    ledger.add("lc_pair_symmetry", pair_lc, "R^g_ijkl = R^g_klij");
  }

  {  // sigma componentwise.
    Scalar res(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          for (int l = 1; l <= kDim; ++l) {
            const Scalar r = sig4(i, j, k, l) - sigma_component(t3, i, j, k, l);
            res += r * r;
          }
        }
      }
    }
    ledger.add("sigma_component_expansion", res,
               "(1/2) sum_j (e_j -| T)^(e_j -| T) has components sum_j [T_jab T_jcd - "
               "T_jac T_jbd + T_jad T_jbc]");
  }

  {  // dT, the Levi-Civita derivative of T, and the two-sided first Bianchi.
    Scalar res_dt(0), res_lcd(0), res_b1(0), res_b2(0), res_b3(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          for (int l = 1; l <= kDim; ++l) {
            const Scalar r1 = dt4(i, j, k, l) -
                              (nt(i, j, k, l) + nt(j, k, i, l) + nt(k, i, j, l) +
                               Scalar(2) * sig4(i, j, k, l) - nt(l, i, j, k));
            res_dt += r1 * r1;
            const Scalar r2 =
                nt_lc(i, j, k, l) - nt(i, j, k, l) - sig4(i, j, k, l) / Scalar(2);
            res_lcd += r2 * r2;
            const Scalar cyc =
                g.curv(i, j, k, l) + g.curv(j, k, i, l) + g.curv(k, i, j, l);
            const Scalar last =
                g.curv(l, i, j, k) + g.curv(l, j, k, i) + g.curv(l, k, i, j);
            const Scalar r3 = cyc - (dt4(i, j, k, l) - sig4(i, j, k, l) + nt(l, i, j, k));
            res_b1 += r3 * r3;
            const Scalar r4 =
                cyc - last - (Scalar(3, 2) * dt4(i, j, k, l) - sig4(i, j, k, l));
            res_b2 += r4 * r4;
            const Scalar r5 = last - (nt(l, i, j, k) - dt4(i, j, k, l) / Scalar(2));
            res_b3 += r5 * r5;
          }
        }
      }
    }
    ledger.add("dT_from_nablaT_sigmaT", res_dt,
               "dT(X,Y,Z,V) = cyclic D T terms + 2 sigma(X,Y,Z,V) - (D_V T)(X,Y,Z)");
    ledger.add("lc_derivative_of_torsion", res_lcd,
               "(D^g_X T)(Y,Z,V) = (D_X T)(Y,Z,V) + (1/2) sigma(X,Y,Z,V)");
    ledger.add("first_bianchi_cyclic", res_b1,
               "cyclic R(X,Y,Z,V) = dT - sigma + (D_V T)(X,Y,Z)");
    ledger.add("first_bianchi_both_slots", res_b2,
               "cyclic R(X,Y,Z,V) - cyclic R(V,X,Y,Z) = (3/2) dT - sigma");
    ledger.add("first_bianchi_last_slot", res_b3,
               "cyclic R(V,X,Y,Z) = -(1/2) dT + (D_V T)(X,Y,Z)");
  }

  {  // Ricci and scalar comparisons between the two connections.
    Scalar res_ric(0), res_skew(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        const Scalar r1 = g.ricci_lc(i, j) -
                          (g.ricci(i, j) + deltat2(i, j) / Scalar(2) +
                           g.t_squared(i, j) / Scalar(4));
        res_ric += r1 * r1;
        const Scalar r2 = g.ricci(i, j) - g.ricci(j, i) + deltat2(i, j);
        res_skew += r2 * r2;
      }
    }
    ledger.add("ricci_lc_comparison", res_ric,
               "Ric^g = Ric + (1/2) delta T + (1/4) T^2");
    ledger.add("ricci_skew_part", res_skew, "Ric_ij - Ric_ji = -(delta T)_ij");
    const Scalar r =
        g.scalar_lc - (g.scalar + g.torsion_norm_sq / Scalar(4));
    ledger.add("scalar_lc_comparison", r * r, "Scal^g = Scal + (1/4) |T|^2");
  }

  {  // Second Bianchi, raw form:
    // cyclic_{XYZ} [ (D_X R)(Y,Z,U,V) + R(T(X,Y),Z,U,V) ] = 0.
    std::vector<Scalar> nr(static_cast<std::size_t>(kDim) * kDim * kDim * kDim * kDim);
    const auto at = [&nr](int i, int j, int k, int u, int v) -> Scalar& {
      return nr[static_cast<std::size_t>(
          ((((i - 1) * kDim + (j - 1)) * kDim + (k - 1)) * kDim + (u - 1)) * kDim + (v - 1))];
    };
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          for (int u = 1; u <= kDim; ++u) {
            for (int v = 1; v <= kDim; ++v) {
              Scalar s(0);
              for (int p = 1; p <= kDim; ++p) {
                s -= g.gamma(i, j, p) * g.curv(p, k, u, v) +
                     g.gamma(i, k, p) * g.curv(j, p, u, v) +
                     g.gamma(i, u, p) * g.curv(j, k, p, v) +
                     g.gamma(i, v, p) * g.curv(j, k, u, p);
              }
              at(i, j, k, u, v) = std::move(s);
            }
          }
        }
      }
    }
    Scalar res(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          for (int u = 1; u <= kDim; ++u) {
            for (int v = 1; v <= kDim; ++v) {
              Scalar s = at(i, j, k, u, v) + at(j, k, i, u, v) + at(k, i, j, u, v);
              for (int p = 1; p <= kDim; ++p) {
                s += t3(i, j, p) * g.curv(p, k, u, v) + t3(j, k, p) * g.curv(p, i, u, v) +
                     t3(k, i, p) * g.curv(p, j, u, v);
              }
              res += s * s;
            }
          }
        }
      }
    }
    ledger.add("second_bianchi_raw", res,
               "cyclic (D_X R)(Y,Z,U,V) + R(T(X,Y),Z,U,V) = 0");
  }

  {  // Second Bianchi, traced twice:
    // 2 sum_i (D_i Ric)_ji = sum_ab (delta T)_ab T_abj + (1/6) sum_abc dT_jabc T_abc.
    Scalar res(0);
    for (int j = 1; j <= kDim; ++j) {
      Scalar s(0);
      for (int i = 1; i <= kDim; ++i) {
        s -= Scalar(2) * derivative_of_2tensor(g.gamma, g.ricci, i, j, i);
      }
      for (int x = 1; x <= kDim; ++x) {
        for (int y = 1; y <= kDim; ++y) s += deltat2(x, y) * t3(x, y, j);
      }
      Scalar trace(0);
      for (int x = 1; x <= kDim; ++x) {
        for (int y = 1; y <= kDim; ++y) {
          for (int z = 1; z <= kDim; ++z) trace += dt4(j, x, y, z) * t3(x, y, z);
        }
      }
      s += trace / Scalar(6);
      res += s * s;
    }
    ledger.add("second_bianchi_traced", res,
               "-2 div Ric + <delta T, T>_j + (1/6) <dT_j, T> = 0 in every direction");
  }

  {  // delta^2 T = 0 in its Ricci-like form:
    // sum_i (D_i delta T)_ik = (1/2) sum_is (delta T)_is T_isk.
    Scalar res(0);
    for (int k = 1; k <= kDim; ++k) {
      Scalar s(0);
      for (int i = 1; i <= kDim; ++i) s += derivative_of_2tensor(g.gamma, deltat2, i, i, k);
      for (int i = 1; i <= kDim; ++i) {
        for (int p = 1; p <= kDim; ++p) s -= deltat2(i, p) * t3(i, p, k) / Scalar(2);
      }
      res += s * s;
    }
    ledger.add("div_deltaT_identity", res,
               "sum_i (D_i delta T)_ik = (1/2) sum_is (delta T)_is T_isk");
  }

  {
    const SymmetryReport rep = symmetry_checks(calc, g);
    ledger.add_flag("pair_symmetry_equivalence", rep.equivalent,
                    "R pair-symmetric <=> D T totally antisymmetric <=> dT = 4 D^g T "
                    "(the three residuals vanish together)");
  }

  return ledger;
}

IdentityLedger identity_battery(const G2Structure& s) {
  const ConnectionGeometry g = characteristic_connection(s);
  const InvariantCalculus& calc = s.calculus();
  IdentityLedger ledger = connection_identity_battery(calc, g);

  const AltForm& phi = s.phi();
  const AltForm& psi = s.psi();
  const AltForm& theta = s.lee_form();
  const Scalar& lambda = s.type_constant();
  const AltForm& T = g.torsion;
  const Ten3 phi3 = dense3(phi);
  const Ten4 psi4 = dense4(psi);
  const Ten3 t3 = dense3(T);
  const Ten4 dt4 = dense4(g.dT);
  const Ten4 nt = derivative_of_3tensor(g.gamma, t3);
  const Vector theta_v = to_vector(theta);

  const AltForm delta_psi = calc.codifferential(psi);
  const AltForm theta_hook_psi = interior(theta_v, psi);
  const AltForm theta_hook_T = interior(theta_v, T);
  const Scalar delta_theta = calc.codifferential(theta).coefficient(MultiIndex());
  const Scalar theta_norm_sq = full_contract(theta, theta);
  const Scalar delta_psi_norm_sq = full_contract(delta_psi, delta_psi);
  const Scalar lambda_sq = lambda * lambda;

  // D theta as a matrix: (D_i theta)_j.
  Mat7 ntheta;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = 1; j <= kDim; ++j) {
      Scalar v(0);
      for (int p = 1; p <= kDim; ++p) v -= g.gamma(i, j, p) * theta_v(p);
      ntheta(i, j) = std::move(v);
    }
  }

  {  // The connection preserves the whole G2 package (recorded, not only
     // enforced at construction).
    Scalar rphi(0), rpsi(0);
    for (int i = 1; i <= kDim; ++i) {
      rphi += covariant_derivative(g.gamma, phi, i).coefficient_norm_sq();
      rpsi += covariant_derivative(g.gamma, psi, i).coefficient_norm_sq();
    }
    ledger.add("parallel_phi", rphi, "D phi = 0");
    ledger.add("parallel_psi", rpsi, "D psi = 0");
  }

  {  // Torsion and Lee-form formulas.
    const AltForm alt = -delta_psi - theta_hook_psi + lambda * phi;
    ledger.add("torsion_alt_expression", (T - alt).coefficient_norm_sq(),
               "T = -delta psi - theta -| psi + lambda phi");

    const Scalar l1 = full_contract(delta_psi, phi) - Scalar(36) * lambda;
    ledger.add("lambda_from_delta_psi", l1 * l1, "<delta psi, phi> = 36 lambda");
    const Scalar l2 = full_contract(T, phi) - Scalar(6) * lambda;
    ledger.add("lambda_from_torsion", l2 * l2, "<T, phi> = 6 lambda");

    Scalar lee_res(0);
    for (int i = 1; i <= kDim; ++i) {
      Scalar s(0);
      for (int x = 1; x <= kDim; ++x) {
        for (int y = 1; y <= kDim; ++y) {
          for (int z = 1; z <= kDim; ++z) s += t3(x, y, z) * psi4(x, y, z, i);
        }
      }
      const Scalar r = theta_v(i) - s / Scalar(6);
      lee_res += r * r;
    }
    ledger.add("lee_from_torsion", lee_res, "theta_i = (1/6) T_jkl psi_jkli");
  }

  {  // The 27-part of delta psi and the induced splitting of T.
    const Split3 split = project3(s.form(), delta_psi);
    const AltForm p27_expected =
        delta_psi + Scalar(3, 4) * theta_hook_psi - Scalar(6, 7) * lambda * phi;
    ledger.add("delta_psi_27_formula", (split.p27 - p27_expected).coefficient_norm_sq(),
               "(delta psi)_27 = delta psi + (3/4) theta -| psi - (6/7) lambda phi");

    const AltForm t_expected = -split.p27 - Scalar(1, 4) * theta_hook_psi +
                               Scalar(1, 7) * lambda * phi;
    ledger.add("torsion_from_delta_psi_27", (T - t_expected).coefficient_norm_sq(),
               "T = -(delta psi)_27 - (1/4) theta -| psi + (1/7) lambda phi");

    const Scalar o1 = full_contract(split.p27, theta_hook_psi);
    const Scalar o2 = full_contract(split.p27, phi);
    const Scalar o3 = full_contract(theta_hook_psi, phi);
    ledger.add("torsion_component_orthogonality", o1 * o1 + o2 * o2 + o3 * o3,
               "the 27-, 7-, and 1-parts of T are pairwise orthogonal");

    const Scalar n1 = g.torsion_norm_sq -
                      (full_contract(split.p27, split.p27) +
                       Scalar(3, 2) * theta_norm_sq + Scalar(6, 7) * lambda_sq);
    ledger.add("torsion_norm_split", n1 * n1,
               "|T|^2 = |(delta psi)_27|^2 + (3/2)|theta|^2 + (6/7) lambda^2");

    const Scalar n2 = g.torsion_norm_sq -
                      (delta_psi_norm_sq - Scalar(12) * theta_norm_sq -
                       Scalar(30) * lambda_sq);
    ledger.add("torsion_norm_via_delta_psi", n2 * n2,
               "|T|^2 = |delta psi|^2 - 12 |theta|^2 - 30 lambda^2");
  }

  {  // delta T and d theta.
    const Mat7 deltat2 = dense2(g.deltaT);
    const Mat7 dtheta2 = dense2(calc.ce_differential(theta));
    const Mat7 hook2 = dense2(theta_hook_T);
    Scalar r1(0), r2(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        const Scalar a1 = deltat2(i, j) - (ntheta(i, j) - ntheta(j, i));
        r1 += a1 * a1;
        const Scalar a2 = dtheta2(i, j) - (ntheta(i, j) - ntheta(j, i) + hook2(i, j));
        r2 += a2 * a2;
      }
    }
    ledger.add("deltaT_vs_nabla_theta", r1,
               "(delta T)_ij = (D_i theta)_j - (D_j theta)_i");
    ledger.add("dtheta_decomposition", r2,
               "d theta = D-exterior derivative of theta + theta -| T");

    const AltForm dtheta = calc.ce_differential(theta);
    ledger.add("dtheta_in_g2", project2(s.form(), dtheta).first.coefficient_norm_sq(),
               "d theta lies in the 14-dimensional piece of Lambda^2");
  }

  {  // Curvature takes values in the Lie algebra of G2.
    Scalar r_phi(0), r_psi(0), r_ric(0), r_ric_dt(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        for (int k = 1; k <= kDim; ++k) {
          Scalar s(0);
          for (int x = 1; x <= kDim; ++x) {
            for (int y = 1; y <= kDim; ++y) s += g.curv(i, j, x, y) * phi3(x, y, k);
          }
          r_phi += s * s;
          for (int l = 1; l <= kDim; ++l) {
            Scalar u(0);
            for (int x = 1; x <= kDim; ++x) {
              for (int y = 1; y <= kDim; ++y) u += g.curv(i, j, x, y) * psi4(x, y, k, l);
            }
            const Scalar r = u + Scalar(2) * g.curv(i, j, k, l);
            r_psi += r * r;
          }
        }
        Scalar v(0), w(0);
        for (int x = 1; x <= kDim; ++x) {
          for (int y = 1; y <= kDim; ++y) {
            for (int z = 1; z <= kDim; ++z) {
              v += g.curv(i, x, y, z) * psi4(j, x, y, z);
              w += dt4(i, x, y, z) * psi4(j, x, y, z);
            }
          }
        }
        const Scalar rr = Scalar(2) * g.ricci(i, j) - v;
        r_ric += rr * rr;
        const Scalar rd = g.ricci(i, j) - (w / Scalar(12) - ntheta(i, j));
        r_ric_dt += rd * rd;
      }
    }
    ledger.add("curvature_in_g2_phi", r_phi, "sum_ab R_ijab phi_abk = 0");
    ledger.add("curvature_in_g2_psi", r_psi, "sum_ab R_ijab psi_abkl = -2 R_ijkl");
    ledger.add("ricci_from_R_psi", r_ric, "2 Ric_ij = sum R_iabc psi_jabc");
    ledger.add("ricci_from_dT_psi", r_ric_dt,
               "Ric_ij = (1/12) sum dT_iabc psi_jabc - (D_i theta)_j");
  }

  {  // Scalar curvature formulas.
    const Scalar s1 = g.scalar - (Scalar(3) * delta_theta + Scalar(2) * theta_norm_sq -
                                  g.torsion_norm_sq / Scalar(3) + Scalar(2) * lambda_sq);
    ledger.add("scalar_char_formula", s1 * s1,
               "Scal = 3 delta theta + 2|theta|^2 - (1/3)|T|^2 + 2 lambda^2");
    const Scalar s2 = g.scalar - (Scalar(3) * delta_theta + Scalar(6) * theta_norm_sq -
                                  delta_psi_norm_sq / Scalar(3) + Scalar(12) * lambda_sq);
    ledger.add("scalar_char_formula_b", s2 * s2,
               "Scal = 3 delta theta + 6|theta|^2 - (1/3)|delta psi|^2 + 12 lambda^2");
    const Scalar s3 =
        g.scalar_lc - (Scalar(3) * delta_theta + Scalar(2) * theta_norm_sq -
                       g.torsion_norm_sq / Scalar(12) + Scalar(2) * lambda_sq);
    ledger.add("scalar_lc_formula", s3 * s3,
               "Scal^g = 3 delta theta + 2|theta|^2 - (1/12)|T|^2 + 2 lambda^2");
    const Scalar s4 =
        g.scalar_lc - (Scalar(3) * delta_theta + Scalar(3) * theta_norm_sq -
                       delta_psi_norm_sq / Scalar(12) + Scalar(9, 2) * lambda_sq);
    ledger.add("scalar_lc_formula_b", s4 * s4,
               "Scal^g = 3 delta theta + 3|theta|^2 - (1/12)|delta psi|^2 + (9/2) lambda^2");
  }

  {  // Traces of dT and sigma against phi and psi.
    Scalar r1(0);
    for (int i = 1; i <= kDim; ++i) {
      Scalar s(0);
      for (int x = 1; x <= kDim; ++x) {
        for (int y = 1; y <= kDim; ++y) {
          for (int z = 1; z <= kDim; ++z) {
            s += dt4(i, x, y, z) * phi3(x, y, z) + Scalar(2) * nt(i, x, y, z) * phi3(x, y, z);
          }
        }
      }
      r1 += s * s;
    }
    ledger.add("dT_phi_trace", r1,
               "sum dT_iabc phi_abc + 2 sum (D_i T)_abc phi_abc = 0");

    const Scalar r2 = full_contract(g.dT, psi) -
                      (Scalar(24) * delta_theta - Scalar(4) * g.torsion_norm_sq +
                       Scalar(24) * theta_norm_sq + Scalar(24) * lambda_sq);
    ledger.add("dT_psi_full_trace", r2 * r2,
               "<dT, psi> = 24 delta theta - 4|T|^2 + 24|theta|^2 + 24 lambda^2");

    const Scalar r3 = full_contract(g.sigmaT, psi) -
                      (Scalar(-2) * g.torsion_norm_sq + Scalar(12) * theta_norm_sq +
                       Scalar(12) * lambda_sq);
    ledger.add("sigmaT_psi_full_trace", r3 * r3,
               "<sigma T, psi> = -2|T|^2 + 12|theta|^2 + 12 lambda^2");
  }

  {  // Consequences of closed torsion.
    const bool closed = g.dT.is_zero();
    Scalar ric_res(0);
    for (int i = 1; i <= kDim; ++i) {
      for (int j = 1; j <= kDim; ++j) {
        const Scalar r = g.ricci(i, j) + ntheta(i, j);
        ric_res += r * r;
      }
    }
    ledger.add_flag("closed_torsion_ricci", !closed || ric_res.is_zero(),
                    "dT = 0 implies Ric = -D theta");
    ledger.add_flag("closed_torsion_scalar", !closed || g.scalar.is_zero(),
                    "dT = 0 implies Scal = 0 on an invariant structure");
    ledger.add_flag("closed_torsion_delta_theta", !closed || delta_theta.is_zero(),
                    "dT = 0 implies delta theta = 0 on an invariant structure");
  }

  return ledger;
}

}  // namespace g2forge
