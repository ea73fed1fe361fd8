#pragma once

#include <utility>
#include <vector>

#include "ellcy/periods.hpp"
#include "ellcy/qexp.hpp"
#include "ellcy/series2.hpp"

namespace ellcy {

// Coordinates q_a = z_a exp(S_a / Pi0) and their inverse.  Only the unit
// factors are stored: q_a = z_a u_a(z), z_a = q_a v_a(q).
struct MirrorMap {
  ModelParams params;
  Caps caps;
  Series2 u1, u2;
  Series2 v1, v2;

  // Full map z_axis(q) including the leading q factor.
  Series2 z_map(int axis) const;
};

MirrorMap build_mirror(const PeriodSet& ps);

// Derivations dual to tau_a = (Pi0 log z_a + S_a) / Pi0, expressed in the
// theta basis: D_a = coef[a][0] theta_1 + coef[a][1] theta_2 (0-based a).
// coef is obtained twice, from the closed adjugate form and from a generic
// elimination inverse of the Jacobian theta_e tau_b; routes_agree records
// that both give the same series, flat_ok that D_a tau_b == delta_ab.
struct TauDerivation {
  Series2 coef[2][2];
  bool routes_agree = false;
  bool flat_ok = false;
};

TauDerivation tau_derivations(const PeriodSet& ps);

// X = (1 - a0 z1)^{n/2} u1^{n/2} u2, the exponential of the fibre volume
// relative to n/2 tau_1 + tau_2.  Constant term 1.
Series2 x_series(const PeriodSet& ps, const MirrorMap& mm);

// Regrouping by powers of t = q2 q1^{n/2}.  f[m] is the coefficient of t^m,
// a finite q1-Laurent expansion (half-integral exponents when n is odd).
struct TExpansion {
  int n = 0;
  int t_order = 0;
  std::vector<QExp> f;
};

// `f_q` lives in the q coordinates already.
TExpansion t_expand(const Series2& f_q, int n, int t_order);
// Composes with z(q) first.
TExpansion t_expand(const Series2& f_z, const MirrorMap& mm, int t_order);

}  // namespace ellcy
