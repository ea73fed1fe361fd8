#include "ellcy/mirror.hpp"

#include <stdexcept>

#include "ellcy/logseries.hpp"

namespace ellcy {

Series2 MirrorMap::z_map(int axis) const {
  if (axis == 1) return v1.shift(1, 0);
  if (axis == 2) return v2.shift(0, 1);
  throw std::invalid_argument("z_map: axis must be 1 or 2");
}

MirrorMap build_mirror(const PeriodSet& ps) {
  MirrorMap mm;
  mm.params = ps.params;
  mm.caps = ps.caps;
  Series2 inv0 = ps.pi0.inverse();
  mm.u1 = (ps.s1 * inv0).exp_nilconst();
  mm.u2 = (ps.s2 * inv0).exp_nilconst();
  auto [v1, v2] = invert_map(mm.u1, mm.u2);
  mm.v1 = v1;
  mm.v2 = v2;
  return mm;
}

TauDerivation tau_derivations(const PeriodSet& ps) {
  TauDerivation td;
  Series2 p2 = ps.pi0 * ps.pi0;
  // w[e][b] = Pi0 theta_e S_b - S_b theta_e Pi0 + delta_eb Pi0^2
  Series2 w[2][2];
  for (int e = 1; e <= 2; ++e)
    for (int b = 1; b <= 2; ++b) w[e - 1][b - 1] = wronskian(ps, e, b);
  Series2 det = w[0][0] * w[1][1] - w[0][1] * w[1][0];
  Series2 fac = p2 * det.inverse();

  // adjugate form of [J^{-1}]_{ea} for J_be = w[e][b] / Pi0^2
  td.coef[0][0] = fac * w[1][1];
  td.coef[0][1] = -(fac * w[0][1]);
  td.coef[1][0] = -(fac * w[1][0]);
  td.coef[1][1] = fac * w[0][0];

  // independent route: eliminate against the Jacobian directly
  Series2 jac[2][2];  // jac[b][e] = theta_e tau_b
  for (int b = 0; b < 2; ++b)
    for (int e = 0; e < 2; ++e) jac[b][e] = w[e][b] * p2.inverse();
  // invert the 2x2 by elimination with the unit pivot
  Series2 p = jac[0][0].inverse();
  Series2 schur = jac[1][1] - jac[1][0] * p * jac[0][1];
  Series2 s = schur.inverse();
  Series2 inv[2][2];
  inv[0][0] = p + p * jac[0][1] * s * jac[1][0] * p;
  inv[0][1] = -(p * jac[0][1] * s);
  inv[1][0] = -(s * jac[1][0] * p);
  inv[1][1] = s;
  td.routes_agree = true;
  for (int a = 0; a < 2; ++a)
    for (int e = 0; e < 2; ++e)
      td.routes_agree = td.routes_agree && td.coef[a][e] == inv[e][a];

  // D_a tau_b == delta_ab, applied to the genuine log-bearing tau
  Series2 inv0 = ps.pi0.inverse();
  td.flat_ok = true;
  for (int b = 1; b <= 2; ++b) {
    LogSeries tau(ps.caps);
    tau.set_part(b == 1 ? 1 : 0, b == 1 ? 0 : 1,
                 Series2::constant(ps.caps, 1));
    tau.set_part(0, 0, (b == 1 ? ps.s1 : ps.s2) * inv0);
    LogSeries dtau[2] = {tau.theta(1), tau.theta(2)};
    for (int a = 0; a < 2; ++a) {
      LogSeries got = LogSeries::from_plain(td.coef[a][0]) * dtau[0] +
                      LogSeries::from_plain(td.coef[a][1]) * dtau[1];
      LogSeries want = LogSeries::from_plain(
          Series2::constant(ps.caps, a + 1 == b ? 1 : 0));
      td.flat_ok = td.flat_ok && got == want;
    }
  }
  return td;
}

Series2 x_series(const PeriodSet& ps, const MirrorMap& mm) {
  const ModelParams& p = ps.params;
  Series2 omega = Series2::constant(ps.caps, 1) -
                  Series2::monomial(ps.caps, 1, 0, p.a0);
  Series2 base = omega * mm.u1;
  Series2 half = p.n % 2 == 0 ? base.pow_int(p.n / 2)
                              : base.pow_rational(rat(p.n, 2));
  return half * mm.u2;
}

TExpansion t_expand(const Series2& f_q, int n, int t_order) {
  Caps caps = f_q.caps();
  if (t_order < 0 || t_order > caps.d2)
    throw std::invalid_argument("t_expand: t_order outside the z2 cap");
  TExpansion te;
  te.n = n;
  te.t_order = t_order;
  int bd = n % 2 == 0 ? 1 : 2;
  for (int m = 0; m <= t_order; ++m) {
    long off = static_cast<long>(n) * m * bd / 2;  // scaled q1 offset of t^m
    QExp fm(bd, -off, static_cast<long>(bd) * caps.d1 - off);
    for (int e1 = 0; e1 <= caps.d1; ++e1)
      fm.set_coeff(static_cast<long>(bd) * e1 - off, f_q.at(e1, m));
    te.f.push_back(fm);
  }
  return te;
}

TExpansion t_expand(const Series2& f_z, const MirrorMap& mm, int t_order) {
  Series2 f_q = substitute(f_z, mm.z_map(1), mm.z_map(2));
  return t_expand(f_q, mm.params.n, t_order);
}

}  // namespace ellcy
