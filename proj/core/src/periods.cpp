#include "ellcy/periods.hpp"

#include <stdexcept>

#include "ellcy/hypergeo.hpp"

namespace ellcy {

namespace {

// Flattened operator term for coefficient recursions.
struct FlatTerm {
  int z1, z2, t1, t2;
  Rat c;
};

std::vector<FlatTerm> flatten(const ShiftOp& a) {
  std::vector<FlatTerm> v;
  for (const auto& [key, c] : a.terms)
    v.push_back({key.first[0], key.first[1], key.second[0], key.second[1], c});
  return v;
}

// Weight of s_{d - alpha} in [A s]_d for one term.
Rat term_weight(const FlatTerm& t, int d1, int d2) {
  return t.c * rat_pow(Rat(d1 - t.z1), t.t1) * rat_pow(Rat(d2 - t.z2), t.t2);
}

// [A s]_d with every coefficient of s known.
Rat coeff_of_apply(const std::vector<FlatTerm>& terms, const Series2& s, int d1, int d2) {
  Rat acc = 0;
  for (const auto& t : terms) {
    if (t.z1 > d1 || t.z2 > d2) continue;
    const Rat& x = s.at(d1 - t.z1, d2 - t.z2);
    if (x == 0) continue;
    acc += term_weight(t, d1, d2) * x;
  }
  return acc;
}

Series2 solve_dual(const ShiftOp& L1, const ShiftOp& L2, int n, Caps caps,
                   const Series2& R1, const Series2& R2, const Rat& free00) {
  auto f1 = flatten(L1), f2 = flatten(L2);
  Series2 s(caps);
  for (int d2 = 0; d2 <= caps.d2; ++d2)
    for (int d1 = 0; d1 <= caps.d1; ++d1) {
      if (d1 == 0 && d2 == 0) {
        s.set(0, 0, free00);
        continue;
      }
      Rat p1 = Rat(d1) * Rat(d1 - n * d2);
      const std::vector<FlatTerm>& terms = p1 != 0 ? f1 : f2;
      const Series2& rhs = p1 != 0 ? R1 : R2;
      Rat diag = p1 != 0 ? p1 : rat_pow(Rat(d2), n);
      if (diag == 0)
        throw std::logic_error("frobenius_solve: vanishing indicial factor off origin");
      // the unknown s_d only appears through the alpha = 0 terms
      Rat lower = 0;
      for (const auto& t : terms) {
        if (t.z1 == 0 && t.z2 == 0) continue;
        if (t.z1 > d1 || t.z2 > d2) continue;
        const Rat& x = s.at(d1 - t.z1, d2 - t.z2);
        if (x != 0) lower += term_weight(t, d1, d2) * x;
      }
      s.set(d1, d2, (rhs.at(d1, d2) - lower) / diag);
    }
  // both operators must accept the solution everywhere
  for (int d2 = 0; d2 <= caps.d2; ++d2)
    for (int d1 = 0; d1 <= caps.d1; ++d1) {
      if (d1 == 0 && d2 == 0) continue;
      if (coeff_of_apply(f1, s, d1, d2) != R1.at(d1, d2) ||
          coeff_of_apply(f2, s, d1, d2) != R2.at(d1, d2))
        throw std::logic_error("frobenius_solve: operators disagree on the solution");
    }
  return s;
}

Series2 minus_partial_applied(const ShiftOp& L, int axis, const Series2& pi0) {
  LogSeries r = apply(partial_theta(L, axis), LogSeries::from_plain(pi0));
  return -r.part(0, 0);
}

}  // namespace

PeriodSet frobenius_solve(const ModelParams& params, Caps caps) {
  PeriodSet ps;
  ps.params = params;
  ps.caps = caps;
  ps.L1 = make_L1(params.n, params.a0, params.a1, params.a2);
  ps.L2 = make_L2(params.n);

  Series2 zero(caps);
  ps.pi0 = solve_dual(ps.L1, ps.L2, params.n, caps, zero, zero, 1);
  ps.s1 = solve_dual(ps.L1, ps.L2, params.n, caps,
                     minus_partial_applied(ps.L1, 1, ps.pi0),
                     minus_partial_applied(ps.L2, 1, ps.pi0), 0);
  ps.s2 = solve_dual(ps.L1, ps.L2, params.n, caps,
                     minus_partial_applied(ps.L1, 2, ps.pi0),
                     minus_partial_applied(ps.L2, 2, ps.pi0), 0);
  return ps;
}

SlicePeriod slice(const PeriodSet& ps, int a, int i) {
  SlicePeriod sp;
  switch (a) {
    case 0:
      sp.plain = ps.pi0.slice(i);
      sp.logcoef = Series1(ps.caps.d1);
      break;
    case 1:
      sp.plain = ps.s1.slice(i);
      sp.logcoef = ps.pi0.slice(i);
      break;
    case 2:
      sp.plain = ps.s2.slice(i);
      sp.logcoef = ps.pi0.slice(i);
      break;
    default:
      throw std::invalid_argument("slice: period index must be 0, 1 or 2");
  }
  return sp;
}

namespace {

// z^m (d/dz)^m f is diagonal in degree: coefficient k picks up k!/(k-m)!.
Series1 diag_deriv(const Series1& f, int m) {
  Series1 r(f.cap());
  for (int k = m; k <= f.cap(); ++k) {
    Rat w = 1;
    for (int j = 0; j < m; ++j) w *= k - j;
    r.set(k, f.at(k) * w);
  }
  return r;
}

// plain part of z^m d^m (f log z): sum_{j>=1} C(m,j) (-1)^{j-1} (j-1)! z^{m-j} d^{m-j} f
Series1 diag_deriv_logpart(const Series1& f, int m) {
  Series1 acc(f.cap());
  for (int j = 1; j <= m; ++j) {
    Rat w = binomial(m, j) * factorial(j - 1) * (j % 2 == 1 ? 1 : -1);
    acc = acc + diag_deriv(f, m - j) * w;
  }
  return acc;
}

// coefficient list (ascending in theta) of prod_{k<n} (n*j - theta + k)
std::vector<Rat> p_at_slice(int n, int j) {
  std::vector<Rat> poly{1};
  for (int k = 0; k < n; ++k) {
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    Rat c = Rat(n) * j + k;
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d] * c;
      next[d + 1] -= poly[d];
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rat(k));
  if (d.empty()) d.push_back(0);
  return d;
}

}  // namespace

SliceData slice_constants(const PeriodSet& ps, int i) {
  const ModelParams& mp = ps.params;
  int n = mp.n, D1 = ps.caps.d1;
  SliceData sd;
  sd.i = i;

  // hypergeometric data in the rescaled coordinate a0*z
  Series1 F = pfq({{mp.a1, mp.a2}, {Rat(1)}}, D1);
  Series1 G = log_companion({mp.a1, mp.a2}, D1);
  for (int k = 0; k <= D1; ++k) {
    Rat s = rat_pow(mp.a0, k);
    F.set(k, F.at(k) * s);
    G.set(k, G.at(k) * s);
  }

  Series1 pi0_i = ps.pi0.slice(i);
  Series1 s1_i = ps.s1.slice(i);
  int m = n * i;
  if (m > D1) throw std::invalid_argument("slice_constants: cap too small for this slice");

  Series1 H = diag_deriv(F, m);
  sd.c0 = pi0_i.at(m) / H.at(m);
  bool ok = pi0_i == H * sd.c0;

  // log part of Pi1_i is Pi0_i itself, so c1 is pinned by the same ratio
  sd.c1 = sd.c0;
  Series1 plain_model = diag_deriv_logpart(F, m) + diag_deriv(G, m);
  sd.c1t = (s1_i.at(m) - sd.c1 * plain_model.at(m)) / pi0_i.at(m);
  ok = ok && s1_i == plain_model * sd.c1 + pi0_i * sd.c1t;
  sd.closed_form_ok = ok;

  // field expressions: A_i from the q-rewriting of S1 slices, B_i likewise
  // for S2 with the extra log(1 - a0 z) piece
  auto cst = [&](const Rat& c) { return DiffFieldElem::constant(c, mp.a0, mp.a1, mp.a2); };
  DiffFieldElem Z = DiffFieldElem::sym_z(mp.a0, mp.a1, mp.a2);
  DiffFieldElem Fe = DiffFieldElem::sym_f(mp.a0, mp.a1, mp.a2);
  DiffFieldElem one = cst(1);
  DiffFieldElem omega = one - Z * mp.a0;
  DiffFieldElem Hfld = one / (omega * Fe * Fe);       // theta log q
  DiffFieldElem K = Hfld - (Z * mp.a0) / omega - one;  // theta of the B-direction shift
  DiffFieldElem thetaLambda = K * rat(-n, 2);

  // Pi0 slices in the field via u_{m+1} = (theta - m) u_m
  std::vector<DiffFieldElem> pi0f;
  {
    DiffFieldElem u = Fe;
    int mm = 0;
    for (int j = 0; j <= i; ++j) {
      while (mm < n * j) {
        u = df_theta(u) - u * Rat(mm);
        ++mm;
      }
      Rat c0j = ps.pi0.slice(j).at(n * j) / (factorial(n * j) * F.at(n * j));
      pi0f.push_back(u * c0j);
    }
  }

  // A and B by the slice recursions of the second operator
  DiffFieldElem A = cst(0), B = cst(0);
  for (int j = 1; j <= i; ++j) {
    auto P = p_at_slice(n, j - 1);
    Rat lead = rat_pow(Rat(j), n);
    Rat sign = n % 2 == 0 ? 1 : -1;

    // common sum over derivative orders of P against Pi0_{j-1}
    auto leibniz_tail = [&](const DiffFieldElem& direction) {
      DiffFieldElem acc = cst(0);
      std::vector<Rat> deriv = P;
      DiffFieldElem dir_pow = direction;  // theta^{a-1} applied to direction
      Rat afact = 1;
      for (int a = 1; a < static_cast<int>(P.size()); ++a) {
        deriv = poly_derivative(deriv);
        afact *= a;
        acc = acc + df_apply_theta_poly(deriv, pi0f[j - 1]) * (dir_pow * (1 / afact));
        if (a + 1 < static_cast<int>(P.size())) dir_pow = df_theta(dir_pow);
      }
      return acc;
    };

    DiffFieldElem newA =
        (df_apply_theta_poly(P, A) + leibniz_tail(Hfld)) * (sign / lead);
    std::vector<Rat> dP = poly_derivative(P);
    DiffFieldElem cross = df_apply_theta_poly(dP, pi0f[j - 1]) * Rat(-n);
    DiffFieldElem newB =
        (df_apply_theta_poly(P, B) + leibniz_tail(thetaLambda) + cross) * (sign / lead) -
        pi0f[j] * rat(n, j);
    A = newA;
    B = newB;
  }
  sd.A = A;
  sd.B = B;

  // cross-check the field route against the series route
  Series1 gf = G * F.inverse();
  Series1 lomega = Series1::constant(D1, 1) -
                   Series1::monomial(D1, 1, mp.a0);
  Series1 log_l = lomega.log_unit();
  Series1 a_series = s1_i - pi0_i * gf;
  Series1 b_series = ps.s2.slice(i) + pi0_i * (gf + log_l) * rat(n, 2);
  sd.ab_series_ok = df_eval(A, F) == a_series && df_eval(B, F) == b_series;
  return sd;
}

Series2 wronskian(const PeriodSet& ps, int a, int b) {
  const Series2& sb = b == 1 ? ps.s1 : ps.s2;
  Series2 w = ps.pi0 * sb.theta(a) - sb * ps.pi0.theta(a);
  if (a == b) w = w + ps.pi0 * ps.pi0;
  return w;
}

NonhomReport nonhom_slice_check(const PeriodSet& ps, int i) {
  const ModelParams& mp = ps.params;
  Caps caps{ps.caps.d1, 0};
  int m = mp.n * i;

  ShiftOp t = ShiftOp::theta(2, 1);
  ShiftOp L = op_mul(t, t) -
              op_mul(ShiftOp::z(2, 1),
                     op_mul(t + ShiftOp::constant(2, mp.a1), t + ShiftOp::constant(2, mp.a2))) *
                  mp.a0 -
              t * Rat(m);
  ShiftOp dL = partial_theta(L, 1);

  auto lift = [&](const Series1& f) {
    return LogSeries::from_plain(Series2::from_slice0(caps, f));
  };
  LogSeries pi0_i = lift(ps.pi0.slice(i));
  LogSeries s1_i = lift(ps.s1.slice(i));
  LogSeries s2_i = lift(ps.s2.slice(i));

  NonhomReport rep;
  rep.pi0_ok = annihilates(L, pi0_i).ok;
  rep.pi1_ok = apply(L, s1_i) + apply(dL, pi0_i) == LogSeries(caps);
  rep.pi2_ok = apply(L, s2_i) - pi0_i.theta(1) * Rat(mp.n) == LogSeries(caps);
  return rep;
}

}  // namespace ellcy
