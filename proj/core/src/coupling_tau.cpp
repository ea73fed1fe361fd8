#include <algorithm>
#include <stdexcept>

#include "ellcy/coupling.hpp"

namespace ellcy {

// ----------------------------------------------------------- tau frame

const Series2& TauCouplings::by_count(int twos) const {
  if (twos < 0 || twos > 4)
    throw std::invalid_argument("TauCouplings: index count out of range");
  return c[twos];
}

const Series2& TauCouplings::component(int a, int b, int cc, int d) const {
  int twos = 0;
  for (int x : {a, b, cc, d}) {
    if (x != 1 && x != 2)
      throw std::invalid_argument("TauCouplings: indices must be 1 or 2");
    twos += (x == 2);
  }
  return c[twos];
}

TauCouplings to_tau(const YukawaSet& ys, const PeriodSet& ps,
                    const MirrorMap& mm) {
  const Caps caps = ps.caps;
  const Series2 zq1 = mm.z_map(1), zq2 = mm.z_map(2);

  std::array<Series2, 5> vq;
  for (int k = 0; k < 5; ++k)
    vq[k] = substitute(ys.entries[k].cleared.to_series(caps), zq1, zq2);

  Series2 pi0q = substitute(ps.pi0, zq1, zq2);
  const Series2 pref = (pi0q * pi0q).inverse();

  // J[e][a] = theta^q_a log z_e = delta_{ea} + (theta_a v_e) / v_e
  Series2 jac[2][2];
  for (int e = 0; e < 2; ++e) {
    const Series2& v = (e == 0) ? mm.v1 : mm.v2;
    const Series2 vinv = v.inverse();
    for (int a = 0; a < 2; ++a) {
      jac[e][a] = v.theta(a + 1) * vinv;
      if (e == a) jac[e][a] = jac[e][a] + Series2::constant(caps, 1);
    }
  }

  TauCouplings tc;
  tc.caps = caps;
  for (int twos = 0; twos <= 4; ++twos) {
    int idx[4];
    for (int k = 0; k < 4; ++k) idx[k] = (k < 4 - twos) ? 0 : 1;
    Series2 sum(caps);
    for (int mask = 0; mask < 16; ++mask) {
      int m2 = __builtin_popcount(mask);
      Series2 term = vq[m2];
      for (int k = 0; k < 4; ++k) term = term * jac[(mask >> k) & 1][idx[k]];
      sum = sum + term;
    }
    tc.c[twos] = pref * sum;
  }
  return tc;
}

// -------------------------------------------------- intersection data

QExp IntersectionData::seed(int a, int b, int gamma, int order) const {
  if (a > b) std::swap(a, b);
  if (gamma == 1) {
    if (a == 1 && b == 1) return QExp::constant(4);
    if (a == 1 && b == 2) return QExp::constant(1);
    if (a == 2 && b == 2) return QExp::zero();
  } else if (gamma == 2) {
    if (a == 1 && b == 1)
      return QExp::constant(12) + eisenstein(4, order) * Rat(4);
    if (a == 1 && b == 2) return QExp::constant(4);
    if (a == 2 && b == 2) return QExp::constant(1);
  }
  throw std::invalid_argument("IntersectionData::seed: bad index");
}

IntersectionData main_intersections() {
  IntersectionData d;
  d.hinv = {{{Rat(-4), Rat(1)}, {Rat(1), Rat(0)}}};
  return d;
}

// --------------------------------------------------- three-point solve

namespace {

using Pair2 = std::array<QExp, 2>;

QExp contract(const Pair2& u, const Pair2& v, const IntersectionData& in) {
  QExp s = QExp::zero();
  for (int g = 0; g < 2; ++g)
    for (int dl = 0; dl < 2; ++dl)
      if (in.hinv[g][dl] != 0) s = s + u[g] * v[dl] * in.hinv[g][dl];
  return s;
}

// exact objects (unbounded hi) are known at every exponent, not just
// from their nominal floor up
long eff_lo(const QExp& f) {
  return f.hi() >= QExp::WINDOW_INF ? -QExp::WINDOW_INF : f.lo();
}

}  // namespace

ThreePointResult solve_three_point(const std::array<TExpansion, 5>& c4,
                                   const IntersectionData& inter, int t_order,
                                   bool stop_on_mismatch) {
  ThreePointResult res;
  const int n = c4[0].n;
  for (const TExpansion& te : c4)
    if ((int)te.f.size() <= t_order)
      throw std::invalid_argument("solve_three_point: not enough t sectors");

  long seed_order = 8;
  for (const TExpansion& te : c4)
    seed_order = std::max(seed_order, te.f[0].hi() + 4);

  std::vector<Pair2> c22(t_order + 1), c12(t_order + 1), c11(t_order + 1);
  for (auto [ab, dst] : {std::pair{std::pair{2, 2}, &c22},
                         std::pair{std::pair{1, 2}, &c12},
                         std::pair{std::pair{1, 1}, &c11}})
    (*dst)[0] = {inter.seed(ab.first, ab.second, 1, seed_order),
                 inter.seed(ab.first, ab.second, 2, seed_order)};

  // t^0: the couplings must reproduce the seed contractions outright
  res.seed_checks_ok = true;
  {
    const struct {
      const Pair2 *u, *v;
      int comp;
      const char* tag;
    } zero_checks[] = {{&c11[0], &c11[0], 0, "(11,11)"},
                       {&c11[0], &c12[0], 1, "(11,12)"},
                       {&c11[0], &c22[0], 2, "(11,22)"},
                       {&c12[0], &c12[0], 2, "(12,12)"},
                       {&c12[0], &c22[0], 3, "(12,22)"},
                       {&c22[0], &c22[0], 4, "(22,22)"}};
    for (const auto& zc : zero_checks) {
      QExp lhs = contract(*zc.u, *zc.v, inter);
      const QExp& rhs = c4[zc.comp].f[0];
      long lo = std::max(eff_lo(lhs), eff_lo(rhs));
      long hi = std::min(lhs.hi(), rhs.hi());
      if (lo > hi || !lhs.agrees(rhs, lo, hi)) {
        res.seed_checks_ok = false;
        if (res.seed_mismatch.empty()) res.seed_mismatch = zc.tag;
      }
    }
  }

  res.ok = res.seed_checks_ok;
  auto ladder = [&](const QExp& f, int m, int count) {
    QExp r = f;
    for (int t = 0; t < count; ++t) r = r.theta() + r * rat(n * m, 2);
    return r;
  };

  for (int m = 1; m <= t_order; ++m) {
    ThreePointSector sec;
    sec.order = m;

    QExp mid2222 = QExp::zero(), mid1222 = QExp::zero();
    for (int k = 1; k < m; ++k) {
      mid2222 = mid2222 + contract(c22[k], c22[m - k], inter);
      mid1222 = mid1222 + contract(c12[k], c22[m - k], inter);
    }

    // boundary terms: (0,1) hinv = (1,0) and (1,4) hinv = (0,1), so the
    // seed contractions project straight onto single columns
    sec.f_gamma1 = (c4[4].f[m] - mid2222) * rat(1, 2L * m * m);
    sec.f_gamma2 = (c4[3].f[m] - mid1222 - ladder(sec.f_gamma1, m, 1) * Rat(m)) *
                   rat(1, (long)m * m);

    c22[m] = {sec.f_gamma1 * Rat((long)m * m), sec.f_gamma2 * Rat((long)m * m)};
    c12[m] = {ladder(sec.f_gamma1, m, 1) * Rat(m), ladder(sec.f_gamma2, m, 1) * Rat(m)};
    c11[m] = {ladder(sec.f_gamma1, m, 2), ladder(sec.f_gamma2, m, 2)};

    const struct {
      const std::vector<Pair2>*u, *v;
      int comp;
      const char* tag;
    } checks[] = {{&c11, &c11, 0, "(11,11)"},
                  {&c11, &c12, 1, "(11,12)"},
                  {&c11, &c22, 2, "(11,22)"},
                  {&c12, &c12, 2, "(12,12)"}};
    sec.checks_ok = true;
    sec.check_lo = 1;
    sec.check_hi = 0;
    for (const auto& ch : checks) {
      QExp lhs = QExp::zero();
      for (int k = 0; k <= m; ++k)
        lhs = lhs + contract((*ch.u)[k], (*ch.v)[m - k], inter);
      const QExp& rhs = c4[ch.comp].f[m];
      long lo = std::max(eff_lo(lhs), eff_lo(rhs));
      long hi = std::min(lhs.hi(), rhs.hi());
      if (lo > hi) {
        sec.checks_ok = false;
        if (sec.first_mismatch.empty())
          sec.first_mismatch = std::string(ch.tag) + " empty overlap";
        continue;
      }
      sec.check_lo = lo;
      sec.check_hi = hi;
      if (!lhs.agrees(rhs, lo, hi)) {
        sec.checks_ok = false;
        if (sec.first_mismatch.empty()) sec.first_mismatch = ch.tag;
      }
    }

    if (!sec.checks_ok && res.fail_order == 0) {
      res.fail_order = m;
      res.fail_component = sec.first_mismatch;
      res.ok = false;
    }
    res.sectors.push_back(std::move(sec));
    if (!res.sectors.back().checks_ok && stop_on_mismatch) break;
  }
  return res;
}

// --------------------------------------------------- anomaly structure

AnomalyResult anomaly_decompose(const QExp& f, const QExp& y, int weight,
                                int eta_power, long q_shift) {
  AnomalyResult out;
  if (f.hi() >= QExp::WINDOW_INF || f.lo() <= -QExp::WINDOW_INF)
    throw std::invalid_argument("anomaly_decompose: unbounded input window");
  const int order = (int)(f.hi() - f.lo()) + 16;

  const QExp e2 = eisenstein(2, order);
  const QExp e4 = eisenstein(4, order);
  const QExp e6 = eisenstein(6, order);
  const QExp pref = eta_pow(eta_power, order);

  auto qpow = [](const QExp& b, int e) {
    QExp r = QExp::constant(1);
    for (int t = 0; t < e; ++t) r = r * b;
    return r;
  };
  auto mono_name = [](int a, int b) {
    std::string s;
    if (a) s += "E4" + (a > 1 ? "^" + std::to_string(a) : "");
    if (b) s += (s.empty() ? "" : "*") + std::string("E6") +
                (b > 1 ? "^" + std::to_string(b) : "");
    return s.empty() ? "1" : s;
  };

  std::vector<QExp> cols;
  std::vector<std::string> names;
  for (int a = weight / 4; a >= 0; --a) {
    int rem = weight - 4 * a;
    if (rem % 6) continue;
    int b = rem / 6;
    cols.push_back((qpow(e4, a) * qpow(e6, b) * pref).shift_exp(q_shift));
    names.push_back(mono_name(a, b));
  }
  cols.push_back(e2 * y * y);
  names.push_back("E2*y^2");

  out.fit = fit_against(f, cols, names);
  out.ok = out.fit.ok;
  if (out.ok) {
    out.k = out.fit.coeffs.back();
    out.pure_coeffs.assign(out.fit.coeffs.begin(), out.fit.coeffs.end() - 1);
    out.pure_names.assign(names.begin(), names.end() - 1);
  }
  return out;
}

}  // namespace ellcy
