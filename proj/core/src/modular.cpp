#include "ellcy/modular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ellcy/hypergeo.hpp"

namespace ellcy {

namespace {

// 1 + c sum_d sigma_{k-1}(d) q^d as a capped series.
Series1 eisenstein_series1(int k, int order) {
  Series1 e(order);
  e.set(0, 1);
  long c = k == 2 ? -24 : k == 4 ? 240 : k == 6 ? -504 : 0;
  if (c == 0) throw std::invalid_argument("eisenstein: k must be 2, 4 or 6");
  for (long j = 1; j <= order; ++j) {
    Rat jk = rat_pow(Rat(j), k - 1) * c;
    for (long d = j; d <= order; d += j) e.set(d, e.at(d) + jk);
  }
  return e;
}

Series1 dedekind_product(int order) {
  Series1 p = Series1::constant(order, 1);
  for (int k = 1; k <= order; ++k)
    p = p * (Series1::constant(order, 1) - Series1::monomial(order, k, 1));
  return p;
}

}  // namespace

QExp eisenstein(int k, int order) {
  QExp e = QExp::from_series(eisenstein_series1(k, order));
  e.weight = k;
  return e;
}

QExp eta_pow(int m, int order) {
  if (m % 12 != 0)
    throw std::invalid_argument("eta_pow: exponent must be a multiple of 12");
  Series1 p = dedekind_product(order);
  Series1 q = m >= 0 ? p : p.inverse();
  Series1 body = q.pow_int(m >= 0 ? m : -m);
  int bd = m % 24 == 0 ? 1 : 2;
  QExp r = QExp::from_series(body);
  if (bd == 2) r = r.rebased(2);
  r = r.shift_exp(static_cast<long>(m) * bd / 24);
  r.weight = m / 2;
  return r;
}

QExp theta3_4(int order) {
  Series1 t(order);
  t.set(0, 1);
  for (long mm = 1; mm * mm <= order; ++mm) t.set(mm * mm, 2);
  QExp r = QExp::from_series(t.pow_int(4));
  r.weight = 2;
  return r;
}

QExp theta2_4(int order) {
  Series1 s(order);
  for (long mm = 0; mm * (mm + 1) <= order; ++mm) s.set(mm * (mm + 1), 1);
  Series1 body = s.pow_int(4).shift(1) * 16;
  QExp r = QExp::from_series(body);
  r.weight = 2;
  return r;
}

GeneratorSet level_generators(int level, int order) {
  GeneratorSet gs;
  gs.level = level;
  gs.quasi = eisenstein(2, order);
  auto e2_twist = [&](int N) {
    QExp t = gs.quasi - eisenstein(2, order).rescale_exp(N) * Rat(N);
    t.weight = 2;
    return t;
  };
  switch (level) {
    case 1:
      gs.gens = {eisenstein(4, order), eisenstein(6, order)};
      gs.names = {"E4", "E6"};
      break;
    case 2:
      gs.gens = {e2_twist(2), eisenstein(4, order)};
      gs.names = {"E2-2E2(2)", "E4"};
      break;
    case 3:
      gs.gens = {e2_twist(3), eisenstein(4, order), eisenstein(6, order)};
      gs.names = {"E2-3E2(3)", "E4", "E6"};
      break;
    case 4:
      gs.gens = {theta2_4(order), theta3_4(order)};
      gs.names = {"theta2^4", "theta3^4"};
      break;
    default:
      throw std::invalid_argument("level_generators: level must be 1..4");
  }
  return gs;
}

Series1 z_of_q_series(int order) {
  Series1 one = Series1::constant(order, 1);
  Series1 eta24 = dedekind_product(order).pow_int(24).shift(1);
  Series1 inv_j = eta24 * eisenstein_series1(4, order).pow_int(3).inverse();
  Series1 u = (one - inv_j * 1728).pow_rational(rat(1, 2));
  return (one - u) * rat(1, 864);
}

QExp z_of_q(int order) { return QExp::from_series(z_of_q_series(order)); }

ModRepReport verify_modrep(int order) {
  ModRepReport rep;
  Series1 z = z_of_q_series(order);
  Series1 f = pfq({{rat(5, 6), rat(1, 6)}, {Rat(1)}}, order);
  for (int k = 0; k <= order; ++k) f.set(k, f.at(k) * rat_pow(432, k));

  QExp lhs4 = QExp::from_series(f.pow_int(4).compose(z));
  rep.quartic_ok = lhs4.agrees(eisenstein(4, order), 0, order);

  Series1 omega = Series1::constant(order, 1) - Series1::monomial(order, 1, 432);
  Series1 big = f.pow_int(5) * f.theta() * omega * 12;
  // the left side has valuation 1, so its window starts there; match the
  // constant term of the right side against literal zero instead
  QExp lhs6 = QExp::from_series(big.compose(z));
  QExp rhs6 = eisenstein(2, order) * eisenstein(4, order) - eisenstein(6, order);
  rep.deriv_ok = rhs6.coeff(0) == 0 && lhs6.agrees(rhs6, 1, order);
  return rep;
}

FitResult fit_against(const QExp& f, const std::vector<QExp>& columns,
                      const std::vector<std::string>& names, int margin_min) {
  FitResult res;
  res.names = names;
  size_t n = columns.size();
  if (names.size() != n)
    throw std::invalid_argument("fit_against: one name per column");
  if (n == 0) {
    res.detail = "no columns";
    return res;
  }

  int bd = f.base_den();
  for (const QExp& c : columns) bd = std::max(bd, c.base_den());
  QExp g = f.rebased(bd);
  std::vector<QExp> cols;
  for (const QExp& c : columns) cols.push_back(c.rebased(bd));

  long lo = g.lo(), hi = g.hi();
  for (const QExp& c : cols) {
    lo = std::max(lo, c.lo());
    hi = std::min(hi, c.hi());
  }
  if (hi >= QExp::WINDOW_INF || lo <= -QExp::WINDOW_INF) {
    res.detail = "unbounded fit window";
    return res;
  }
  long rows = hi - lo + 1;
  res.rows = rows;
  res.margin = static_cast<int>(rows - static_cast<long>(n));
  if (rows < static_cast<long>(n) + margin_min) {
    std::ostringstream msg;
    msg << "window too small: " << rows << " coefficients for " << n
        << " unknowns (need margin " << margin_min << ")";
    res.detail = msg.str();
    return res;
  }

  // exact Gauss-Jordan on the augmented system
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(n + 1));
  for (long e = lo; e <= hi; ++e) {
    for (size_t j = 0; j < n; ++j) a[e - lo][j] = cols[j].coeff(e);
    a[e - lo][n] = g.coeff(e);
  }
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rat inv = 1 / a[r][c];
    for (size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat m = a[i][c];
      for (size_t j = c; j <= n; ++j) a[i][j] -= m * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < a.size(); ++i) {
    if (a[i][n] != 0) {
      res.detail = "no exact solution on the common window";
      return res;
    }
  }
  res.coeffs.assign(n, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i)
    res.coeffs[pivot_col[i]] = a[i][n];
  res.unique = pivot_col.size() == n;

  // replay the combination; exactness is the whole point
  QExp combo = QExp::zero(bd);
  for (size_t j = 0; j < n; ++j) combo = combo + cols[j] * res.coeffs[j];
  res.ok = combo.windowed(lo, hi).agrees(g.windowed(lo, hi), lo, hi);
  if (!res.ok) res.detail = "replayed combination disagrees";
  return res;
}

namespace {

void enumerate_monomials(const GeneratorSet& gs, size_t at, int left,
                         std::vector<int>& expo,
                         std::vector<std::vector<int>>& out) {
  if (at == gs.gens.size()) {
    if (left == 0) out.push_back(expo);
    return;
  }
  int w = gs.gens[at].weight.value();
  for (int e = 0; e * w <= left; ++e) {
    expo[at] = e;
    enumerate_monomials(gs, at + 1, left - e * w, expo, out);
  }
  expo[at] = 0;
}

}  // namespace

FitResult fit(const QExp& f, int weight, int level, int eta_power,
              long q_shift, int max_E2_degree) {
  int fbd = f.base_den();
  long width = f.hi() - f.lo();
  if (width < 0 || width >= QExp::WINDOW_INF) {
    FitResult res;
    res.detail = "target window is empty or unbounded";
    return res;
  }
  int order = static_cast<int>(width / fbd) + 6;

  QExp g = f;
  if (eta_power != 0) g = g * eta_pow(-eta_power, order);
  if (q_shift != 0) g = g.shift_exp(-q_shift * g.base_den());

  // nothing may survive below q^0 once the eta and q prefactors are cleared
  for (long e = g.lo(); e < 0 && e <= g.hi(); ++e) {
    if (g.coeff(e) != 0) {
      FitResult res;
      std::ostringstream msg;
      msg << "nonzero coefficient at scaled exponent " << e
          << " after clearing prefactors";
      res.detail = msg.str();
      return res;
    }
  }
  g = g.windowed(std::max<long>(g.lo(), 0), g.hi());

  int col_order = static_cast<int>(g.hi() / g.base_den()) + 1;
  GeneratorSet gs = level_generators(level, col_order);
  std::vector<QExp> cols;
  std::vector<std::string> names;
  for (int j = 0; j <= max_E2_degree; ++j) {
    int w = weight - 2 * j;
    if (w < 0) break;
    std::vector<std::vector<int>> monos;
    std::vector<int> expo(gs.gens.size(), 0);
    enumerate_monomials(gs, 0, w, expo, monos);
    for (const auto& m : monos) {
      QExp base = QExp::constant(1);
      std::ostringstream nm;
      bool any = false;
      for (size_t t = 0; t < m.size(); ++t) {
        for (int e = 0; e < m[t]; ++e) base = base * gs.gens[t];
        if (m[t] > 0) {
          if (any) nm << "*";
          nm << gs.names[t];
          if (m[t] > 1) nm << "^" << m[t];
          any = true;
        }
      }
      for (int i = 0; i <= j; ++i) {
        QExp col = base;
        std::ostringstream full;
        if (i > 0) {
          for (int e = 0; e < i; ++e) col = col * gs.quasi;
          full << gs.quasi_name;
          if (i > 1) full << "^" << i;
          if (any) full << "*";
        }
        full << (any ? nm.str() : i > 0 ? "" : "1");
        cols.push_back(col);
        names.push_back(full.str());
      }
    }
  }
  return fit_against(g, cols, names, 3);
}

}  // namespace ellcy
