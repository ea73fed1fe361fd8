#include "doctest.h"

#include "ellcy/qexp.hpp"
#include "ellcy/serialize.hpp"
#include "ellcy/series1.hpp"
#include "ellcy/series2.hpp"

using namespace ellcy;

namespace {

// Small dense series with distinguishable entries.
Series2 probe(Caps caps, int salt) {
  Series2 s(caps);
  for (int i = 0; i <= caps.d1; ++i)
    for (int j = 0; j <= caps.d2; ++j)
      s.set(i, j, rat(salt + 3 * i - 7 * j, 1 + ((i + j) % 4)));
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("series1 inverse round trip") {
  std::vector<Rat> c(13, Rat(0));
  c[0] = Rat(1);
  c[1] = Rat(-432);
  Series1 f(12, c);
  Series1 g = f.inverse();
  CHECK(f * g == Series1::constant(12, Rat(1)));
  // geometric series coefficients
  CHECK(g.at(2) == Rat(432) * Rat(432));
  CHECK(f / f == Series1::constant(12, Rat(1)));
}

TEST_CASE("series1 cap mixing throws") {
  Series1 a(4), b(5);
  CHECK_THROWS(a + b);
}

TEST_CASE("series2 ring identities") {
  Caps caps{6, 3};
  Series2 a = probe(caps, 1), b = probe(caps, 5), c = probe(caps, -9);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a - a == Series2(caps));
}

TEST_CASE("series2 theta is a derivation") {
  Caps caps{6, 3};
  Series2 a = probe(caps, 2), b = probe(caps, 11);
  for (int axis : {1, 2}) {
    CHECK((a * b).theta(axis) ==
          a.theta(axis) * b + a * b.theta(axis));
  }
}

TEST_CASE("series2 unit inverse and rational powers") {
  Caps caps{6, 3};
  Series2 f = probe(caps, 3);
  f.set(0, 0, Rat(1));
  CHECK(f * f.inverse() == Series2::constant(caps, Rat(1)));

  Series2 h = f.pow_rational(rat(1, 2));
  CHECK(h * h == f);
  CHECK(f.pow_int(3) == f * f * f);

  // log then exp returns the unit
  CHECK(f.log_unit().exp_nilconst() == f);
}

TEST_CASE("series2 substitute on linear maps") {
  Caps caps{5, 2};
  Series2 f = probe(caps, 4);
  Series2 g1 = Series2::monomial(caps, 1, 0, Rat(1));
  Series2 g2 = Series2::monomial(caps, 0, 1, Rat(1));
  // identity substitution
  CHECK(substitute(f, g1, g2) == f);
  // scaling z1 -> 2 z1 multiplies row i by 2^i
  Series2 s = substitute(f, g1 * Rat(2), g2);
  for (int i = 0; i <= caps.d1; ++i)
    for (int j = 0; j <= caps.d2; ++j)
      CHECK(s.at(i, j) == f.at(i, j) * Rat(1L << i));
}

TEST_CASE("series2 slices embed and project") {
  Caps caps{7, 2};
  Series2 f = probe(caps, 6);
  Series1 row = f.slice(1);
  CHECK(row.at(3) == f.at(3, 1));
  Series2 g = Series2::from_slice0(caps, row);
  CHECK(g.slice(0) == row);
  CHECK(g.at(2, 1) == Rat(0));
  f.set_slice(2, row);
  CHECK(f.slice(2) == row);
}

TEST_CASE("series2 truncation and shifts") {
  Caps caps{7, 3};
  Series2 f = probe(caps, 8);
  Series2 t = f.truncated(Caps{4, 1});
  CHECK(t.caps() == Caps{4, 1});
  CHECK(t.at(4, 1) == f.at(4, 1));
  Series2 up = f.shift(2, 1);
  CHECK(up.at(5, 2) == f.at(3, 1));
  // entries pushed past the caps are gone; the rest round trips
  Series2 back = up.shift(-2, -1);
  for (int i = 0; i <= caps.d1 - 2; ++i)
    for (int j = 0; j <= caps.d2 - 1; ++j) CHECK(back.at(i, j) == f.at(i, j));
}

TEST_CASE("qexp window bookkeeping") {
  Series1 a(5, {Rat(1), Rat(2), Rat(3), Rat(0), Rat(0), Rat(7)});
  QExp f = QExp::from_series(a);
  CHECK(f.lo() == 0);
  CHECK(f.hi() == 5);

  QExp m = QExp::monomial(Rat(4), -3);
  CHECK(m.hi() >= QExp::WINDOW_INF);

  QExp p = f * m;  // exact factor keeps the finite width
  CHECK(p.lo() == -3);
  CHECK(p.hi() == 2);
  CHECK(p.coeff(-1) == Rat(12));

  QExp s = f + QExp::from_series(Series1(3, {Rat(1), Rat(0), Rat(0), Rat(0)}));
  CHECK(s.hi() == 3);  // min of the operand windows
  CHECK(s.coeff(0) == Rat(2));
}

TEST_CASE("qexp exact zero does not eat windows") {
  QExp z = QExp::zero();
  QExp f = QExp::from_series(Series1(4, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}));
  CHECK((f + z).hi() == 4);
  CHECK((f * z).is_zero_on_window());
  // agrees treats the exact zero as known everywhere
  CHECK(z.agrees(QExp::constant(Rat(0)), -10, 10));
  CHECK_FALSE(z.agrees(QExp::constant(Rat(1)), 0, 0));
}

TEST_CASE("qexp agrees refuses uncovered ranges") {
  QExp f = QExp::from_series(Series1(4, {Rat(1), Rat(2), Rat(0), Rat(0), Rat(0)}));
  CHECK(f.agrees(f, 0, 4));
  CHECK_THROWS(f.agrees(f, 0, 5));
}

TEST_CASE("qexp half-integral exponents") {
  QExp f(2, -1, 4);  // exponents in (1/2) Z
  f.set_coeff(-1, Rat(5));   // q^(-1/2)
  f.set_coeff(2, Rat(3));    // q^1
  QExp t = f.theta();
  CHECK(t.coeff(-1) == Rat(5) * rat(-1, 2));
  CHECK(t.coeff(2) == Rat(3));
  QExp g = f * f;
  CHECK(g.coeff(-2) == Rat(25));
  CHECK(g.coeff(1) == Rat(30));
}

TEST_CASE("qexp inverse round trip") {
  Series1 u(6, {Rat(1), Rat(-24), Rat(252), Rat(-1472), Rat(0), Rat(3), Rat(9)});
  QExp f = QExp::from_series(u);
  QExp g = f.inverse();
  CHECK((f * g).agrees(QExp::constant(Rat(1)), 0, 6));
}

TEST_CASE("serialization round trips") {
  Caps caps{5, 2};
  Series2 f = probe(caps, 12);
  CHECK(series2_from_json(to_json(f)) == f);

  QExp q(2, -3, 7);
  q.set_coeff(-3, rat(2, 3));
  q.set_coeff(4, Rat(-7));
  QExp back = qexp_from_json(to_json(q));
  CHECK(back.base_den() == 2);
  CHECK(back.lo() == -3);
  CHECK(back.hi() == 7);
  CHECK(back.agrees(q, -3, 7));
}

TEST_SUITE_END();
