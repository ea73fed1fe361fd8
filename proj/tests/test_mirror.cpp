#include "doctest.h"

#include "ellcy/mirror.hpp"
#include "ellcy/periods.hpp"

using namespace ellcy;

namespace {

struct Setup {
  PeriodSet ps;
  MirrorMap mm;
};

Setup make(Caps caps) {
  ModelParams mp;
  Setup s{frobenius_solve(mp, caps), {}};
  s.mm = build_mirror(s.ps);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("mirror");

TEST_CASE("inverse map fibre row") {
  Setup s = make(Caps{6, 2});
  // z1(q1, 0) = q1 (1 - 312 q1 + 87084 q1^2 - 23067968 q1^3 + ...)
  Series1 v = s.mm.v1.slice(0);
  CHECK(v.at(0) == Rat(1));
  CHECK(v.at(1) == Rat(-312));
  CHECK(v.at(2) == Rat(87084));
  CHECK(v.at(3) == Rat(-23067968));
}

TEST_CASE("unit factors compose to the identity") {
  Setup s = make(Caps{8, 3});
  const MirrorMap& mm = s.mm;
  // u(z(q)) * v(q) == 1 on both axes
  Series2 z1 = mm.z_map(1), z2 = mm.z_map(2);
  CHECK(substitute(mm.u1, z1, z2) * mm.v1 ==
        Series2::constant(mm.caps, Rat(1)));
  CHECK(substitute(mm.u2, z1, z2) * mm.v2 ==
        Series2::constant(mm.caps, Rat(1)));
}

TEST_CASE("exponential form of the units") {
  Setup s = make(Caps{7, 2});
  CHECK(s.mm.u1 == (s.ps.s1 / s.ps.pi0).exp_nilconst());
  CHECK(s.mm.u2 == (s.ps.s2 / s.ps.pi0).exp_nilconst());
}

TEST_CASE("dual derivations agree between routes and are flat") {
  Setup s = make(Caps{8, 2});
  TauDerivation td = tau_derivations(s.ps);
  CHECK(td.routes_agree);
  CHECK(td.flat_ok);
  // leading behaviour: D_a = theta_a + higher order
  CHECK(td.coef[0][0].at(0, 0) == Rat(1));
  CHECK(td.coef[0][1].at(0, 0) == Rat(0));
  CHECK(td.coef[1][0].at(0, 0) == Rat(0));
  CHECK(td.coef[1][1].at(0, 0) == Rat(1));
}

TEST_CASE("volume exponential satisfies its derivative identity") {
  Setup s = make(Caps{8, 2});
  Series2 x = x_series(s.ps, s.mm);
  CHECK(x.at(0, 0) == Rat(1));
  Series2 ratio =
      (wronskian(s.ps, 2, 2) + wronskian(s.ps, 2, 1) * rat(s.ps.params.n, 2)) /
      (s.ps.pi0 * s.ps.pi0);
  CHECK(x.theta(2) == x * (ratio - Series2::constant(Caps{8, 2}, Rat(1))));
}

TEST_CASE("sector regrouping is a plain reindexing") {
  // synthetic series: coefficient of q1^i q2^j is i + 10 j
  Caps caps{6, 2};
  Series2 f(caps);
  for (int i = 0; i <= caps.d1; ++i)
    for (int j = 0; j <= caps.d2; ++j) f.set(i, j, Rat(i + 10 * j));
  TExpansion te = t_expand(f, 4, 2);
  REQUIRE(te.f.size() == 3);
  CHECK(te.n == 4);
  for (int m = 0; m <= 2; ++m) {
    CAPTURE(m);
    // t^m pulls q1^(2m) out of the q2^m row
    CHECK(te.f[m].base_den() == 1);
    CHECK(te.f[m].lo() == -2 * m);
    CHECK(te.f[m].hi() == caps.d1 - 2 * m);
    for (int i = 0; i <= caps.d1; ++i)
      CHECK(te.f[m].coeff(i - 2 * m) == Rat(i + 10 * m));
  }
}

TEST_CASE("odd fibre degree stores half-integral exponents") {
  Caps caps{4, 1};
  Series2 f(caps);
  f.set(1, 1, Rat(7));
  TExpansion te = t_expand(f, 3, 1);
  // q1 q2 = t q1^(-1/2), scaled exponent -1 over base 2
  CHECK(te.f[1].base_den() == 2);
  CHECK(te.f[1].coeff(2 * 1 - 3) == Rat(7));
}

TEST_SUITE_END();
