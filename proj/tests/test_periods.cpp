#include "doctest.h"

#include "ellcy/periods.hpp"
#include "ellcy/presets.hpp"

using namespace ellcy;

namespace {

Rat fact(int m) {
  Rat r(1);
  for (int k = 2; k <= m; ++k) r = r * Rat(k);
  return r;
}

// Degree-18 hypersurface coefficients; zero below the d1 >= 4 d2 cone.
Rat holo_coeff(int d1, int d2) {
  if (d1 < 4 * d2) return Rat(0);
  return fact(6 * d1) /
         (fact(3 * d1) * fact(2 * d1) * fact(d1 - 4 * d2) *
          fact(d2) * fact(d2) * fact(d2) * fact(d2));
}

}  // namespace

TEST_SUITE_BEGIN("periods");

TEST_CASE("holomorphic solution has the factorial coefficients") {
  ModelParams mp;
  Caps caps{9, 2};
  PeriodSet ps = frobenius_solve(mp, caps);
  for (int i = 0; i <= caps.d1; ++i)
    for (int j = 0; j <= caps.d2; ++j)
      CHECK(ps.pi0.at(i, j) == holo_coeff(i, j));
  CHECK(ps.s1.at(0, 0) == Rat(0));
  CHECK(ps.s2.at(0, 0) == Rat(0));
}

TEST_CASE("single log tails start as recorded") {
  ModelParams mp;
  PeriodSet ps = frobenius_solve(mp, Caps{6, 1});
  // fibre-direction tail of the second log period
  CHECK(ps.s2.at(0, 0) == Rat(0));
  CHECK(ps.s2.at(1, 0) == Rat(240));
  CHECK(ps.s2.at(2, 0) == Rat(83160));
}

TEST_CASE("all grid presets are annihilated") {
  for (const PFSystemPreset& p : preset_registry()) {
    if (p.family != "grid") continue;
    CAPTURE(p.name);
    ModelParams mp{*p.n, *p.a0, *p.a1, *p.a2};
    PeriodSet ps = frobenius_solve(mp, Caps{8, 2});
    for (const ShiftOp* op : {&ps.L1, &ps.L2}) {
      CHECK(annihilates(*op, ps.pi0_log()).ok);
      CHECK(annihilates(*op, ps.pi1_log()).ok);
      CHECK(annihilates(*op, ps.pi2_log()).ok);
    }
  }
}

TEST_CASE("a wrong indicial offset leaves a residual") {
  ModelParams mp;
  PeriodSet ps = frobenius_solve(mp, Caps{6, 1});
  ShiftOp wrong = make_L1(4, Rat(432), Rat(5, 6), Rat(1, 3));
  AnnihilationReport r = annihilates(wrong, ps.pi0_log());
  CHECK_FALSE(r.ok);
  REQUIRE(r.first_residual.has_value());
  CHECK(r.first_residual->value != Rat(0));
}

TEST_CASE("slice constants match the closed forms") {
  ModelParams mp;
  // the resummation of slice i needs 4i columns
  PeriodSet ps = frobenius_solve(mp, Caps{16, 4});
  const Rat want[5] = {Rat(1), Rat(1), Rat(1, 16), Rat(1, 1296),
                       Rat(1, 331776)};
  for (int i = 0; i <= 4; ++i) {
    CAPTURE(i);
    SliceData sd = slice_constants(ps, i);
    CHECK(sd.c0 == want[i]);
    CHECK(sd.c1 == want[i]);
    CHECK(sd.c1t == Rat(0));
    CHECK(sd.closed_form_ok);
    CHECK(sd.ab_series_ok);
  }
}

TEST_CASE("slice images under the one-variable operator") {
  ModelParams mp;
  PeriodSet ps = frobenius_solve(mp, Caps{10, 3});
  for (int i = 0; i <= 3; ++i) {
    CAPTURE(i);
    NonhomReport r = nonhom_slice_check(ps, i);
    CHECK(r.pi0_ok);
    CHECK(r.pi1_ok);
    CHECK(r.pi2_ok);
  }
}

TEST_CASE("wronskian inverts the fibre discriminant on the slice") {
  ModelParams mp;
  Caps caps{12, 2};
  PeriodSet ps = frobenius_solve(mp, caps);
  Series1 w = wronskian(ps, 1, 1).slice(0);
  Series1 disc(caps.d1);
  disc.set(0, Rat(1));
  disc.set(1, Rat(-432));
  CHECK(w * disc == Series1::constant(caps.d1, Rat(1)));
}

TEST_CASE("wronskian entries vanish at the origin except on the diagonal") {
  ModelParams mp;
  PeriodSet ps = frobenius_solve(mp, Caps{6, 2});
  CHECK(wronskian(ps, 1, 1).at(0, 0) == Rat(1));
  CHECK(wronskian(ps, 2, 2).at(0, 0) == Rat(1));
  CHECK(wronskian(ps, 1, 2).at(0, 0) == Rat(0));
  CHECK(wronskian(ps, 2, 1).at(0, 0) == Rat(0));
}

TEST_SUITE_END();
