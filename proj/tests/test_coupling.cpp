#include "doctest.h"

#include "ellcy/coupling.hpp"
#include "ellcy/mirror.hpp"
#include "ellcy/periods.hpp"

using namespace ellcy;

namespace {

struct Stack {
  PeriodSet ps;
  MirrorMap mm;
  TauCouplings tc;
};

Stack make(Caps caps) {
  ModelParams mp;
  Stack s{frobenius_solve(mp, caps), {}, {}};
  s.mm = build_mirror(s.ps);
  s.tc = to_tau(main_example_yukawa(), s.ps, s.mm);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("coupling");

TEST_CASE("sparse polynomial arithmetic") {
  Poly2 x = Poly2::monomial(Rat(1), 1, 0);
  Poly2 y = Poly2::monomial(Rat(1), 0, 1);
  Poly2 p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.at(2, 0) == Rat(1));
  CHECK(p.at(1, 1) == Rat(0));
  CHECK(p.theta(1) == x * x * Rat(2));
  CHECK((x * y).dz(2) == x);
}

TEST_CASE("rational function quotient rule") {
  RationalFn2 f{Poly2::monomial(Rat(1), 1, 0),
                Poly2::constant(Rat(1)) - Poly2::monomial(Rat(1), 0, 1)};
  // d/dz2 of z1/(1 - z2) = z1/(1 - z2)^2
  RationalFn2 d = f.dz(2);
  RationalFn2 want{Poly2::monomial(Rat(1), 1, 0),
                   (Poly2::constant(Rat(1)) - Poly2::monomial(Rat(1), 0, 1)) *
                       (Poly2::constant(Rat(1)) - Poly2::monomial(Rat(1), 0, 1))};
  CHECK(d.equals(want));
}

TEST_CASE("closed form couplings, cleared heads") {
  YukawaSet ys = main_example_yukawa();
  const Rat heads[5] = {Rat(64), Rat(16), Rat(4), Rat(1), Rat(0)};
  for (int k = 0; k < 5; ++k) {
    const YukawaEntry& e = ys.entries[k];
    CHECK(e.i + e.j == 4);
    Series2 v = ys.cleared_series(e.i, e.j, Caps{4, 1});
    CHECK(v.at(0, 0) == heads[k]);
  }
  Series2 v40 = ys.cleared_series(4, 0, Caps{4, 0});
  CHECK(v40.at(1, 0) == Rat(110592));
  CHECK(v40.at(2, 0) == Rat(119439360));
  // the (0,4) entry only clears a cubic pole in z2
  CHECK(ys.at(0, 4).p2 == 3);
}

TEST_CASE("elimination relations close at order five") {
  GriffithsSet g2 = griffiths_relations(2);
  CHECK(g2.relations.size() == 6);
  const GriffithsRelation& top = g2.for_target({0, 5});
  REQUIRE(top.terms.size() == 1);
  CHECK(top.terms[0].coeff == Rat(5, 2));
  CHECK(top.terms[0].axis == 2);
  CHECK(top.terms[0].source == std::vector<int>{0, 4});

  const GriffithsRelation& mid = g2.for_target({2, 3});
  REQUIRE(mid.terms.size() == 2);
  for (const GriffithsTerm& t : mid.terms) {
    int total = 0;
    for (int u : t.source) total += u;
    CHECK(total == 4);
  }

  GriffithsSet g3 = griffiths_relations(3);
  CHECK(g3.h == 3);
  CHECK(!g3.relations.empty());
  for (const GriffithsRelation& r : g3.relations) {
    int total = 0;
    for (int u : r.target) total += u;
    CHECK(total == 5);
    for (const GriffithsTerm& t : r.terms) {
      int s = 0;
      for (int u : t.source) s += u;
      CHECK(s == 4);
      CHECK(t.axis >= 1);
      CHECK(t.axis <= 3);
    }
  }
}

TEST_CASE("operator constraints certify the closed forms") {
  PFConstraintReport r = verify_pf_constraints(main_example_yukawa(), Caps{8, 2});
  CHECK(r.ok);
  CHECK(r.constraints > 0);
}

TEST_CASE("an injected bump is located at its degree") {
  // clearing shifts the detection exponent five up from the bump degree
  for (int k : {4, 5}) {
    CAPTURE(k);
    YukawaSet bad = main_example_yukawa();
    RationalFn2 bump{Poly2::monomial(Rat(1), k, 0), Poly2::constant(Rat(1))};
    bad.entries[0].cleared = bad.entries[0].cleared + bump;
    PFConstraintReport r = verify_pf_constraints(bad, Caps{8, 2});
    REQUIRE_FALSE(r.ok);
    CHECK(r.e1 == 5 + k);
    CHECK(!r.op_tag.empty());
  }
}

TEST_CASE("couplings are recovered from the constraints alone") {
  ModelParams mp;
  DerivedYukawa dy = derive_yukawa_series(mp, Caps{4, 2});
  REQUIRE(dy.ok);
  CHECK(dy.kernel_dim == 1);
  YukawaSet ys = main_example_yukawa();
  const int idx[5][2] = {{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}};
  for (int k = 0; k < 5; ++k)
    CHECK(dy.v[k] == ys.cleared_series(idx[k][0], idx[k][1], Caps{4, 2}));
}

TEST_CASE("tau frame constants and symmetry") {
  Stack s = make(Caps{8, 1});
  const Rat heads[5] = {Rat(64), Rat(16), Rat(4), Rat(1), Rat(0)};
  for (int k = 0; k < 5; ++k) CHECK(s.tc.by_count(k).at(0, 0) == heads[k]);
  // component lookup only counts the twos
  CHECK(s.tc.component(1, 2, 1, 2) == s.tc.by_count(2));
  CHECK(s.tc.component(2, 1, 2, 1) == s.tc.by_count(2));
  CHECK(s.tc.component(1, 1, 1, 1) == s.tc.by_count(0));
}

TEST_CASE("three point sectors solve and check out") {
  Stack s = make(Caps{10, 2});
  std::array<TExpansion, 5> c4;
  for (int k = 0; k < 5; ++k) c4[k] = t_expand(s.tc.c[k], 4, 2);
  IntersectionData inter = main_intersections();
  ThreePointResult tp = solve_three_point(c4, inter, 2);
  REQUIRE(tp.ok);
  CHECK(tp.seed_checks_ok);
  REQUIRE(tp.sectors.size() == 2);
  CHECK(tp.sectors[0].checks_ok);
  CHECK(tp.sectors[1].checks_ok);
  // first sector starts at q1^-2 with the five-fold cover of the base line
  CHECK(tp.sectors[0].f_gamma1.coeff(-2) == Rat(-20));
  CHECK(tp.sectors[0].f_gamma2.coeff(-2) == Rat(0));

  SUBCASE("tables and multicover round trip") {
    for (int gamma : {1, 2}) {
      CAPTURE(gamma);
      Potential pot = assemble_potential(tp, inter, gamma, 2, 10);
      GWTable t = extract_gw(pot, 5, 2);
      for (const auto& [deg, value] : t.gw)
        CHECK(multicover_sum(t, deg.first, deg.second) == value);
      for (const auto& [deg, value] : t.bps)
        CHECK(value.get_den() == 1);
    }
    Potential pot = assemble_potential(tp, inter, 1, 2, 10);
    GWTable t = extract_gw(pot, 5, 2);
    // double cover of the fibre class folds into the degree (0,2) count
    CHECK(t.bps.at({0, 2}) == Rat(-820));
    CHECK(t.gw.at({0, 2}) == Rat(-825));
    CHECK(t.bps.at({0, 1}) == Rat(-20));
  }

  SUBCASE("a perturbed component is refused with its location") {
    std::array<TExpansion, 5> bad = c4;
    bad[0].f[2].set_coeff(-4, bad[0].f[2].coeff(-4) + Rat(1));
    ThreePointResult tb = solve_three_point(bad, inter, 2);
    CHECK_FALSE(tb.ok);
    CHECK(tb.fail_order == 2);
    CHECK(tb.fail_component == "(11,11)");
    CHECK_THROWS_AS(assemble_potential(tb, inter, 1, 2, 10),
                    std::runtime_error);
  }

  SUBCASE("degree zero column comes from the seeds") {
    Potential pot = assemble_potential(tp, inter, 2, 2, 10);
    GWTable t = extract_gw(pot, 5, 1);
    const Rat row[6] = {Rat(0),    Rat(960),  Rat(1920),
                        Rat(2880), Rat(3840), Rat(4800)};
    for (int d = 0; d <= 5; ++d) CHECK(t.bps.at({d, 0}) == row[d]);
    CHECK(!pot.classical_note.empty());
  }
}

TEST_CASE("extraction refuses windows it cannot see") {
  Stack s = make(Caps{8, 1});
  std::array<TExpansion, 5> c4;
  for (int k = 0; k < 5; ++k) c4[k] = t_expand(s.tc.c[k], 4, 1);
  IntersectionData inter = main_intersections();
  ThreePointResult tp = solve_three_point(c4, inter, 1);
  REQUIRE(tp.ok);
  Potential pot = assemble_potential(tp, inter, 1, 1, 8);
  CHECK_THROWS(extract_gw(pot, 9, 1));
  CHECK_THROWS(assemble_potential(tp, inter, 3, 1, 8));
}

TEST_SUITE_END();
