#include "doctest.h"

#include "ellcy/presets.hpp"
#include "ellcy/shift_op.hpp"

using namespace ellcy;

TEST_SUITE_BEGIN("shift_ops");

TEST_CASE("normal ordering of theta past z") {
  ShiftOp t1 = ShiftOp::theta(2, 1);
  ShiftOp z1 = ShiftOp::z(2, 1);
  // T z = z T + z on the same axis
  ShiftOp expected(2);
  expected.add_term({1, 0}, {1, 0}, Rat(1));
  expected.add_term({1, 0}, {0, 0}, Rat(1));
  CHECK(op_mul(t1, z1) == expected);
  // across axes everything commutes
  ShiftOp z2 = ShiftOp::z(2, 2);
  CHECK(op_mul(t1, z2) == op_mul(z2, t1));
}

TEST_CASE("product is associative and distributes") {
  ShiftOp a = make_L1(4, Rat(432), Rat(5, 6), Rat(1, 6));
  ShiftOp b = make_L2(4);
  ShiftOp c = op_mul(ShiftOp::theta(2, 2), ShiftOp::z(2, 1));
  CHECK(op_mul(op_mul(a, b), c) == op_mul(a, op_mul(b, c)));
  CHECK(op_mul(a + b, c) == op_mul(a, c) + op_mul(b, c));
  CHECK(op_pow(ShiftOp::theta(2, 1), 3) ==
        op_mul(ShiftOp::theta(2, 1),
               op_mul(ShiftOp::theta(2, 1), ShiftOp::theta(2, 1))));
}

TEST_CASE("partial derivative in theta") {
  ShiftOp t1 = ShiftOp::theta(2, 1);
  ShiftOp sq = op_mul(t1, t1);
  CHECK(partial_theta(sq, 1) == t1 * Rat(2));
  CHECK(partial_theta(ShiftOp::z(2, 1), 1).is_zero());
}

TEST_CASE("print parse round trip") {
  for (const ShiftOp& op : {make_L1(4, Rat(432), Rat(5, 6), Rat(1, 6)),
                            make_L2(3), make_L2(4),
                            make_L1(3, Rat(27), Rat(2, 3), Rat(1, 3))}) {
    CHECK(op_parse(op_print(op), op.h) == op);
  }
}

TEST_CASE("restriction to one axis") {
  ShiftOp L1 = make_L1(4, Rat(432), Rat(5, 6), Rat(1, 6));
  // dropping z2/T2 terms removes exactly the mixed theta term
  ShiftOp t1 = ShiftOp::theta(2, 1);
  ShiftOp expect = op_mul(t1, t1) -
                   op_mul(ShiftOp::z(2, 1) * Rat(432),
                          op_mul(t1 + ShiftOp::constant(2, Rat(5, 6)),
                                 t1 + ShiftOp::constant(2, Rat(1, 6))));
  CHECK(restrict_op(L1, 1) == expect);

  // L2 on axis 2 keeps theta2^n and the k-shifted product without theta1
  ShiftOp L2 = make_L2(4);
  ShiftOp r = restrict_op(L2, 2);
  CHECK(r.max_tdeg(1) == 0);
  CHECK(r.max_zdeg(1) == 0);
  CHECK(r.max_tdeg(2) == 4);
}

TEST_CASE("preset registry is closed under parsing") {
  CHECK(presets_version() >= 1);
  const auto& reg = preset_registry();
  int grid = 0, survey = 0;
  for (const PFSystemPreset& p : reg) {
    if (p.family == "grid") ++grid;
    if (p.family == "survey") ++survey;
    CHECK(!p.generators.empty());
    for (const ShiftOp& g : p.generators)
      CHECK(op_parse(op_print(g), g.h) == g);
    CHECK(find_preset(p.name) == &p);
  }
  CHECK(grid == 8);
  CHECK(survey == 9);
  CHECK(find_preset("no-such-system") == nullptr);
}

TEST_CASE("grid presets build from their parameters") {
  for (const PFSystemPreset& p : preset_registry()) {
    if (p.family != "grid") continue;
    REQUIRE(p.has_params());
    ShiftOp L1 = make_L1(*p.n, *p.a0, *p.a1, *p.a2);
    ShiftOp L2 = make_L2(*p.n);
    bool found1 = false, found2 = false;
    for (const ShiftOp& g : p.generators) {
      if (g == L1) found1 = true;
      if (g == L2) found2 = true;
    }
    CHECK(found1);
    CHECK(found2);
  }
}

TEST_SUITE_END();
