#include "doctest.h"

#include "ellcy/modular.hpp"

using namespace ellcy;

TEST_SUITE_BEGIN("modular");

TEST_CASE("eisenstein heads") {
  QExp e2 = eisenstein(2, 8), e4 = eisenstein(4, 8), e6 = eisenstein(6, 8);
  CHECK(e2.coeff(0) == Rat(1));
  CHECK(e2.coeff(1) == Rat(-24));
  CHECK(e2.coeff(2) == Rat(-72));
  CHECK(e4.coeff(1) == Rat(240));
  CHECK(e4.coeff(2) == Rat(2160));
  CHECK(e6.coeff(1) == Rat(-504));
  CHECK(e6.coeff(2) == Rat(-16632));
}

TEST_CASE("ramanujan derivative system") {
  int n = 24;
  QExp e2 = eisenstein(2, n), e4 = eisenstein(4, n), e6 = eisenstein(6, n);
  CHECK(e2.theta().agrees((e2 * e2 - e4) * rat(1, 12), 0, n));
  CHECK(e4.theta().agrees((e2 * e4 - e6) * rat(1, 3), 0, n));
  CHECK(e6.theta().agrees((e2 * e6 - e4 * e4) * rat(1, 2), 0, n));
}

TEST_CASE("discriminant from the weight graded generators") {
  int n = 20;
  QExp e4 = eisenstein(4, n), e6 = eisenstein(6, n);
  QExp delta = (e4 * e4 * e4 - e6 * e6) * rat(1, 1728);
  QExp eta24 = eta_pow(24, n);
  CHECK(delta.coeff(0) == Rat(0));
  CHECK(delta.agrees(eta24, 1, n - 3));
  CHECK(eta24.coeff(1) == Rat(1));
  CHECK(eta24.coeff(2) == Rat(-24));
  // negative powers invert exactly
  CHECK((eta_pow(-48, n) * eta_pow(48, n)).agrees(QExp::constant(Rat(1)), 2, n - 2));
}

TEST_CASE("quartic theta relations at level two") {
  int n = 20;
  // stored in the halved nome, where all four quartic powers are integral
  QExp a = theta2_4(n), b = theta3_4(n);
  CHECK(a.coeff(1) == Rat(16));
  CHECK(a.coeff(2) == Rat(0));
  CHECK(a.coeff(3) == Rat(64));
  CHECK(b.coeff(1) == Rat(8));
  // the complementary quartic power is the alternating twin of b
  QExp c = b - a;
  for (int k = 0; k <= n; ++k)
    CHECK(c.coeff(k) == (k % 2 ? -b.coeff(k) : b.coeff(k)));
  // doubling the nome closes the quartic relation against E4
  QExp e4 = eisenstein(4, n / 2).rescale_exp(2);
  CHECK(e4.agrees(b * b - a * b + a * a, 0, n - 1));
}

TEST_CASE("j line inverse both routes") {
  int n = 16;
  QExp zq = z_of_q(n);
  Series1 zs = z_of_q_series(n);
  for (int k = 0; k <= n; ++k) CHECK(zq.coeff(k) == zs.at(k));
  // same expansion the two-variable mirror map degenerates to
  CHECK(zs.at(0) == Rat(0));
  CHECK(zs.at(1) == Rat(1));
  CHECK(zs.at(2) == Rat(-312));
  CHECK(zs.at(3) == Rat(87084));
  CHECK(zs.at(4) == Rat(-23067968));
}

TEST_CASE("pullback identities hold") {
  ModRepReport r = verify_modrep(10);
  CHECK(r.quartic_ok);
  CHECK(r.deriv_ok);
  CHECK(static_cast<bool>(r));
}

TEST_CASE("level generator sets") {
  GeneratorSet g1 = level_generators(1, 10);
  REQUIRE(g1.gens.size() == g1.names.size());
  CHECK(g1.level == 1);
  bool has_e4 = false;
  for (size_t i = 0; i < g1.names.size(); ++i)
    if (g1.names[i] == "E4") {
      has_e4 = true;
      CHECK(g1.gens[i].coeff(1) == Rat(240));
    }
  CHECK(has_e4);
  CHECK(g1.quasi.coeff(1) == Rat(-24));
}

TEST_CASE("fit recovers a known cusp form combination") {
  int n = 24;
  QExp e4 = eisenstein(4, n), e6 = eisenstein(6, n);
  QExp f = e4 * e4 * e4 * Rat(3) - e6 * e6 * rat(1, 2);
  FitResult r = fit(f, 12, 1, 0, 0, 0);
  REQUIRE(r.ok);
  REQUIRE(r.names.size() == 2);
  for (size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == "E4^3") CHECK(r.coeffs[i] == Rat(3));
    if (r.names[i] == "E6^2") CHECK(r.coeffs[i] == rat(-1, 2));
  }
  CHECK(r.margin >= 3);
  CHECK(r.unique);
}

TEST_CASE("fit finds quasi modular pieces") {
  int n = 24;
  QExp e2 = eisenstein(2, n), e4 = eisenstein(4, n);
  FitResult r = fit(e2 * e4, 6, 1, 0, 0, 1);
  REQUIRE(r.ok);
  for (size_t i = 0; i < r.names.size(); ++i) {
    if (r.names[i] == "E2*E4") CHECK(r.coeffs[i] == Rat(1));
    if (r.names[i] == "E6") CHECK(r.coeffs[i] == Rat(0));
  }
}

TEST_CASE("fit refuses thin windows") {
  // two unknowns over three coefficients leaves margin 1, under the floor
  QExp e4 = eisenstein(4, 2);
  QExp f = e4 * e4 * e4;
  FitResult r = fit(f, 12, 1, 0, 0, 0);
  CHECK_FALSE(r.ok);
  CHECK(!r.detail.empty());
}

TEST_CASE("wrong weight cannot be forced") {
  int n = 24;
  QExp e4 = eisenstein(4, n);
  FitResult r = fit(e4 * e4 * e4, 10, 1, 0, 0, 0);
  CHECK_FALSE(r.ok);
}

TEST_SUITE_END();
