// End-to-end gate for the library: nine checks, one line each, every
// comparison an exact rational equality.  Exit 0 only when all nine pass.

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include "ellcy/coupling.hpp"
#include "ellcy/mirror.hpp"
#include "ellcy/modular.hpp"
#include "ellcy/periods.hpp"
#include "ellcy/presets.hpp"

using namespace ellcy;

namespace {

int failures = 0;

void report(int k, bool ok, const std::string& what) {
  std::cout << "[" << k << "/9] " << (ok ? "PASS" : "FAIL") << "  " << what
            << std::endl;
  if (!ok) ++failures;
}

Rat fact(int m) {
  Rat r(1);
  for (int i = 2; i <= m; ++i) r = r * Rat(i);
  return r;
}

bool rats_equal(const std::vector<Rat>& got, const std::vector<Rat>& want) {
  if (got.size() != want.size()) return false;
  for (size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i]) return false;
  return true;
}

// Looks up a named coefficient in a fit result; missing names count as a
// mismatch, not zero.
bool fit_has(const FitResult& r, const std::string& name, const Rat& value) {
  for (size_t i = 0; i < r.names.size(); ++i)
    if (r.names[i] == name) return r.coeffs[i] == value;
  return false;
}

}  // namespace

int main() {
  ModelParams mp;  // n = 4, a0 = 432, a1 = 5/6, a2 = 1/6 throughout

  // 1. the holomorphic solution carries the factorial coefficients
  {
    Caps caps{8, 2};
    PeriodSet ps = frobenius_solve(mp, caps);
    bool ok = true;
    for (int i = 0; i <= caps.d1 && ok; ++i)
      for (int j = 0; j <= caps.d2 && ok; ++j) {
        Rat want = i >= 4 * j
                       ? fact(6 * i) / (fact(3 * i) * fact(2 * i) *
                                        fact(i - 4 * j) * fact(j) * fact(j) *
                                        fact(j) * fact(j))
                       : Rat(0);
        ok = ps.pi0.at(i, j) == want;
      }
    report(1, ok, "holomorphic solution coefficients, both variables");
  }

  // 2. leading constants of the first six fibre slices
  {
    PeriodSet ps = frobenius_solve(mp, Caps{20, 5});
    const Rat want[6] = {Rat(1),       Rat(1),
                         Rat(1, 16),   Rat(1, 1296),
                         Rat(1, 331776), Rat(1, 207360000)};
    bool ok = true;
    for (int i = 0; i <= 5; ++i) {
      SliceData sd = slice_constants(ps, i);
      ok = ok && sd.c0 == want[i] && sd.c1 == want[i] && sd.c1t == Rat(0) &&
           sd.closed_form_ok && sd.ab_series_ok;
    }
    report(2, ok, "slice constants including the hypergeometric resummation");
  }

  // 3. modular pullback of the fibre family
  {
    ModRepReport r = verify_modrep(12);
    report(3, r.ok(), "quartic and derivative identities under z(q)");
  }

  // 4. tau frame couplings restrict to the intersection numbers
  {
    PeriodSet ps = frobenius_solve(mp, Caps{8, 1});
    MirrorMap mm = build_mirror(ps);
    TauCouplings tc = to_tau(main_example_yukawa(), ps, mm);
    const Rat want[5] = {Rat(64), Rat(16), Rat(4), Rat(1), Rat(0)};
    bool ok = true;
    for (int k = 0; k < 5; ++k) ok = ok && tc.by_count(k).at(0, 0) == want[k];
    report(4, ok, "coupling constant terms in the flat frame");
  }

  // shared stack for 5, 6, 7: two sectors at generous caps
  Caps big{14, 2};
  PeriodSet ps = frobenius_solve(mp, big);
  MirrorMap mm = build_mirror(ps);
  TauCouplings tc = to_tau(main_example_yukawa(), ps, mm);
  std::array<TExpansion, 5> c4;
  for (int k = 0; k < 5; ++k) c4[k] = t_expand(tc.c[k], mp.n, 2);
  IntersectionData inter = main_intersections();
  ThreePointResult tp = solve_three_point(c4, inter, 2);

  // 5. first two fibre-volume sectors of the top coupling are quasi modular
  {
    bool ok = tp.ok;
    const TExpansion& te = c4[4];
    FitResult f1 = fit(te.f[1], 22, 1, -48, 0, 0);
    ok = ok && f1.ok && f1.names.size() == 2 &&
         fit_has(f1, "E4*E6^3", rat(-185, 9)) &&
         fit_has(f1, "E4^4*E6", rat(-175, 9));
    AnomalyResult an = anomaly_decompose(te.f[2], te.f[1], 46, -96, 0);
    ok = ok && an.ok && an.k == rat(-5, 24);
    std::vector<Rat> want = {rat(-5 * 12377569L, 124416),
                             rat(-5 * 85433141L, 124416),
                             rat(-5 * 86392307L, 124416),
                             rat(-5 * 11544823L, 124416)};
    std::vector<std::string> names = {"E4^10*E6", "E4^7*E6^3", "E4^4*E6^5",
                                      "E4*E6^7"};
    ok = ok && rats_equal(an.pure_coeffs, want) && an.pure_names == names;
    report(5, ok, "coupling sectors: weight-22 bracket, then the E2 anomaly");
  }

  // 6. first potential: sector one closed form and the fibre-degree-1 counts
  {
    bool ok = tp.ok && tp.seed_checks_ok;
    FitResult f1 = fit(tp.sectors[0].f_gamma1, 22, 1, -48, 0, 0);
    ok = ok && f1.ok && fit_has(f1, "E4*E6^3", rat(-185, 18)) &&
         fit_has(f1, "E4^4*E6", rat(-175, 18));
    Potential pot = assemble_potential(tp, inter, 1, 2, big.d1);
    GWTable t = extract_gw(pot, 5, 2);
    const Rat row[6] = {Rat(-20),          Rat(7680),
                        Rat(-1800000),     Rat(278394880),
                        Rat(623056099920), Rat(97531011394560)};
    for (int d = 0; d <= 5; ++d) ok = ok && t.bps.at({d, 1}) == row[d];
    report(6, ok, "first potential: eta^-48 bracket and integral counts");
  }

  // 7. second potential fit, and the sector-two anomaly of the first
  {
    bool ok = tp.ok;
    FitResult f2 = fit(tp.sectors[0].f_gamma2, 24, 1, -48, 0, 1);
    ok = ok && f2.ok && fit_has(f2, "E6^4", rat(49925, 10368)) &&
         fit_has(f2, "E4^3*E6^2", rat(147955, 5184)) &&
         fit_has(f2, "E4^6", rat(51605, 10368)) &&
         fit_has(f2, "E4*E6^3", rat(-185, 9)) &&
         fit_has(f2, "E2*E4*E6^3", rat(185, 216)) &&
         fit_has(f2, "E4^4*E6", rat(-175, 9)) &&
         fit_has(f2, "E2*E4^4*E6", rat(175, 216));
    AnomalyResult an = anomaly_decompose(tp.sectors[1].f_gamma1,
                                         tp.sectors[0].f_gamma1, 46, -96, 0);
    ok = ok && an.ok && an.k == rat(-1, 12);
    std::vector<Rat> want = {rat(-5 * 29908007L, 2985984),
                             rat(-5 * 207234483L, 2985984),
                             rat(-5 * 208392741L, 2985984),
                             rat(-5 * 27245569L, 2985984)};
    ok = ok && rats_equal(an.pure_coeffs, want);
    report(7, ok, "second potential bracket with its quasi modular tail");
  }

  // 8. structural property suite across the registry
  {
    bool ok = true;
    std::string first_bad;
    auto note = [&](bool cond, const std::string& tag) {
      if (!cond && first_bad.empty()) first_bad = tag;
      ok = ok && cond;
    };
    for (const PFSystemPreset& p : preset_registry()) {
      if (p.family != "grid") continue;
      ModelParams gp{*p.n, *p.a0, *p.a1, *p.a2};
      PeriodSet gps = frobenius_solve(gp, Caps{10, 3});
      for (const ShiftOp* op : {&gps.L1, &gps.L2})
        for (const LogSeries& f :
             {gps.pi0_log(), gps.pi1_log(), gps.pi2_log()})
          note(annihilates(*op, f).ok, "annihilation " + p.name);
    }
    {
      PeriodSet m = frobenius_solve(mp, Caps{12, 3});
      for (int i = 0; i <= 3; ++i) {
        SliceData sd = slice_constants(m, i);
        note(sd.closed_form_ok && sd.ab_series_ok, "slice closed forms");
        note(nonhom_slice_check(m, i).all(), "slice images");
      }
      Series1 w = wronskian(m, 1, 1).slice(0);
      Series1 disc(12);
      disc.set(0, Rat(1));
      disc.set(1, Rat(-432));
      note(w * disc == Series1::constant(12, Rat(1)), "fibre wronskian");
      MirrorMap mmm = build_mirror(m);
      Series2 x = x_series(m, mmm);
      Series2 ratio =
          (wronskian(m, 2, 2) + wronskian(m, 2, 1) * rat(mp.n, 2)) /
          (m.pi0 * m.pi0);
      note(x.theta(2) ==
               x * (ratio - Series2::constant(Caps{12, 3}, Rat(1))),
           "volume derivative");
    }
    for (const PFSystemPreset& p : preset_registry())
      for (const PresetLimit& li : p.limits) {
        bool found = false;
        for (const ShiftOp& g : p.generators)
          if (restrict_op(g, li.axis) == li.op) found = true;
        note(found, "limit " + p.name);
      }
    for (int gamma : {1, 2}) {
      Potential pot = assemble_potential(tp, inter, gamma, 2, big.d1);
      GWTable t = extract_gw(pot, 5, 2);
      for (const auto& [deg, value] : t.gw)
        note(multicover_sum(t, deg.first, deg.second) == value,
             "multicover");
    }
    report(8, ok,
           ok ? "annihilation, slices, wronskians, limits, multicover"
              : "property suite, first failure: " + first_bad);
  }

  // 9. deliberate corruption is caught where it was injected
  {
    bool ok = true;
    for (int k : {5, 6}) {
      YukawaSet bad = main_example_yukawa();
      RationalFn2 bump{Poly2::monomial(Rat(1), k, 0), Poly2::constant(Rat(1))};
      bad.entries[0].cleared = bad.entries[0].cleared + bump;
      PFConstraintReport r = verify_pf_constraints(bad, Caps{10, 3});
      ok = ok && !r.ok && r.e1 == 5 + k;
    }
    std::array<TExpansion, 5> badc = c4;
    badc[0].f[2].set_coeff(-4, badc[0].f[2].coeff(-4) + Rat(1));
    ThreePointResult tb = solve_three_point(badc, inter, 2);
    ok = ok && !tb.ok && tb.fail_order == 2 && tb.fail_component == "(11,11)";
    bool threw = false;
    try {
      assemble_potential(tb, inter, 1, 2, big.d1);
    } catch (const std::exception&) {
      threw = true;
    }
    ok = ok && threw;
    report(9, ok, "injected defects located at their degree and order");
  }

  if (failures == 0)
    std::cout << "acceptance: all 9 criteria passed" << std::endl;
  else
    std::cout << "acceptance: " << (9 - failures) << "/9 criteria passed"
              << std::endl;
  return failures == 0 ? 0 : 1;
}
