#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellcy/mirror.hpp"
#include "ellcy/modular.hpp"
#include "ellcy/periods.hpp"
#include "ellcy/qexp.hpp"
#include "ellcy/series2.hpp"

namespace ellcy {

// Sparse bivariate polynomial over Q.  Unlike Series2 this has no caps;
// products are exact and never truncate.
struct Poly2 {
  std::map<std::pair<int, int>, Rat> c;

  static Poly2 constant(const Rat& v);
  static Poly2 monomial(const Rat& v, int e1, int e2);

  bool is_zero() const { return c.empty(); }
  Rat at(int e1, int e2) const;
  int deg(int axis) const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator-() const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(const Rat& s) const;
  bool operator==(const Poly2& o) const;

  Poly2 theta(int axis) const;  // z_i d/dz_i
  Poly2 dz(int axis) const;     // d/dz_i

  Series2 to_series(Caps caps) const;
  std::string str() const;
};

// num/den with polynomial entries, no reduction; equality cross-multiplies.
struct RationalFn2 {
  Poly2 num, den;

  RationalFn2 operator+(const RationalFn2& o) const;
  RationalFn2 operator-(const RationalFn2& o) const;
  RationalFn2 operator*(const RationalFn2& o) const;
  RationalFn2 operator*(const Rat& s) const;
  RationalFn2 dz(int axis) const;  // quotient rule
  bool equals(const RationalFn2& o) const;

  // den must be a unit at the origin
  Series2 to_series(Caps caps) const;
  std::string str() const;
};

// Fourth derivative pairing of the residue form: W^(i,j) with i + j = 4.
// `cleared` is V^(i,j) = z1^i z2^j W^(i,j), regular at the origin; p1, p2
// record the pole orders the z-prefactor actually cancels (for (0,4) the
// z2 pole is only cubic).
struct YukawaEntry {
  int i = 0, j = 0;
  int p1 = 0, p2 = 0;
  RationalFn2 w;
  RationalFn2 cleared;
};

struct YukawaSet {
  ModelParams params;
  Poly2 disc1, disc2;
  std::array<YukawaEntry, 5> entries;  // (4,0), (3,1), (2,2), (1,3), (0,4)

  const YukawaEntry& at(int i, int j) const;
  // V^(i,j) expanded to caps
  Series2 cleared_series(int i, int j, Caps caps) const;
};

// The closed-form couplings of the degree-18 four-fold example (n = 4,
// a0 = 432), denominators the two discriminant factors.
YukawaSet main_example_yukawa();

// One reduction step W^(u), |u| = 5, as a combination of first derivatives
// of the |u| = 4 couplings.
struct GriffithsTerm {
  Rat coeff;
  int axis = 1;                  // derivative direction (1-based)
  std::vector<int> source;       // multi-index of the |u| = 4 coupling
};
struct GriffithsRelation {
  std::vector<int> target;       // multi-index with |u| = 5
  std::vector<GriffithsTerm> terms;
};
struct GriffithsSet {
  int h = 2;
  std::vector<GriffithsRelation> relations;
  const GriffithsRelation& for_target(const std::vector<int>& u) const;
};

// Eliminates the order-5 pairings via integration by parts of the order-4
// ones; every W^(u) with |u| = 5 comes out as a unique combination of
// d_i W^(u') with |u'| = 4.  Supported for h in {2, 3}.
GriffithsSet griffiths_relations(int h);

struct PFConstraintReport {
  bool ok = true;
  Caps checked;                  // rectangle actually certified, per run
  // first failure, in enumeration order (operator, theta prefix, exponent)
  std::string op_tag;
  int g1 = 0, g2 = 0;
  int e1 = 0, e2 = 0;
  Rat residual;
  long constraints = 0;          // coefficient equations checked
};

// Certifies <Omega, T^gamma A Omega> = 0 for A in {L1, L2, T_i L_k} and
// |gamma| <= 5 - ord(A), with order-5 pairings eliminated through the h=2
// relations.  Exact on the reported rectangle; stops at the first nonzero
// residual.
PFConstraintReport verify_pf_constraints(const YukawaSet& ys, Caps caps);

struct DerivedYukawa {
  bool ok = false;
  int kernel_dim = 0;
  long rows = 0;
  std::array<Series2, 5> v;      // cleared couplings, V40(0,0) normalized
  std::string detail;
};

// Recovers the five cleared couplings from the operator constraints alone:
// the coefficient system on the caps rectangle must have a one-dimensional
// kernel, fixed by V40(0,0) = normalization.
DerivedYukawa derive_yukawa_series(const ModelParams& params, Caps caps,
                                   const Rat& normalization = Rat(64));

// tau-frame couplings C_{abcd}(q1, q2); components depend only on the
// number of 2-indices.
struct TauCouplings {
  Caps caps;
  std::array<Series2, 5> c;      // index = count of 2s among (a,b,c,d)
  const Series2& by_count(int twos) const;
  const Series2& component(int a, int b, int cc, int d) const;
};

// Pushes the z-frame couplings through the mirror map:
//   C = (Pi0 o z)^{-2} sum_e V^(m(e)) o z * prod_k (delta_{e_k a_k}
//        + theta_{a_k} v_{e_k} / v_{e_k})
TauCouplings to_tau(const YukawaSet& ys, const PeriodSet& ps,
                    const MirrorMap& mm);

// Base intersection data of the main example: the two divisor classes,
// their quartic numbers, and the inverse height pairing used to contract
// three-point blocks into the four-point couplings.
struct IntersectionData {
  int n = 4;
  std::array<std::string, 2> gamma_name = {
      "gamma1 = J2^2", "gamma2 = (1/17)(4 J1^2 + J1 J2)"};
  // pairing matrix applied between three-point columns (gamma1, gamma2)
  std::array<std::array<Rat, 2>, 2> hinv;
  // degree-0 three-point data C_{ab}^gamma as q1-expansions
  QExp seed(int a, int b, int gamma, int order) const;
};

IntersectionData main_intersections();

// One t-sector of the two potentials.  F carries its own q1 window; at
// sector M the expansion starts at q1^{-nM/2}.
struct ThreePointSector {
  int order = 0;                 // M
  QExp f_gamma1, f_gamma2;
  bool checks_ok = false;        // (11,11), (11,12), (11,22), (12,12)
  std::string first_mismatch;    // component tag when a pairing check fails
  long check_lo = 0, check_hi = 0;  // window the checks covered
};

struct ThreePointResult {
  bool ok = false;
  int fail_order = 0;            // first inconsistent sector, 0 when ok
  std::string fail_component;
  bool seed_checks_ok = false;   // all five t^0 components match the seeds
  std::string seed_mismatch;
  std::vector<ThreePointSector> sectors;  // M = 1 .. t_order
};

// Factorizes the tau-frame four-point couplings through three-point
// sectors, solving order by order:
//   C2222 sector M -> F_M^{gamma1},  C1222 sector M -> F_M^{gamma2},
// then replays the remaining components as consistency checks.  The
// expansions argument is indexed by the count of 2s, as in TauCouplings.
ThreePointResult solve_three_point(const std::array<TExpansion, 5>& c4,
                                   const IntersectionData& inter, int t_order,
                                   bool stop_on_mismatch = false);

struct AnomalyResult {
  bool ok = false;
  Rat k;                         // coefficient of E2 * y^2
  std::vector<Rat> pure_coeffs;  // on the eta-prefixed monomial columns
  std::vector<std::string> pure_names;
  FitResult fit;
};

// Splits f into k * E2 * y^2 plus a polynomial in E4, E6 of the given
// weight over eta^{-eta_power}, shifted by q^{q_shift}.
AnomalyResult anomaly_decompose(const QExp& f, const QExp& y, int weight,
                                int eta_power, long q_shift = 0);

// d2-graded sectors of a potential F^gamma; sector 0 comes from the seed
// data (the classical, polynomial-in-log part is not representable as a
// q-series and is omitted with a marker).
struct Potential {
  int gamma = 1;
  int n = 4;                     // sector M starts at q1^{-nM/2}
  std::string classical_note;
  std::vector<QExp> sectors;     // index = d2
};

Potential assemble_potential(const ThreePointResult& tp,
                             const IntersectionData& inter, int gamma,
                             int t_order, int order0);

struct GWTable {
  int gamma = 1;
  int max_d1 = 5, max_d2 = 2;
  std::map<std::pair<int, int>, Rat> gw;   // N_{d1,d2}
  std::map<std::pair<int, int>, Rat> bps;  // n0_{d1,d2}
  std::string note;

  std::string csv() const;
  std::string json() const;
};

// Reads N_{d1,d2} off the potential sectors and applies the genus-0
// multicover inversion n0_beta = sum_{k | beta} mu(k) N_{beta/k} / k^2.
GWTable extract_gw(const Potential& pot, int max_d1, int max_d2);

// Rebuilds the GW numbers from the BPS ones; exact round trip.
Rat multicover_sum(const GWTable& t, int d1, int d2);

}  // namespace ellcy
