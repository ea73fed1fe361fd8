#pragma once

#include "ellcy/diff_field.hpp"
#include "ellcy/logseries.hpp"
#include "ellcy/shift_op.hpp"

namespace ellcy {

struct ModelParams {
  int n = 4;
  Rat a0 = 432, a1 = Rat(5, 6), a2 = Rat(1, 6);
};

// Frobenius data of the two-operator system at the large-volume point:
//   Pi0            holomorphic, Pi0(0,0) = 1
//   Pi^a = Pi0 log z_a + S_a        (a = 1, 2)
// S_a are normalized by a vanishing (0,0) coefficient.
struct PeriodSet {
  ModelParams params;
  Caps caps;
  ShiftOp L1, L2;
  Series2 pi0, s1, s2;

  LogSeries pi0_log() const { return LogSeries::from_plain(pi0); }
  LogSeries pi1_log() const {
    return LogSeries::term(pi0, 1, 0) + LogSeries::from_plain(s1);
  }
  LogSeries pi2_log() const {
    return LogSeries::term(pi0, 0, 1) + LogSeries::from_plain(s2);
  }
};

// Solves both operators coefficient by coefficient in the (z2, z1) ordering,
// preferring L1 wherever its indicial factor d1 (d1 - n d2) is nonzero, and
// verifies the full residual of both operators afterwards.
PeriodSet frobenius_solve(const ModelParams& params, Caps caps);

struct SlicePeriod {
  Series1 plain;
  Series1 logcoef;  // coefficient of log z_a (a = the period index), zero for Pi0
};

// z2-slice i of period a in {0, 1, 2}.
SlicePeriod slice(const PeriodSet& ps, int a, int i);

struct SliceData {
  int i = 0;
  // Pi0_i = c0 z^{ni} d^{ni} F,  Pi1_i = c1 z^{ni} d^{ni} (F log z + G) + c1t Pi0_i
  Rat c0, c1, c1t;
  bool closed_form_ok = false;
  // slice i of S1 resp. S2 rewritten over log q resp. the z2-direction
  // coordinate; field expressions in (z, F, theta F)
  DiffFieldElem A, B;
  bool ab_series_ok = false;
};

SliceData slice_constants(const PeriodSet& ps, int i);

// W^{ab} = (Pi0)^2 delta_{ab} + Pi0 theta_a S_b - S_b theta_a Pi0.
// First index = derivative direction, second = solution label.  Log-free.
Series2 wronskian(const PeriodSet& ps, int a, int b);

struct NonhomReport {
  bool pi0_ok = false;  // L^{ni} Pi0_i = 0
  bool pi1_ok = false;  // L^{ni} S1_i = -(dL^{ni}/dT) Pi0_i
  bool pi2_ok = false;  // L^{ni} S2_i = n theta Pi0_i
  bool all() const { return pi0_ok && pi1_ok && pi2_ok; }
};

// Checks the one-variable equations satisfied by the z2-slices, with
// L^{m} = theta^2 - a0 z (theta+a1)(theta+a2) - m theta at m = n i.
NonhomReport nonhom_slice_check(const PeriodSet& ps, int i);

}  // namespace ellcy
