#pragma once

#include <vector>

#include "ellcy/series1.hpp"
#include "ellcy/shift_op.hpp"

namespace ellcy {

struct HGParams {
  std::vector<Rat> upper;  // a_1..a_p
  std::vector<Rat> lower;  // b_1..b_q
};

// Generalized hypergeometric series sum_k prod(a_i)_k / (prod(b_j)_k k!) z^k.
// Lower parameters must avoid 0, -1, -2, ... within the expansion order.
Series1 pfq(const HGParams& params, int order);

// For lower parameters all 1 (q = p-1) the equation has the second solution
// G + F log z; this returns G:
//   G = sum_k [prod (a_i)_k / (k!)^p] [sum_j sum_{i<k} (1/(a_j+i) - 1/(1+i))] z^k
Series1 log_companion(const std::vector<Rat>& upper, int order);

// Univariate annihilator T prod(T + b_j - 1) - z prod(T + a_i).
ShiftOp gauss_operator(const HGParams& params);

struct NegIntLimitReport {
  bool ok = true;
  int order = 0;
  // first failing exponent when the two routes disagree
  int mismatch_at = -1;
};

// Degenerate lower parameter b -> -m for 2F1(a1, a2; b | z).  The scaled
// limit of F / Gamma(b) stays finite; both routes are series-exact:
//   left:  coefficient_k = (a1)_k (a2)_k / (k! (k-m-1)!)       for k > m
//   right: (a1)_{m+1} (a2)_{m+1} / (m+1)!  z^{m+1} 2F1(a1+m+1, a2+m+1; m+2 | z)
// The left side uses 1/Gamma(b+k) -> 1/(k-m-1)! at b = -m, which kills every
// coefficient with k <= m.
NegIntLimitReport limit_b_to_negint_check(const Rat& a1, const Rat& a2, int m, int order);

}  // namespace ellcy
