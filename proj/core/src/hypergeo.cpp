#include "ellcy/hypergeo.hpp"

#include <stdexcept>

namespace ellcy {

Series1 pfq(const HGParams& params, int order) {
  for (const Rat& b : params.lower)
    if (rat_is_integer(b) && b <= 0 && -b < order)
      throw std::domain_error("pfq: lower parameter hits a nonpositive integer");
  Series1 f(order);
  Rat term = 1;
  f.set(0, term);
  for (int k = 0; k < order; ++k) {
    for (const Rat& a : params.upper) term *= a + k;
    for (const Rat& b : params.lower) term /= b + k;
    term /= k + 1;
    f.set(k + 1, term);
  }
  return f;
}

Series1 log_companion(const std::vector<Rat>& upper, int order) {
  int p = static_cast<int>(upper.size());
  Series1 g(order);
  Rat factor = 1;      // prod (a_i)_k / (k!)^p
  Rat harmonic = 0;    // sum_j sum_{i<k} (1/(a_j+i) - 1/(1+i))
  for (int k = 1; k <= order; ++k) {
    for (const Rat& a : upper) {
      factor *= a + (k - 1);
      harmonic += 1 / (a + (k - 1));
    }
    factor /= rat_pow(Rat(k), p);
    harmonic -= rat(p, k);
    g.set(k, factor * harmonic);
  }
  return g;
}

ShiftOp gauss_operator(const HGParams& params) {
  ShiftOp t = ShiftOp::theta(1, 1);
  ShiftOp left = t;
  for (const Rat& b : params.lower) left = op_mul(left, t + ShiftOp::constant(1, b - 1));
  ShiftOp right = ShiftOp::constant(1, 1);
  for (const Rat& a : params.upper) right = op_mul(right, t + ShiftOp::constant(1, a));
  return left - op_mul(ShiftOp::z(1, 1), right);
}

NegIntLimitReport limit_b_to_negint_check(const Rat& a1, const Rat& a2, int m, int order) {
  NegIntLimitReport rep;
  rep.order = order;
  if (m < 0) throw std::invalid_argument("limit_b_to_negint_check: m must be >= 0");

  Series1 left(order);
  for (int k = m + 1; k <= order; ++k)
    left.set(k, pochhammer(a1, k) * pochhammer(a2, k) / (factorial(k) * factorial(k - m - 1)));

  HGParams shifted{{a1 + m + 1, a2 + m + 1}, {Rat(m + 2)}};
  Series1 tail = pfq(shifted, order);
  Rat scale = pochhammer(a1, m + 1) * pochhammer(a2, m + 1) / factorial(m + 1);
  Series1 right(order);
  for (int k = 0; k + m + 1 <= order; ++k) right.set(k + m + 1, tail.at(k) * scale);

  for (int k = 0; k <= order; ++k)
    if (left.at(k) != right.at(k)) {
      rep.ok = false;
      rep.mismatch_at = k;
      break;
    }
  return rep;
}

}  // namespace ellcy
