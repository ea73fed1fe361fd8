#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellcy/logseries.hpp"

namespace ellcy {

// Element of the algebra generated by z_i and T_i = z_i d/dz_i over Q, kept
// in normal form: every term is  c * z^alpha * T^beta  with all z's to the
// left.  The commutation rule T_i z_i = z_i (T_i + 1) is applied on multiply.
struct ShiftOp {
  int h = 2;
  // key: (z exponents, T exponents), both of length h
  std::map<std::pair<std::vector<int>, std::vector<int>>, Rat> terms;

  explicit ShiftOp(int h_ = 2) : h(h_) {}

  static ShiftOp constant(int h, const Rat& c);
  static ShiftOp z(int h, int axis);      // axis is 1-based
  static ShiftOp theta(int h, int axis);  // T_axis

  bool is_zero() const { return terms.empty(); }
  void add_term(std::vector<int> zexp, std::vector<int> texp, const Rat& c);

  ShiftOp operator+(const ShiftOp& o) const;
  ShiftOp operator-(const ShiftOp& o) const;
  ShiftOp operator*(const Rat& s) const;
  bool operator==(const ShiftOp& o) const;

  int max_zdeg(int axis) const;
  int max_tdeg(int axis) const;

  std::string str() const;
};

// Noncommutative product, result in normal form.
ShiftOp op_mul(const ShiftOp& a, const ShiftOp& b);

ShiftOp op_pow(const ShiftOp& a, int e);

// Formal derivative with respect to T_axis (terms lose one power of T_axis).
ShiftOp partial_theta(const ShiftOp& a, int axis);

// Limit z_k -> 0 for every k != axis: terms with positive z_k or T_k
// exponent on any other axis are dropped.
ShiftOp restrict_op(const ShiftOp& a, int axis);
// restrict is a keyword in C but not in C++; keep the plain name usable.
inline ShiftOp restrict(const ShiftOp& a, int axis) {
  return restrict_op(a, axis);
}

// Apply to a log-polynomial series.  Only h <= 2 operators act on the
// bivariate carrier; the z-shift drops coefficients past the caps, so the
// result is only meaningful up to caps - max_zdeg (see annihilates).
LogSeries apply(const ShiftOp& a, const LogSeries& f);

struct AnnihilationReport {
  bool ok = true;
  // window actually checked (caps shrunk by the operator z-degree)
  int d1 = 0, d2 = 0;
  struct Residual {
    int log1, log2, i, j;
    Rat value;
  };
  std::optional<Residual> first_residual;
};

AnnihilationReport annihilates(const ShiftOp& a, const LogSeries& f);

// Text form, e.g. "1 * T1^2 - 5/6 * z1^1 T1^1".  parse accepts the same
// grammar; whitespace between factors is flexible.
std::string op_print(const ShiftOp& a);
ShiftOp op_parse(const std::string& text, int h);

// theta1^2 - n theta1 theta2 - a0 z1 (theta1 + a1)(theta1 + a2)
ShiftOp make_L1(int n, const Rat& a0, const Rat& a1, const Rat& a2);
// theta2^n - (-1)^n z2 prod_{k=0}^{n-1} (n theta2 - theta1 + k)
ShiftOp make_L2(int n);

}  // namespace ellcy
