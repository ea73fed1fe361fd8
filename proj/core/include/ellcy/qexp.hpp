#pragma once

#include <map>
#include <optional>
#include <string>

#include "ellcy/rational.hpp"
#include "ellcy/series1.hpp"

namespace ellcy {

// Finite q-expansion with exponents in (1/base_den) * Z, base_den in {1, 2}.
// Each object carries the window [lo, hi] (in scaled units) on which its
// coefficients are meaningful; outside the window nothing is claimed.
//
// Window rules, which every operation must respect:
//   add:  lo = min(lo), hi = min(hi)
//   mul:  lo = lo1+lo2, hi = min(lo1+hi2, lo2+hi1)
// A series that is exactly zero must carry lo = +WINDOW_INF, otherwise a
// product against it would shrink windows that are in fact fully known.
class QExp {
 public:
  static constexpr long WINDOW_INF = 1L << 40;

  QExp() : base_den_(1), lo_(WINDOW_INF), hi_(WINDOW_INF) {}
  QExp(int base_den, long lo, long hi);

  // Exact values, known at every exponent.
  static QExp zero(int base_den = 1);
  static QExp constant(const Rat& value, int base_den = 1);
  // value * q^(num/base_den), exact.
  static QExp monomial(const Rat& value, long num, int base_den = 1);
  // Integral expansion from a univariate series, window [0, cap].
  static QExp from_series(const Series1& f);

  int base_den() const { return base_den_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  bool window_empty() const { return lo_ > hi_; }

  // Coefficient of q^(num/base_den); zero outside the stored support.
  Rat coeff(long num) const;
  void set_coeff(long num, const Rat& value);
  // Lowest stored nonzero exponent, if any.
  std::optional<long> leading_exp() const;
  bool is_zero_on_window() const;
  const std::map<long, Rat>& support() const { return c_; }

  std::optional<int> weight;  // modular weight tag when known

  QExp operator+(const QExp& o) const;
  QExp operator-(const QExp& o) const;
  QExp operator-() const;
  QExp operator*(const QExp& o) const;
  QExp operator*(const Rat& s) const;

  // Multiplicative inverse; requires the leading coefficient to sit at lo
  // (so the valuation is certain).
  QExp inverse() const;

  // q d/dq; scaled exponent e contributes a factor e/base_den.
  QExp theta() const;
  // Multiply by q^(num/base_den), shifting the window along.
  QExp shift_exp(long num) const;
  // Substitute q -> q^k (integral k >= 1).
  QExp rescale_exp(long k) const;

  QExp rebased(int base_den) const;
  // Shrink the window; coefficients outside are dropped.
  QExp windowed(long lo, long hi) const;

  // Coefficient-wise equality on [lo, hi]; throws if either window does not
  // cover the requested range, so truncation slack can never fake a pass.
  bool agrees(const QExp& o, long lo, long hi) const;

  std::string str(const std::string& var = "q") const;

 private:
  int base_den_;
  std::map<long, Rat> c_;  // scaled exponent -> coefficient
  long lo_, hi_;
  void trim();
  static long clamp(long v);
};

inline QExp operator*(const Rat& s, const QExp& f) { return f * s; }

}  // namespace ellcy
