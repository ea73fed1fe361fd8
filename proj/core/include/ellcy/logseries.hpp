#pragma once

#include <map>

#include "ellcy/series2.hpp"

namespace ellcy {

// Polynomial in log z1, log z2 with Series2 coefficients.  Key (p, q) is the
// pair of log exponents.  theta acts with the usual lowering rule
// theta_1 (log z1)^p = p (log z1)^{p-1}.
class LogSeries {
 public:
  LogSeries() = default;
  explicit LogSeries(Caps caps) : caps_(caps) {}

  static LogSeries from_plain(const Series2& f);
  // f * (log z1)^p (log z2)^q
  static LogSeries term(const Series2& f, int p, int q);

  Caps caps() const { return caps_; }
  // Zero series at the ambient caps when the part is absent.
  Series2 part(int p, int q) const;
  void set_part(int p, int q, const Series2& f);
  bool is_zero() const;
  int max_logdeg(int axis) const;

  LogSeries operator+(const LogSeries& o) const;
  LogSeries operator-(const LogSeries& o) const;
  LogSeries operator*(const LogSeries& o) const;
  LogSeries operator*(const Rat& s) const;
  bool operator==(const LogSeries& o) const;

  LogSeries theta(int axis) const;
  LogSeries shift(int k1, int k2) const;

  const std::map<std::pair<int, int>, Series2>& parts() const { return parts_; }

 private:
  Caps caps_{0, 0};
  std::map<std::pair<int, int>, Series2> parts_;
  void drop_zero();
};

}  // namespace ellcy
