#pragma once

#include <functional>
#include <vector>

#include "ellcy/rational.hpp"

namespace ellcy {

// Univariate power series truncated at degree `cap` inclusive.  Binary
// operations require matching caps; mixing caps is almost always a bug in
// this code base, so it throws rather than silently re-truncating.
class Series1 {
 public:
  Series1() : cap_(-1) {}
  explicit Series1(int cap) : cap_(cap), c_(cap + 1, Rat(0)) {}
  Series1(int cap, std::vector<Rat> coeffs);

  static Series1 constant(int cap, const Rat& value);
  static Series1 monomial(int cap, int degree, const Rat& value = 1);

  int cap() const { return cap_; }
  const Rat& at(int i) const;
  void set(int i, const Rat& value);
  bool is_zero() const;
  // Degree of the lowest nonzero term, or cap+1 when zero to the cap.
  int valuation() const;

  Series1 operator+(const Series1& o) const;
  Series1 operator-(const Series1& o) const;
  Series1 operator-() const;
  Series1 operator*(const Series1& o) const;
  Series1 operator*(const Rat& s) const;
  bool operator==(const Series1& o) const = default;

  // Multiplicative inverse; requires a nonzero constant term.
  Series1 inverse() const;
  Series1 operator/(const Series1& o) const { return *this * o.inverse(); }

  // theta = z d/dz
  Series1 theta() const;
  // d/dz, coefficient shift down.
  Series1 ddz() const;
  // Multiply by z^k (k >= 0 drops overflow; k < 0 requires valuation >= -k).
  Series1 shift(int k) const;

  Series1 pow_int(long e) const;
  // f^r for rational r; requires constant term 1.
  Series1 pow_rational(const Rat& r) const;
  // log f; requires constant term 1.
  Series1 log_unit() const;
  // exp f; requires constant term 0.
  Series1 exp_nilconst() const;
  // this(g) where g has zero constant term.
  Series1 compose(const Series1& g) const;

  std::string str(const std::string& var = "z") const;

 private:
  int cap_;
  std::vector<Rat> c_;
  void check_same(const Series1& o) const;
};

inline Series1 operator*(const Rat& s, const Series1& f) { return f * s; }

// Coefficients produced by `gen(k)` for k = 0..cap.
Series1 series1_from(int cap, const std::function<Rat(long)>& gen);

}  // namespace ellcy
