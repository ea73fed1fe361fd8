#pragma once

#include <utility>
#include <vector>

#include "ellcy/rational.hpp"
#include "ellcy/series1.hpp"

namespace ellcy {

struct Caps {
  int d1 = -1;
  int d2 = -1;
  bool operator==(const Caps&) const = default;
};

// Bivariate power series truncated at z1^d1 z2^d2 (rectangular window,
// inclusive).  Storage is dense; the working caps in this project are small
// (z2 degree <= 4) so sparse bookkeeping is not worth it.
class Series2 {
 public:
  Series2() = default;
  explicit Series2(Caps caps);
  Series2(int d1, int d2) : Series2(Caps{d1, d2}) {}

  static Series2 constant(Caps caps, const Rat& value);
  static Series2 monomial(Caps caps, int i, int j, const Rat& value = 1);
  // Embed a univariate series as the z2^0 slice.
  static Series2 from_slice0(Caps caps, const Series1& f);

  Caps caps() const { return caps_; }
  const Rat& at(int i, int j) const;
  void set(int i, int j, const Rat& value);
  bool is_zero() const;

  Series2 operator+(const Series2& o) const;
  Series2 operator-(const Series2& o) const;
  Series2 operator-() const;
  Series2 operator*(const Series2& o) const;
  Series2 operator*(const Rat& s) const;
  bool operator==(const Series2& o) const = default;

  Series2 inverse() const;
  Series2 operator/(const Series2& o) const { return *this * o.inverse(); }

  // theta_axis = z_axis d/dz_axis, axis in {1,2}.
  Series2 theta(int axis) const;
  // Multiply by z1^k1 z2^k2; negative shifts require matching valuation.
  Series2 shift(int k1, int k2) const;

  Series2 pow_int(long e) const;
  Series2 pow_rational(const Rat& r) const;
  Series2 log_unit() const;
  Series2 exp_nilconst() const;

  // Coefficient of z2^j as a univariate series in z1.
  Series1 slice(int j) const;
  void set_slice(int j, const Series1& f);

  // Truncate into a smaller window.
  Series2 truncated(Caps caps) const;

  std::string str(const std::string& v1 = "z1", const std::string& v2 = "z2") const;

 private:
  Caps caps_;
  std::vector<Rat> c_;
  int idx(int i, int j) const { return i * (caps_.d2 + 1) + j; }
  void check_same(const Series2& o) const;
};

inline Series2 operator*(const Rat& s, const Series2& f) { return f * s; }

// f(g1, g2) where both g's have zero constant term.  Exact on the full
// window provided each g_k has valuation >= 1 in the combined grading.
Series2 substitute(const Series2& f, const Series2& g1, const Series2& g2);

// Given u_a = z_a * unit_a(z), returns the inverse pair z_a = q_a * unit(q)
// so that substitute(u, z(q)) == q.  `u1`, `u2` are the unit factors
// (constant term 1), not the full maps.
std::pair<Series2, Series2> invert_map(const Series2& u1, const Series2& u2);

}  // namespace ellcy
