#include "ellcy/series2.hpp"

#include <sstream>
#include <stdexcept>

namespace ellcy {

Series2::Series2(Caps caps) : caps_(caps) {
  if (caps.d1 < 0 || caps.d2 < 0) throw std::invalid_argument("Series2: bad caps");
  c_.assign((caps.d1 + 1) * (caps.d2 + 1), Rat(0));
}

Series2 Series2::constant(Caps caps, const Rat& value) {
  Series2 f(caps);
  f.c_[0] = value;
  return f;
}

Series2 Series2::monomial(Caps caps, int i, int j, const Rat& value) {
  Series2 f(caps);
  if (i < 0 || j < 0) throw std::invalid_argument("Series2::monomial: negative degree");
  if (i <= caps.d1 && j <= caps.d2) f.c_[f.idx(i, j)] = value;
  return f;
}

Series2 Series2::from_slice0(Caps caps, const Series1& f) {
  Series2 r(caps);
  for (int i = 0; i <= std::min(caps.d1, f.cap()); ++i) r.set(i, 0, f.at(i));
  return r;
}

const Rat& Series2::at(int i, int j) const {
  static const Rat zero(0);
  if (i < 0 || j < 0 || i > caps_.d1 || j > caps_.d2) return zero;
  return c_[idx(i, j)];
}

void Series2::set(int i, int j, const Rat& value) {
  if (i < 0 || j < 0 || i > caps_.d1 || j > caps_.d2)
    throw std::out_of_range("Series2::set");
  c_[idx(i, j)] = value;
}

bool Series2::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

void Series2::check_same(const Series2& o) const {
  if (!(caps_ == o.caps_)) throw std::invalid_argument("Series2: caps mismatch");
}

Series2 Series2::operator+(const Series2& o) const {
  check_same(o);
  Series2 r(caps_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

Series2 Series2::operator-(const Series2& o) const {
  check_same(o);
  Series2 r(caps_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

Series2 Series2::operator-() const {
  Series2 r(caps_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
  return r;
}

Series2 Series2::operator*(const Series2& o) const {
  check_same(o);
  Series2 r(caps_);
  for (int i = 0; i <= caps_.d1; ++i)
    for (int j = 0; j <= caps_.d2; ++j) {
      const Rat& a = c_[idx(i, j)];
      if (a == 0) continue;
      for (int k = 0; i + k <= caps_.d1; ++k)
        for (int l = 0; j + l <= caps_.d2; ++l) {
          const Rat& b = o.c_[idx(k, l)];
          if (b == 0) continue;
          r.c_[idx(i + k, j + l)] += a * b;
        }
    }
  return r;
}

Series2 Series2::operator*(const Rat& s) const {
  Series2 r(caps_);
  for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k] * s;
  return r;
}

Series2 Series2::inverse() const {
  if (c_[0] == 0) throw std::domain_error("Series2::inverse: zero constant term");
  // Solve g * f = 1 degree by degree in the graded order.
  Series2 g(caps_);
  Rat lead = 1 / c_[0];
  g.c_[0] = lead;
  for (int d = 1; d <= caps_.d1 + caps_.d2; ++d)
    for (int i = std::max(0, d - caps_.d2); i <= std::min(d, caps_.d1); ++i) {
      int j = d - i;
      Rat s(0);
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          if (a == i && b == j) continue;
          if (c_[idx(i - a, j - b)] == 0) continue;
          s += g.c_[idx(a, b)] * c_[idx(i - a, j - b)];
        }
      g.c_[idx(i, j)] = -lead * s;
    }
  return g;
}

Series2 Series2::theta(int axis) const {
  Series2 r(caps_);
  for (int i = 0; i <= caps_.d1; ++i)
    for (int j = 0; j <= caps_.d2; ++j)
      r.c_[idx(i, j)] = c_[idx(i, j)] * (axis == 1 ? i : j);
  return r;
}

Series2 Series2::shift(int k1, int k2) const {
  Series2 r(caps_);
  for (int i = 0; i <= caps_.d1; ++i)
    for (int j = 0; j <= caps_.d2; ++j) {
      if (c_[idx(i, j)] == 0) continue;
      int ni = i + k1, nj = j + k2;
      if (ni < 0 || nj < 0)
        throw std::domain_error("Series2::shift: negative valuation");
      if (ni <= caps_.d1 && nj <= caps_.d2) r.c_[idx(ni, nj)] = c_[idx(i, j)];
    }
  return r;
}

Series2 Series2::pow_int(long e) const {
  if (e < 0) return inverse().pow_int(-e);
  Series2 acc = constant(caps_, 1);
  Series2 b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Series2 Series2::pow_rational(const Rat& r) const {
  if (c_[0] != 1) throw std::domain_error("Series2::pow_rational: constant term must be 1");
  return (log_unit() * r).exp_nilconst();
}

Series2 Series2::log_unit() const {
  if (c_[0] != 1) throw std::domain_error("Series2::log_unit: constant term must be 1");
  // Integrate theta_1 g + theta_2 g = theta_total(f)/f along the total grading.
  Series2 t = (theta(1) + theta(2)) * inverse();
  Series2 r(caps_);
  for (int i = 0; i <= caps_.d1; ++i)
    for (int j = 0; j <= caps_.d2; ++j)
      if (i + j > 0) r.c_[idx(i, j)] = t.c_[idx(i, j)] / (i + j);
  return r;
}

Series2 Series2::exp_nilconst() const {
  if (c_[0] != 0) throw std::domain_error("Series2::exp_nilconst: constant term must be 0");
  // (i+j) r_{ij} = sum (a+b) f_{ab} r_{i-a,j-b}, solved in graded order.
  Series2 r = constant(caps_, 1);
  for (int d = 1; d <= caps_.d1 + caps_.d2; ++d)
    for (int i = std::max(0, d - caps_.d2); i <= std::min(d, caps_.d1); ++i) {
      int j = d - i;
      Rat s(0);
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          if (a + b == 0 || c_[idx(a, b)] == 0) continue;
          s += Rat(a + b) * c_[idx(a, b)] * r.c_[idx(i - a, j - b)];
        }
      r.c_[idx(i, j)] = s / d;
    }
  return r;
}

Series1 Series2::slice(int j) const {
  Series1 f(caps_.d1);
  if (j >= 0 && j <= caps_.d2)
    for (int i = 0; i <= caps_.d1; ++i) f.set(i, c_[idx(i, j)]);
  return f;
}

void Series2::set_slice(int j, const Series1& f) {
  if (j < 0 || j > caps_.d2) throw std::out_of_range("Series2::set_slice");
  for (int i = 0; i <= caps_.d1; ++i) set(i, j, f.at(i));
}

Series2 Series2::truncated(Caps caps) const {
  if (caps.d1 > caps_.d1 || caps.d2 > caps_.d2)
    throw std::invalid_argument("Series2::truncated: cannot grow window");
  Series2 r(caps);
  for (int i = 0; i <= caps.d1; ++i)
    for (int j = 0; j <= caps.d2; ++j) r.set(i, j, c_[idx(i, j)]);
  return r;
}

std::string Series2::str(const std::string& v1, const std::string& v2) const {
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j <= caps_.d2; ++j)
    for (int i = 0; i <= caps_.d1; ++i) {
      const Rat& x = c_[idx(i, j)];
      if (x == 0) continue;
      if (!first) out << " + ";
      out << rat_str(x);
      if (i > 0) out << "*" << v1 << "^" << i;
      if (j > 0) out << "*" << v2 << "^" << j;
      first = false;
    }
  if (first) out << "0";
  return out.str();
}

Series2 substitute(const Series2& f, const Series2& g1, const Series2& g2) {
  Caps caps = f.caps();
  if (!(g1.caps() == caps) || !(g2.caps() == caps))
    throw std::invalid_argument("substitute: caps mismatch");
  if (g1.at(0, 0) != 0 || g2.at(0, 0) != 0)
    throw std::domain_error("substitute: inner constant terms must be 0");
  // Row-by-row Horner in g1 with precomputed powers of g2.
  std::vector<Series2> g2pow;
  g2pow.push_back(Series2::constant(caps, 1));
  for (int j = 1; j <= caps.d2; ++j) g2pow.push_back(g2pow.back() * g2);

  Series2 acc(caps);
  for (int i = caps.d1; i >= 0; --i) {
    Series2 row(caps);
    for (int j = 0; j <= caps.d2; ++j) {
      const Rat& x = f.at(i, j);
      if (x != 0) row = row + g2pow[j] * x;
    }
    acc = acc * g1 + row;
  }
  return acc;
}

std::pair<Series2, Series2> invert_map(const Series2& u1, const Series2& u2) {
  Caps caps = u1.caps();
  if (!(u2.caps() == caps)) throw std::invalid_argument("invert_map: caps mismatch");
  if (u1.at(0, 0) != 1 || u2.at(0, 0) != 1)
    throw std::domain_error("invert_map: unit factors must start at 1");
  Series2 v1 = Series2::constant(caps, 1);
  Series2 v2 = Series2::constant(caps, 1);
  // Each pass is exact one total degree further; the +2 is slack.
  for (int pass = 0; pass <= caps.d1 + caps.d2 + 2; ++pass) {
    Series2 z1 = v1.shift(1, 0);
    Series2 z2 = v2.shift(0, 1);
    Series2 n1 = substitute(u1, z1, z2).inverse();
    Series2 n2 = substitute(u2, z1, z2).inverse();
    if (n1 == v1 && n2 == v2) break;
    v1 = n1;
    v2 = n2;
  }
  return {v1, v2};
}

}  // namespace ellcy
