#include "ellcy/series1.hpp"

#include <sstream>
#include <stdexcept>

namespace ellcy {

Series1::Series1(int cap, std::vector<Rat> coeffs) : cap_(cap), c_(std::move(coeffs)) {
  c_.resize(cap + 1, Rat(0));
}

Series1 Series1::constant(int cap, const Rat& value) {
  Series1 f(cap);
  f.c_[0] = value;
  return f;
}

Series1 Series1::monomial(int cap, int degree, const Rat& value) {
  Series1 f(cap);
  if (degree < 0) throw std::invalid_argument("Series1::monomial: negative degree");
  if (degree <= cap) f.c_[degree] = value;
  return f;
}

const Rat& Series1::at(int i) const {
  static const Rat zero(0);
  if (i < 0 || i > cap_) return zero;
  return c_[i];
}

void Series1::set(int i, const Rat& value) {
  if (i < 0 || i > cap_) throw std::out_of_range("Series1::set");
  c_[i] = value;
}

bool Series1::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

int Series1::valuation() const {
  for (int i = 0; i <= cap_; ++i)
    if (c_[i] != 0) return i;
  return cap_ + 1;
}

void Series1::check_same(const Series1& o) const {
  if (cap_ != o.cap_) throw std::invalid_argument("Series1: cap mismatch");
}

Series1 Series1::operator+(const Series1& o) const {
  check_same(o);
  Series1 r(cap_);
  for (int i = 0; i <= cap_; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Series1 Series1::operator-(const Series1& o) const {
  check_same(o);
  Series1 r(cap_);
  for (int i = 0; i <= cap_; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Series1 Series1::operator-() const {
  Series1 r(cap_);
  for (int i = 0; i <= cap_; ++i) r.c_[i] = -c_[i];
  return r;
}

Series1 Series1::operator*(const Series1& o) const {
  check_same(o);
  Series1 r(cap_);
  for (int i = 0; i <= cap_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= cap_; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Series1 Series1::operator*(const Rat& s) const {
  Series1 r(cap_);
  for (int i = 0; i <= cap_; ++i) r.c_[i] = c_[i] * s;
  return r;
}

Series1 Series1::inverse() const {
  if (c_[0] == 0) throw std::domain_error("Series1::inverse: zero constant term");
  Series1 r(cap_);
  Rat lead = 1 / c_[0];
  r.c_[0] = lead;
  for (int k = 1; k <= cap_; ++k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += c_[j] * r.c_[k - j];
    r.c_[k] = -lead * s;
  }
  return r;
}

Series1 Series1::theta() const {
  Series1 r(cap_);
  for (int i = 1; i <= cap_; ++i) r.c_[i] = c_[i] * i;
  return r;
}

Series1 Series1::ddz() const {
  Series1 r(cap_);
  // The top coefficient of the derivative is unknowable at this cap; the
  // callers that need full precision shift first.
  for (int i = 1; i <= cap_; ++i) r.c_[i - 1] = c_[i] * i;
  r.c_[cap_] = 0;
  return r;
}

Series1 Series1::shift(int k) const {
  Series1 r(cap_);
  if (k >= 0) {
    for (int i = 0; i + k <= cap_; ++i) r.c_[i + k] = c_[i];
  } else {
    for (int i = 0; i < -k; ++i)
      if (c_[i] != 0) throw std::domain_error("Series1::shift: negative valuation");
    for (int i = -k; i <= cap_; ++i) r.c_[i + k] = c_[i];
  }
  return r;
}

Series1 Series1::pow_int(long e) const {
  if (e < 0) return inverse().pow_int(-e);
  Series1 acc = constant(cap_, 1);
  Series1 b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    b = b * b;
    e >>= 1;
  }
  return acc;
}

Series1 Series1::pow_rational(const Rat& r) const {
  if (c_[0] != 1) throw std::domain_error("Series1::pow_rational: constant term must be 1");
  return (log_unit() * r).exp_nilconst();
}

Series1 Series1::log_unit() const {
  if (c_[0] != 1) throw std::domain_error("Series1::log_unit: constant term must be 1");
  // theta(log f) = theta(f)/f, then divide out the exponent.
  Series1 t = theta() * inverse();
  Series1 r(cap_);
  for (int i = 1; i <= cap_; ++i) r.c_[i] = t.c_[i] / i;
  return r;
}

Series1 Series1::exp_nilconst() const {
  if (c_[0] != 0) throw std::domain_error("Series1::exp_nilconst: constant term must be 0");
  Series1 r = constant(cap_, 1);
  // r' = f' r  termwise: (k) r_k = sum_j j f_j r_{k-j}
  for (int k = 1; k <= cap_; ++k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += Rat(j) * c_[j] * r.c_[k - j];
    r.c_[k] = s / k;
  }
  return r;
}

Series1 Series1::compose(const Series1& g) const {
  check_same(g);
  if (g.c_[0] != 0) throw std::domain_error("Series1::compose: inner constant term must be 0");
  Series1 acc = constant(cap_, c_[0]);
  Series1 gp = constant(cap_, 1);
  for (int i = 1; i <= cap_; ++i) {
    gp = gp * g;
    if (c_[i] != 0) acc = acc + gp * c_[i];
  }
  return acc;
}

std::string Series1::str(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= cap_; ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    out << rat_str(c_[i]);
    if (i > 0) out << "*" << var << "^" << i;
    first = false;
  }
  if (first) out << "0";
  out << " + O(" << var << "^" << cap_ + 1 << ")";
  return out.str();
}

Series1 series1_from(int cap, const std::function<Rat(long)>& gen) {
  Series1 f(cap);
  for (int k = 0; k <= cap; ++k) f.set(k, gen(k));
  return f;
}

}  // namespace ellcy
