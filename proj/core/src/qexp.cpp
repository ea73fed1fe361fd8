#include "ellcy/qexp.hpp"

#include <sstream>
#include <stdexcept>

namespace ellcy {

namespace {
void check_base(int b) {
  if (b != 1 && b != 2) throw std::invalid_argument("QExp: base_den must be 1 or 2");
}
}  // namespace

QExp::QExp(int base_den, long lo, long hi) : base_den_(base_den), lo_(lo), hi_(hi) {
  check_base(base_den);
}

long QExp::clamp(long v) {
  if (v > WINDOW_INF) return WINDOW_INF;
  if (v < -WINDOW_INF) return -WINDOW_INF;
  return v;
}

QExp QExp::zero(int base_den) { return QExp(base_den, WINDOW_INF, WINDOW_INF); }

QExp QExp::constant(const Rat& value, int base_den) {
  if (value == 0) return zero(base_den);
  QExp f(base_den, 0, WINDOW_INF);
  f.c_[0] = value;
  return f;
}

QExp QExp::monomial(const Rat& value, long num, int base_den) {
  if (value == 0) return zero(base_den);
  QExp f(base_den, num, WINDOW_INF);
  f.c_[num] = value;
  return f;
}

QExp QExp::from_series(const Series1& f) {
  QExp r(1, 0, f.cap());
  for (int i = 0; i <= f.cap(); ++i)
    if (f.at(i) != 0) r.c_[i] = f.at(i);
  int v = f.valuation();
  if (v > 0) r.lo_ = std::min<long>(v, r.hi_ + 1);
  return r;
}

Rat QExp::coeff(long num) const {
  auto it = c_.find(num);
  return it == c_.end() ? Rat(0) : it->second;
}

void QExp::set_coeff(long num, const Rat& value) {
  if (value == 0)
    c_.erase(num);
  else
    c_[num] = value;
}

std::optional<long> QExp::leading_exp() const {
  if (c_.empty()) return std::nullopt;
  return c_.begin()->first;
}

bool QExp::is_zero_on_window() const {
  for (const auto& [e, v] : c_)
    if (e >= lo_ && e <= hi_ && v != 0) return false;
  return true;
}

void QExp::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0 || it->first > hi_)
      it = c_.erase(it);
    else
      ++it;
  }
  // Empty support on an unbounded window is exactly zero; record that in lo
  // so later products keep their full windows.
  if (c_.empty() && hi_ >= WINDOW_INF) lo_ = WINDOW_INF;
}

QExp QExp::operator+(const QExp& o) const {
  if (base_den_ != o.base_den_) {
    int b = std::max(base_den_, o.base_den_);
    return rebased(b) + o.rebased(b);
  }
  QExp r(base_den_, clamp(std::min(lo_, o.lo_)), clamp(std::min(hi_, o.hi_)));
  r.c_ = c_;
  for (const auto& [e, v] : o.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end())
      r.c_[e] = v;
    else
      it->second += v;
  }
  r.trim();
  return r;
}

QExp QExp::operator-(const QExp& o) const { return *this + o * Rat(-1); }

QExp QExp::operator-() const { return *this * Rat(-1); }

QExp QExp::operator*(const QExp& o) const {
  if (base_den_ != o.base_den_) {
    int b = std::max(base_den_, o.base_den_);
    return rebased(b) * o.rebased(b);
  }
  QExp r(base_den_, clamp(lo_ + o.lo_),
         clamp(std::min(lo_ + o.hi_, o.lo_ + hi_)));
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) {
      if (e1 + e2 > r.hi_) continue;
      r.c_[e1 + e2] += v1 * v2;
    }
  r.trim();
  return r;
}

QExp QExp::operator*(const Rat& s) const {
  if (s == 0) return zero(base_den_);
  QExp r(base_den_, lo_, hi_);
  for (const auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

QExp QExp::inverse() const {
  auto lead = leading_exp();
  if (!lead || *lead != lo_)
    throw std::domain_error("QExp::inverse: leading term must sit at the window floor");
  Rat lc = c_.begin()->second;
  long v = *lead;
  if (hi_ >= WINDOW_INF) {
    if (c_.size() == 1) return monomial(1 / lc, -v, base_den_);
    throw std::domain_error(
        "QExp::inverse: unbounded window with non-monomial support; truncate first");
  }
  // Invert the unit part u with u(0) = 1: g_k from the convolution identity.
  QExp r(base_den_, clamp(-v), clamp(hi_ - 2 * v));
  std::map<long, Rat> u;  // unit coefficients, offset exponents
  for (const auto& [e, x] : c_) u[e - v] = x / lc;
  std::map<long, Rat> g;
  g[0] = 1;
  long limit = hi_ - v;
  for (long k = 1; k <= limit; ++k) {
    Rat s(0);
    for (const auto& [j, uj] : u) {
      if (j <= 0 || j > k) continue;
      auto it = g.find(k - j);
      if (it != g.end()) s += uj * it->second;
    }
    if (s != 0) g[k] = -s;
  }
  for (const auto& [e, x] : g) {
    Rat val = x / lc;
    if (val != 0 && e - v <= r.hi_) r.c_[e - v] = val;
  }
  return r;
}

QExp QExp::theta() const {
  QExp r(base_den_, lo_, hi_);
  for (const auto& [e, v] : c_) {
    Rat t = v * rat(e, base_den_);
    if (t != 0) r.c_[e] = t;
  }
  r.trim();
  return r;
}

QExp QExp::shift_exp(long num) const {
  QExp r(base_den_, clamp(lo_ + num), clamp(hi_ + num));
  for (const auto& [e, v] : c_) r.c_[e + num] = v;
  return r;
}

QExp QExp::rescale_exp(long k) const {
  if (k < 1) throw std::invalid_argument("QExp::rescale_exp: k must be >= 1");
  QExp r(base_den_, clamp(lo_ * k), clamp(hi_ * k));
  for (const auto& [e, v] : c_) r.c_[e * k] = v;
  return r;
}

QExp QExp::rebased(int base_den) const {
  check_base(base_den);
  if (base_den == base_den_) return *this;
  if (base_den < base_den_)
    throw std::invalid_argument("QExp::rebased: cannot coarsen exponent lattice");
  long k = base_den / base_den_;
  QExp r(base_den, clamp(lo_ * k), clamp(hi_ * k));
  for (const auto& [e, v] : c_) r.c_[e * k] = v;
  r.weight = weight;
  return r;
}

QExp QExp::windowed(long lo, long hi) const {
  QExp r(base_den_, std::max(lo, lo_), std::min(hi, hi_));
  for (const auto& [e, v] : c_)
    if (e >= r.lo_ && e <= r.hi_) r.c_[e] = v;
  return r;
}

bool QExp::agrees(const QExp& o, long lo, long hi) const {
  // lo/hi are in scaled units of the finer of the two lattices.
  if (base_den_ != o.base_den_) {
    int b = std::max(base_den_, o.base_den_);
    return rebased(b).agrees(o.rebased(b), lo, hi);
  }
  // an unbounded hi only survives exact constructions, where everything
  // outside the support is known to vanish
  long alo = hi_ >= WINDOW_INF ? -WINDOW_INF : lo_;
  long olo = o.hi_ >= WINDOW_INF ? -WINDOW_INF : o.lo_;
  if (alo > lo || hi_ < hi || olo > lo || o.hi_ < hi)
    throw std::domain_error("QExp::agrees: window does not cover the requested range");
  for (long e = lo; e <= hi; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

std::string QExp::str(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (e < lo_ || e > hi_) continue;
    if (!first) out << " + ";
    out << rat_str(v);
    if (e != 0) {
      out << "*" << var << "^";
      if (base_den_ == 1)
        out << e;
      else if (e % base_den_ == 0)
        out << e / base_den_;
      else
        out << "(" << e << "/" << base_den_ << ")";
    }
    first = false;
  }
  if (first) out << "0";
  if (hi_ < WINDOW_INF) {
    out << " + O(" << var << "^";
    if (base_den_ == 1)
      out << hi_ + 1;
    else
      out << "(" << hi_ + 1 << "/" << base_den_ << ")";
    out << ")";
  }
  return out.str();
}

}  // namespace ellcy
