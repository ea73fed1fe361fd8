#include "ellcy/diff_field.hpp"

#include <sstream>
#include <stdexcept>

namespace ellcy {

Poly3 Poly3::constant(const Rat& c) { return monomial({0, 0, 0}, c); }

Poly3 Poly3::var(int which) {
  Key k{0, 0, 0};
  k[which] = 1;
  return monomial(k, 1);
}

Poly3 Poly3::monomial(const Key& k, const Rat& c) {
  Poly3 p;
  p.add(k, c);
  return p;
}

void Poly3::add(const Key& k, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly3 Poly3::operator+(const Poly3& o) const {
  Poly3 r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

Poly3 Poly3::operator-(const Poly3& o) const {
  Poly3 r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, -c);
  return r;
}

Poly3 Poly3::operator*(const Poly3& o) const {
  Poly3 r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add({k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]}, c1 * c2);
  return r;
}

Poly3 Poly3::operator*(const Rat& s) const {
  Poly3 r;
  if (s == 0) return r;
  for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
  return r;
}

bool Poly3::divide_exact(const Poly3& divisor, Poly3& quotient) const {
  if (divisor.is_zero()) throw std::domain_error("Poly3::divide_exact: zero divisor");
  Poly3 rem = *this, q;
  auto lead = *divisor.terms_.rbegin();  // lex-largest term of the divisor
  while (!rem.is_zero()) {
    auto [rk, rc] = *rem.terms_.rbegin();
    Key d;
    for (int i = 0; i < 3; ++i) {
      d[i] = rk[i] - lead.first[i];
      if (d[i] < 0) return false;
    }
    Rat factor = rc / lead.second;
    q.add(d, factor);
    Poly3 sub;
    for (const auto& [k, c] : divisor.terms_)
      sub.add({k[0] + d[0], k[1] + d[1], k[2] + d[2]}, c * factor);
    rem = rem - sub;
  }
  quotient = std::move(q);
  return true;
}

Poly3::Key Poly3::monomial_gcd() const {
  Key g{0, 0, 0};
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      g = k;
      first = false;
    } else {
      for (int i = 0; i < 3; ++i) g[i] = std::min(g[i], k[i]);
    }
  }
  return g;
}

Poly3 Poly3::shift_down(const Key& k) const {
  Poly3 r;
  for (const auto& [key, c] : terms_) {
    Key nk{key[0] - k[0], key[1] - k[1], key[2] - k[2]};
    if (nk[0] < 0 || nk[1] < 0 || nk[2] < 0)
      throw std::domain_error("Poly3::shift_down: exponent underflow");
    r.add(nk, c);
  }
  return r;
}

Series1 Poly3::eval(const Series1& z, const Series1& f, const Series1& t) const {
  int cap = z.cap();
  int maxe[3] = {0, 0, 0};
  for (const auto& [k, c] : terms_)
    for (int i = 0; i < 3; ++i) maxe[i] = std::max(maxe[i], k[i]);
  std::vector<std::vector<Series1>> pows(3);
  const Series1* base[3] = {&z, &f, &t};
  for (int i = 0; i < 3; ++i) {
    pows[i].push_back(Series1::constant(cap, 1));
    for (int e = 1; e <= maxe[i]; ++e) pows[i].push_back(pows[i].back() * *base[i]);
  }
  Series1 acc(cap);
  for (const auto& [k, c] : terms_)
    acc = acc + pows[0][k[0]] * pows[1][k[1]] * pows[2][k[2]] * c;
  return acc;
}

std::string Poly3::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"z", "F", "tF"};
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat coef = c;
    if (first) {
      if (coef < 0) {
        out << "-";
        coef = -coef;
      }
    } else {
      out << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    bool printed = false;
    if (coef != 1) {
      out << rat_str(coef);
      printed = true;
    }
    for (int i = 0; i < 3; ++i)
      if (k[i] > 0) {
        if (printed) out << "*";
        out << names[i];
        if (k[i] > 1) out << "^" << k[i];
        printed = true;
      }
    if (!printed) out << rat_str(coef);
    first = false;
  }
  return out.str();
}

DiffFieldElem::DiffFieldElem(Rat a0, Rat a1, Rat a2, Poly3 num, Poly3 den)
    : a0_(std::move(a0)), a1_(std::move(a1)), a2_(std::move(a2)),
      num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("DiffFieldElem: zero denominator");
  reduce();
}

DiffFieldElem DiffFieldElem::constant(const Rat& c, const Rat& a0, const Rat& a1,
                                      const Rat& a2) {
  return DiffFieldElem(a0, a1, a2, Poly3::constant(c), Poly3::constant(1));
}

DiffFieldElem DiffFieldElem::sym_z(const Rat& a0, const Rat& a1, const Rat& a2) {
  return DiffFieldElem(a0, a1, a2, Poly3::var(0), Poly3::constant(1));
}

DiffFieldElem DiffFieldElem::sym_f(const Rat& a0, const Rat& a1, const Rat& a2) {
  return DiffFieldElem(a0, a1, a2, Poly3::var(1), Poly3::constant(1));
}

DiffFieldElem DiffFieldElem::sym_t(const Rat& a0, const Rat& a1, const Rat& a2) {
  return DiffFieldElem(a0, a1, a2, Poly3::var(2), Poly3::constant(1));
}

void DiffFieldElem::reduce() {
  if (num_.is_zero()) {
    den_ = Poly3::constant(1);
    return;
  }
  // common monomial factor
  auto gn = num_.monomial_gcd();
  auto gd = den_.monomial_gcd();
  Poly3::Key g{std::min(gn[0], gd[0]), std::min(gn[1], gd[1]), std::min(gn[2], gd[2])};
  if (g[0] || g[1] || g[2]) {
    num_ = num_.shift_down(g);
    den_ = den_.shift_down(g);
  }
  // cancel shared powers of (1 - a0 Z), the only non-monomial factor the
  // derivation introduces
  Poly3 omega = Poly3::constant(1) - Poly3::var(0) * a0_;
  while (true) {
    Poly3 qn, qd;
    if (num_.divide_exact(omega, qn) && den_.divide_exact(omega, qd)) {
      num_ = qn;
      den_ = qd;
    } else {
      break;
    }
  }
  // normalize: make the lex-leading denominator coefficient 1
  Rat lead = den_.terms().rbegin()->second;
  if (lead != 1) {
    num_ = num_ * (1 / lead);
    den_ = den_ * (1 / lead);
  }
}

DiffFieldElem DiffFieldElem::operator+(const DiffFieldElem& o) const {
  return DiffFieldElem(a0_, a1_, a2_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

DiffFieldElem DiffFieldElem::operator-(const DiffFieldElem& o) const {
  return DiffFieldElem(a0_, a1_, a2_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

DiffFieldElem DiffFieldElem::operator*(const DiffFieldElem& o) const {
  return DiffFieldElem(a0_, a1_, a2_, num_ * o.num_, den_ * o.den_);
}

DiffFieldElem DiffFieldElem::operator*(const Rat& s) const {
  return DiffFieldElem(a0_, a1_, a2_, num_ * s, den_);
}

DiffFieldElem DiffFieldElem::operator/(const DiffFieldElem& o) const {
  if (o.is_zero()) throw std::domain_error("DiffFieldElem: division by zero");
  return DiffFieldElem(a0_, a1_, a2_, num_ * o.den_, den_ * o.num_);
}

bool DiffFieldElem::operator==(const DiffFieldElem& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string DiffFieldElem::str() const {
  std::string s = "(" + num_.str() + ")";
  if (!(den_ == Poly3::constant(1))) s += " / (" + den_.str() + ")";
  return s;
}

DiffFieldElem df_theta(const DiffFieldElem& e) {
  const Rat& a0 = e.a0_;
  // theta on a polynomial lands in the field with denominator (1 - a0 Z).
  Poly3 omega = Poly3::constant(1) - Poly3::var(0) * a0;
  auto theta_poly = [&](const Poly3& p) {
    // returns theta(p) * omega, a polynomial
    Poly3 acc;
    Poly3 tT_num =
        (Poly3::var(0) * Poly3::var(2)) * (a0 * (e.a1_ + e.a2_)) +
        (Poly3::var(0) * Poly3::var(1)) * (a0 * e.a1_ * e.a2_);
    for (const auto& [k, c] : p.terms()) {
      Poly3 mono = Poly3::monomial(k, c);
      if (k[0] > 0) acc = acc + mono * omega * Rat(k[0]);
      if (k[1] > 0) {
        Poly3 m = mono;
        m = m.shift_down({0, 1, 0});
        acc = acc + m * Poly3::var(2) * omega * Rat(k[1]);
      }
      if (k[2] > 0) {
        Poly3 m = mono.shift_down({0, 0, 1});
        acc = acc + m * tT_num * Rat(k[2]);
      }
    }
    return acc;
  };
  Poly3 tn = theta_poly(e.num_);  // = theta(num) * omega
  Poly3 td = theta_poly(e.den_);
  // theta(n/d) = (theta n * d - n * theta d) / d^2
  return DiffFieldElem(e.a0_, e.a1_, e.a2_, tn * e.den_ - e.num_ * td,
                       e.den_ * e.den_ * omega);
}

Series1 df_eval(const DiffFieldElem& e, const Series1& f) {
  Series1 z = Series1::monomial(f.cap(), 1);
  Series1 t = f.theta();
  Series1 den = e.den().eval(z, f, t);
  return e.num().eval(z, f, t) * den.inverse();
}

DiffFieldElem df_apply_theta_poly(const std::vector<Rat>& coeffs, const DiffFieldElem& e) {
  DiffFieldElem acc = DiffFieldElem::constant(0, e.a0(), e.a1(), e.a2());
  DiffFieldElem cur = e;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) acc = acc + cur * coeffs[i];
    if (i + 1 < coeffs.size()) cur = df_theta(cur);
  }
  return acc;
}

}  // namespace ellcy
