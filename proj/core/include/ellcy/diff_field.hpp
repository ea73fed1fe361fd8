#pragma once

#include <array>
#include <map>
#include <string>

#include "ellcy/series1.hpp"

namespace ellcy {

// Polynomials in three commuting symbols Z, F, T over Q.  In the intended
// model Z is the coordinate, F the holomorphic solution and T = theta F.
class Poly3 {
 public:
  using Key = std::array<int, 3>;

  Poly3() = default;
  static Poly3 constant(const Rat& c);
  static Poly3 var(int which);  // 0 = Z, 1 = F, 2 = T
  static Poly3 monomial(const Key& k, const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }
  void add(const Key& k, const Rat& c);

  Poly3 operator+(const Poly3& o) const;
  Poly3 operator-(const Poly3& o) const;
  Poly3 operator*(const Poly3& o) const;
  Poly3 operator*(const Rat& s) const;
  bool operator==(const Poly3& o) const { return terms_ == o.terms_; }

  // Exact division; returns false when the divisor does not divide this.
  bool divide_exact(const Poly3& divisor, Poly3& quotient) const;

  // Componentwise minimum exponent over all terms.
  Key monomial_gcd() const;
  Poly3 shift_down(const Key& k) const;

  Series1 eval(const Series1& z, const Series1& f, const Series1& t) const;

  std::string str() const;

 private:
  std::map<Key, Rat> terms_;
};

// Rational function num/den in the differential field generated by z, F,
// theta F, with the derivation
//   theta Z = Z,  theta F = T,
//   theta T = (a0 (a1+a2) Z T + a0 a1 a2 Z F) / (1 - a0 Z).
// Reduction is best effort: content, common monomials and powers of
// (1 - a0 Z) are cancelled; equality always goes through cross products.
class DiffFieldElem {
 public:
  DiffFieldElem() = default;
  DiffFieldElem(Rat a0, Rat a1, Rat a2, Poly3 num, Poly3 den);

  static DiffFieldElem constant(const Rat& c, const Rat& a0, const Rat& a1, const Rat& a2);
  static DiffFieldElem sym_z(const Rat& a0, const Rat& a1, const Rat& a2);
  static DiffFieldElem sym_f(const Rat& a0, const Rat& a1, const Rat& a2);
  static DiffFieldElem sym_t(const Rat& a0, const Rat& a1, const Rat& a2);

  const Poly3& num() const { return num_; }
  const Poly3& den() const { return den_; }
  const Rat& a0() const { return a0_; }
  const Rat& a1() const { return a1_; }
  const Rat& a2() const { return a2_; }
  bool is_zero() const { return num_.is_zero(); }

  DiffFieldElem operator+(const DiffFieldElem& o) const;
  DiffFieldElem operator-(const DiffFieldElem& o) const;
  DiffFieldElem operator*(const DiffFieldElem& o) const;
  DiffFieldElem operator*(const Rat& s) const;
  DiffFieldElem operator/(const DiffFieldElem& o) const;
  bool operator==(const DiffFieldElem& o) const;

  std::string str() const;

 private:
  Rat a0_, a1_, a2_;
  Poly3 num_, den_ = Poly3::constant(1);
  void reduce();
  friend DiffFieldElem df_theta(const DiffFieldElem& e);
};

// Derivation extended by the quotient rule.
DiffFieldElem df_theta(const DiffFieldElem& e);

// Series evaluation: Z -> z, F -> the attached hypergeometric solution,
// T -> theta of it.  `f` must be a unit so the denominator inverts.
Series1 df_eval(const DiffFieldElem& e, const Series1& f);

// p(theta) e for a univariate polynomial p given by its coefficient list
// (ascending powers).
DiffFieldElem df_apply_theta_poly(const std::vector<Rat>& coeffs, const DiffFieldElem& e);

}  // namespace ellcy
