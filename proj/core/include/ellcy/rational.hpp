#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ellcy {

// All arithmetic in this library is exact.  Rat is a big rational kept in
// canonical (reduced) form; equality relies on that.  The raw two-argument
// mpq_class constructor does not reduce, so build ratios with rat() below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "3", "-3", "5/6", "-5/6".
Rat rat_parse(const std::string& text);

// Canonical form: "n" for integers, "n/d" otherwise, d > 0.
std::string rat_str(const Rat& value);

bool rat_is_integer(const Rat& value);

// Exact conversion; throws if the value is not an integer or does not fit.
long rat_to_long(const Rat& value);

Rat rat_pow(const Rat& base, long exp);

// Rising factorial (a)_k = a(a+1)...(a+k-1).
Rat pochhammer(const Rat& a, long k);

Rat factorial(long n);
Rat binomial(long n, long k);

}  // namespace ellcy
