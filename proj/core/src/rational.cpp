#include "ellcy/rational.hpp"

namespace ellcy {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rat_parse: empty string");
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + text + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("rat_parse: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& value) {
  // get_str on a temporary mpq_class is safe; expression templates are not.
  return value.get_str();
}

bool rat_is_integer(const Rat& value) { return value.get_den() == 1; }

long rat_to_long(const Rat& value) {
  if (!rat_is_integer(value)) throw std::domain_error("rat_to_long: not an integer");
  mpz_class num = value.get_num();
  if (!num.fits_slong_p()) throw std::domain_error("rat_to_long: out of range");
  return num.get_si();
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp == 0) return 1;
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    return 1 / rat_pow(base, -exp);
  }
  Rat acc = 1, b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rat pochhammer(const Rat& a, long k) {
  Rat acc = 1;
  for (long i = 0; i < k; ++i) acc *= a + i;
  return acc;
}

Rat factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

Rat binomial(long n, long k) {
  if (k < 0) return 0;
  // Generalized over negative n via the falling-factorial definition.
  Rat acc = 1;
  for (long i = 0; i < k; ++i) acc *= rat(n - i, i + 1);
  return acc;
}

}  // namespace ellcy
