#include "ellcy/shift_op.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ellcy {

namespace {
void check_axis(int h, int axis) {
  if (axis < 1 || axis > h) throw std::invalid_argument("ShiftOp: axis out of range");
}
}  // namespace

ShiftOp ShiftOp::constant(int h, const Rat& c) {
  ShiftOp a(h);
  a.add_term(std::vector<int>(h, 0), std::vector<int>(h, 0), c);
  return a;
}

ShiftOp ShiftOp::z(int h, int axis) {
  check_axis(h, axis);
  ShiftOp a(h);
  std::vector<int> ze(h, 0);
  ze[axis - 1] = 1;
  a.add_term(ze, std::vector<int>(h, 0), 1);
  return a;
}

ShiftOp ShiftOp::theta(int h, int axis) {
  check_axis(h, axis);
  ShiftOp a(h);
  std::vector<int> te(h, 0);
  te[axis - 1] = 1;
  a.add_term(std::vector<int>(h, 0), te, 1);
  return a;
}

void ShiftOp::add_term(std::vector<int> zexp, std::vector<int> texp, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(zexp.size()) != h || static_cast<int>(texp.size()) != h)
    throw std::invalid_argument("ShiftOp::add_term: exponent arity mismatch");
  auto key = std::pair{std::move(zexp), std::move(texp)};
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ShiftOp ShiftOp::operator+(const ShiftOp& o) const {
  if (h != o.h) throw std::invalid_argument("ShiftOp: arity mismatch");
  ShiftOp r = *this;
  for (const auto& [key, c] : o.terms) r.add_term(key.first, key.second, c);
  return r;
}

ShiftOp ShiftOp::operator-(const ShiftOp& o) const { return *this + o * Rat(-1); }

ShiftOp ShiftOp::operator*(const Rat& s) const {
  ShiftOp r(h);
  if (s == 0) return r;
  for (const auto& [key, c] : terms) r.terms[key] = c * s;
  return r;
}

bool ShiftOp::operator==(const ShiftOp& o) const {
  return h == o.h && terms == o.terms;
}

int ShiftOp::max_zdeg(int axis) const {
  check_axis(h, axis);
  int m = 0;
  for (const auto& [key, c] : terms) m = std::max(m, key.first[axis - 1]);
  return m;
}

int ShiftOp::max_tdeg(int axis) const {
  check_axis(h, axis);
  int m = 0;
  for (const auto& [key, c] : terms) m = std::max(m, key.second[axis - 1]);
  return m;
}

std::string ShiftOp::str() const { return op_print(*this); }

ShiftOp op_mul(const ShiftOp& a, const ShiftOp& b) {
  if (a.h != b.h) throw std::invalid_argument("op_mul: arity mismatch");
  int h = a.h;
  ShiftOp r(h);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const auto& [za, ta] = ka;
      const auto& [zb, tb] = kb;
      // T^ta z^zb = z^zb prod_axis (T + zb)^ta; expand binomially per axis.
      std::vector<int> zr(h);
      for (int x = 0; x < h; ++x) zr[x] = za[x] + zb[x];
      // partial expansions: list of (texp, coefficient)
      std::vector<std::pair<std::vector<int>, Rat>> acc{{std::vector<int>(h, 0), ca * cb}};
      for (int x = 0; x < h; ++x) {
        std::vector<std::pair<std::vector<int>, Rat>> next;
        for (int k = 0; k <= ta[x]; ++k) {
          Rat w = binomial(ta[x], k) * rat_pow(Rat(zb[x]), ta[x] - k);
          if (w == 0) continue;
          for (const auto& [te, c] : acc) {
            auto te2 = te;
            te2[x] = k;
            next.emplace_back(std::move(te2), c * w);
          }
        }
        acc = std::move(next);
      }
      for (auto& [te, c] : acc) {
        std::vector<int> tr(h);
        for (int x = 0; x < h; ++x) tr[x] = te[x] + tb[x];
        r.add_term(zr, tr, c);
      }
    }
  return r;
}

ShiftOp op_pow(const ShiftOp& a, int e) {
  if (e < 0) throw std::invalid_argument("op_pow: negative exponent");
  ShiftOp r = ShiftOp::constant(a.h, 1);
  for (int i = 0; i < e; ++i) r = op_mul(r, a);
  return r;
}

ShiftOp partial_theta(const ShiftOp& a, int axis) {
  ShiftOp r(a.h);
  for (const auto& [key, c] : a.terms) {
    int t = key.second[axis - 1];
    if (t == 0) continue;
    auto te = key.second;
    te[axis - 1] = t - 1;
    r.add_term(key.first, te, c * t);
  }
  return r;
}

ShiftOp restrict_op(const ShiftOp& a, int axis) {
  ShiftOp r(a.h);
  for (const auto& [key, c] : a.terms) {
    bool keep = true;
    for (int x = 0; x < a.h; ++x) {
      if (x == axis - 1) continue;
      if (key.first[x] > 0 || key.second[x] > 0) keep = false;
    }
    if (keep) r.add_term(key.first, key.second, c);
  }
  return r;
}

LogSeries apply(const ShiftOp& a, const LogSeries& f) {
  if (a.h > 2) throw std::invalid_argument("apply: series carrier has two variables");
  LogSeries r(f.caps());
  for (const auto& [key, c] : a.terms) {
    const auto& [ze, te] = key;
    LogSeries g = f;
    for (int x = 0; x < a.h; ++x)
      for (int k = 0; k < te[x]; ++k) g = g.theta(x + 1);
    int s1 = ze.size() > 0 ? ze[0] : 0;
    int s2 = ze.size() > 1 ? ze[1] : 0;
    g = g.shift(s1, s2);
    r = r + g * c;
  }
  return r;
}

AnnihilationReport annihilates(const ShiftOp& a, const LogSeries& f) {
  LogSeries res = apply(a, f);
  AnnihilationReport rep;
  rep.d1 = f.caps().d1 - a.max_zdeg(1);
  rep.d2 = f.caps().d2 - (a.h >= 2 ? a.max_zdeg(2) : 0);
  for (const auto& [key, g] : res.parts())
    for (int i = 0; i <= rep.d1; ++i)
      for (int j = 0; j <= rep.d2; ++j)
        if (g.at(i, j) != 0) {
          if (rep.ok) {
            rep.ok = false;
            rep.first_residual = {key.first, key.second, i, j, g.at(i, j)};
          }
        }
  return rep;
}

std::string op_print(const ShiftOp& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : a.terms) {
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
    out << rat_str(coef);
    for (int x = 0; x < a.h; ++x)
      if (key.first[x] > 0) out << " * z" << x + 1 << "^" << key.first[x];
    for (int x = 0; x < a.h; ++x)
      if (key.second[x] > 0) out << " * T" << x + 1 << "^" << key.second[x];
    first = false;
  }
  return out.str();
}

namespace {

// Recursive descent over: expr := ['+'|'-'] product (('+'|'-') product)*,
// product := power (['*'] power)*, power := primary ('^' int)?,
// primary := rational | z<i> | T<i> | '(' expr ')'.
// Adjacent factors multiply; products are noncommutative and keep the
// written order, so factored generator text means what it says.
struct OpParser {
  const std::string& text;
  size_t pos = 0;
  int h;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("op_parse: " + what + " at position " + std::to_string(pos));
  }

  ShiftOp parse_expr() {
    skip_ws();
    Rat sign = 1;
    if (peek_is('+') || peek_is('-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
    }
    ShiftOp acc = parse_product() * sign;
    while (true) {
      skip_ws();
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) break;
      Rat s = text[pos] == '-' ? -1 : 1;
      ++pos;
      acc = acc + parse_product() * s;
    }
    return acc;
  }

  ShiftOp parse_product() {
    ShiftOp acc = parse_power();
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      if (c == '*') {
        ++pos;
        skip_ws();
        if (pos >= text.size()) fail("dangling '*'");
        c = text[pos];
      } else if (!(std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'T' ||
                   c == '(')) {
        break;
      }
      acc = op_mul(acc, parse_power());
    }
    return acc;
  }

  ShiftOp parse_power() {
    ShiftOp base = parse_primary();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("missing exponent");
      base = op_pow(base, std::stoi(text.substr(start, pos - start)));
    }
    return base;
  }

  ShiftOp parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
        ++pos;
      return ShiftOp::constant(h, rat_parse(text.substr(start, pos - start)));
    }
    if (c == 'z' || c == 'T') {
      ++pos;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("variable needs an index");
      int axis = std::stoi(text.substr(start, pos - start));
      if (axis < 1 || axis > h) fail("axis out of range");
      return c == 'z' ? ShiftOp::z(h, axis) : ShiftOp::theta(h, axis);
    }
    if (c == '(') {
      ++pos;
      ShiftOp inner = parse_expr();
      if (!peek_is(')')) fail("missing ')'");
      ++pos;
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

ShiftOp op_parse(const std::string& text, int h) {
  OpParser p{text, 0, h};
  ShiftOp r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

ShiftOp make_L1(int n, const Rat& a0, const Rat& a1, const Rat& a2) {
  ShiftOp t1 = ShiftOp::theta(2, 1), t2 = ShiftOp::theta(2, 2);
  ShiftOp f1 = t1 + ShiftOp::constant(2, a1);
  ShiftOp f2 = t1 + ShiftOp::constant(2, a2);
  return op_mul(t1, t1) - op_mul(t1, t2) * Rat(n) -
         op_mul(ShiftOp::z(2, 1), op_mul(f1, f2)) * a0;
}

ShiftOp make_L2(int n) {
  ShiftOp t1 = ShiftOp::theta(2, 1), t2 = ShiftOp::theta(2, 2);
  ShiftOp prod = ShiftOp::constant(2, 1);
  for (int k = 0; k < n; ++k)
    prod = op_mul(prod, t2 * Rat(n) - t1 + ShiftOp::constant(2, k));
  Rat sign = n % 2 == 0 ? 1 : -1;
  return op_pow(t2, n) - op_mul(ShiftOp::z(2, 2), prod) * sign;
}

}  // namespace ellcy
