#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ellcy/coupling.hpp"
#include "ellcy/shift_op.hpp"

namespace ellcy {

// ---------------------------------------------------------------- Poly2

Poly2 Poly2::constant(const Rat& v) {
  Poly2 p;
  if (v != 0) p.c[{0, 0}] = v;
  return p;
}

Poly2 Poly2::monomial(const Rat& v, int e1, int e2) {
  Poly2 p;
  if (v != 0) p.c[{e1, e2}] = v;
  return p;
}

Rat Poly2::at(int e1, int e2) const {
  auto it = c.find({e1, e2});
  return it == c.end() ? Rat(0) : it->second;
}

int Poly2::deg(int axis) const {
  int d = 0;
  for (const auto& [e, v] : c) d = std::max(d, axis == 1 ? e.first : e.second);
  return d;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [e, v] : o.c) {
    Rat s = r.at(e.first, e.second) + v;
    if (s == 0)
      r.c.erase(e);
    else
      r.c[e] = s;
  }
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r;
  for (const auto& [e, v] : c) r.c[e] = -v;
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [e, v] : c)
    for (const auto& [f, w] : o.c) {
      std::pair<int, int> k{e.first + f.first, e.second + f.second};
      Rat s = r.at(k.first, k.second) + v * w;
      if (s == 0)
        r.c.erase(k);
      else
        r.c[k] = s;
    }
  return r;
}

Poly2 Poly2::operator*(const Rat& s) const {
  Poly2 r;
  if (s == 0) return r;
  for (const auto& [e, v] : c) r.c[e] = v * s;
  return r;
}

bool Poly2::operator==(const Poly2& o) const { return c == o.c; }

Poly2 Poly2::theta(int axis) const {
  Poly2 r;
  for (const auto& [e, v] : c) {
    long k = axis == 1 ? e.first : e.second;
    if (k != 0) r.c[e] = v * Rat(k);
  }
  return r;
}

Poly2 Poly2::dz(int axis) const {
  Poly2 r;
  for (const auto& [e, v] : c) {
    long k = axis == 1 ? e.first : e.second;
    if (k == 0) continue;
    std::pair<int, int> f =
        axis == 1 ? std::pair{e.first - 1, e.second} : std::pair{e.first, e.second - 1};
    r.c[f] = v * Rat(k);
  }
  return r;
}

Series2 Poly2::to_series(Caps caps) const {
  Series2 r(caps);
  for (const auto& [e, v] : c)
    if (e.first <= caps.d1 && e.second <= caps.d2) r.set(e.first, e.second, v);
  return r;
}

std::string Poly2::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c) {
    Rat a = v;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && (e.first > 0 || e.second > 0);
    if (!unit) os << rat_str(a);
    if (e.first > 0) {
      os << (unit ? "" : " ") << "z1";
      if (e.first > 1) os << "^" << e.first;
      unit = false;
    }
    if (e.second > 0) {
      os << (unit ? "" : " ") << "z2";
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

// ---------------------------------------------------------- RationalFn2

RationalFn2 RationalFn2::operator+(const RationalFn2& o) const {
  return {num * o.den + o.num * den, den * o.den};
}

RationalFn2 RationalFn2::operator-(const RationalFn2& o) const {
  return {num * o.den - o.num * den, den * o.den};
}

RationalFn2 RationalFn2::operator*(const RationalFn2& o) const {
  return {num * o.num, den * o.den};
}

RationalFn2 RationalFn2::operator*(const Rat& s) const {
  return {num * s, den};
}

RationalFn2 RationalFn2::dz(int axis) const {
  return {num.dz(axis) * den - num * den.dz(axis), den * den};
}

bool RationalFn2::equals(const RationalFn2& o) const {
  return num * o.den == o.num * den;
}

Series2 RationalFn2::to_series(Caps caps) const {
  return num.to_series(caps) * den.to_series(caps).inverse();
}

std::string RationalFn2::str() const {
  return "(" + num.str() + ") / (" + den.str() + ")";
}

// ------------------------------------------------------------ YukawaSet

const YukawaEntry& YukawaSet::at(int i, int j) const {
  for (const auto& e : entries)
    if (e.i == i && e.j == j) return e;
  throw std::invalid_argument("YukawaSet::at: no such derivative index");
}

Series2 YukawaSet::cleared_series(int i, int j, Caps caps) const {
  return at(i, j).cleared.to_series(caps);
}

YukawaSet main_example_yukawa() {
  YukawaSet ys;
  ys.params = ModelParams{};

  const Poly2 z1 = Poly2::monomial(1, 1, 0);
  const Poly2 z2 = Poly2::monomial(1, 0, 1);
  // (1 - 432 z1)^k expanded
  const Poly2 omega = Poly2::constant(1) + Poly2::monomial(-432, 1, 0);
  const Poly2 omega2 = omega * omega;
  const Poly2 omega3 = omega2 * omega;

  // 1728^4 = 8916100448256
  ys.disc1 = -(omega2 * omega2) +
             Poly2::monomial(Rat(8916100448256L), 4, 1);
  ys.disc2 = Poly2::constant(-1) + Poly2::monomial(256, 0, 1);

  // -(1 - 1728 z1 + 6*432^2 z1^2 - 4*432^3 z1^3)
  const Poly2 quart = Poly2::constant(-1) + Poly2::monomial(1728, 1, 0) +
                      Poly2::monomial(-1119744, 2, 0) +
                      Poly2::monomial(322486272L, 3, 0);

  auto pw = [](int k, const Poly2& p) {
    Poly2 r = Poly2::constant(1);
    for (int t = 0; t < k; ++t) r = r * p;
    return r;
  };

  auto mk = [&](int i, int j, int p1, int p2, const Poly2& core,
                const Poly2& den_core) {
    YukawaEntry e;
    e.i = i;
    e.j = j;
    e.p1 = p1;
    e.p2 = p2;
    e.w = {core, pw(p1, z1) * pw(p2, z2) * den_core};
    e.cleared = {pw(i - p1, z1) * pw(j - p2, z2) * core, den_core};
    return e;
  };

  ys.entries[0] = mk(4, 0, 4, 0, Poly2::constant(-64), ys.disc1);
  ys.entries[1] = mk(3, 1, 3, 1, (-omega) * 16, ys.disc1);
  ys.entries[2] = mk(2, 2, 2, 2, omega2 * -4, ys.disc1);
  ys.entries[3] = mk(1, 3, 1, 3, -omega3, ys.disc1);
  ys.entries[4] = mk(0, 4, 0, 3, quart * 64, ys.disc1 * ys.disc2);
  return ys;
}

// --------------------------------------------------- order-5 elimination

namespace {

using Multi = std::vector<int>;

void enum_multi_rec(int h, int deg, Multi& cur, std::vector<Multi>& out) {
  if ((int)cur.size() == h - 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= deg; ++k) {
    cur.push_back(k);
    enum_multi_rec(h, deg - k, cur, out);
    cur.pop_back();
  }
}

std::vector<Multi> multis(int h, int deg) {
  std::vector<Multi> out;
  Multi cur;
  enum_multi_rec(h, deg, cur, out);
  return out;
}

Multi plus_e(const Multi& a, int axis) {
  Multi r = a;
  r[axis - 1] += 1;
  return r;
}

// Reduced row echelon form of [A | R]; returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<Rat>>& m, int acols) {
  std::vector<int> pivots;
  size_t row = 0;
  for (int col = 0; col < acols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = Rat(1) / m[row][col];
    for (Rat& x : m[row]) x = x * inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t k = col; k < m[r].size(); ++k) m[r][k] = m[r][k] - f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

const GriffithsRelation& GriffithsSet::for_target(const Multi& u) const {
  for (const auto& r : relations)
    if (r.target == u) return r;
  throw std::invalid_argument("GriffithsSet: no relation for that target");
}

GriffithsSet griffiths_relations(int h) {
  if (h != 2 && h != 3)
    throw std::invalid_argument("griffiths_relations: h must be 2 or 3");

  // unknowns: unordered pairs {a, b}, |a| + |b| = 5
  std::map<std::pair<Multi, Multi>, int> unk;
  for (int da = 0; da <= 5; ++da)
    for (const Multi& a : multis(h, da))
      for (const Multi& b : multis(h, 5 - da)) {
        auto key = a <= b ? std::pair{a, b} : std::pair{b, a};
        if (!unk.count(key)) {
          int id = (int)unk.size();
          unk[key] = id;
        }
      }

  // right-hand symbols: (axis, source) with |source| = 4
  std::map<std::pair<int, Multi>, int> sym;
  for (int i = 1; i <= h; ++i)
    for (const Multi& u : multis(h, 4)) {
      int id = (int)sym.size();
      sym[{i, u}] = id;
    }

  const int nu = (int)unk.size(), ns = (int)sym.size();
  std::vector<std::vector<Rat>> m;
  for (int da = 0; da <= 4; ++da)
    for (const Multi& a : multis(h, da))
      for (const Multi& b : multis(h, 4 - da)) {
        if (!(a <= b)) continue;
        Multi ab(h);
        for (int k = 0; k < h; ++k) ab[k] = a[k] + b[k];
        for (int i = 1; i <= h; ++i) {
          std::vector<Rat> row(nu + ns, Rat(0));
          for (const auto& half : {std::pair{plus_e(a, i), b},
                                   std::pair{a, plus_e(b, i)}}) {
            auto key = half.first <= half.second
                           ? half
                           : std::pair{half.second, half.first};
            row[unk.at(key)] = row[unk.at(key)] + 1;
          }
          Rat sign = (da % 2 == 0) ? Rat(1) : Rat(-1);
          row[nu + sym.at({i, ab})] = sign;
          m.push_back(std::move(row));
        }
      }

  std::vector<int> pivots = rref(m, nu);

  GriffithsSet gs;
  gs.h = h;
  const Multi zero(h, 0);
  for (const Multi& u : multis(h, 5)) {
    int col = unk.at({zero, u});
    int prow = -1;
    for (size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] == col) prow = (int)r;
    if (prow < 0)
      throw std::runtime_error("griffiths_relations: target not determined");
    for (int k = 0; k < nu; ++k)
      if (k != col && m[prow][k] != 0)
        throw std::runtime_error("griffiths_relations: target not unique");
    GriffithsRelation rel;
    rel.target = u;
    for (const auto& [key, id] : sym) {
      Rat cv = m[prow][nu + id];
      if (cv != 0) rel.terms.push_back({cv, key.first, key.second});
    }
    std::sort(rel.terms.begin(), rel.terms.end(),
              [](const GriffithsTerm& x, const GriffithsTerm& y) {
                return std::pair{x.axis, x.source} < std::pair{y.axis, y.source};
              });
    gs.relations.push_back(std::move(rel));
  }
  return gs;
}

// ------------------------------------------------- operator constraints

namespace {

// Stirling set numbers up to m = 5: theta^m = sum_k S(m,k) z^k d^k
Rat stirling2(int n, int k) {
  static const long table[6][6] = {{1, 0, 0, 0, 0, 0},  {0, 1, 0, 0, 0, 0},
                                   {0, 1, 1, 0, 0, 0},  {0, 1, 3, 1, 0, 0},
                                   {0, 1, 7, 6, 1, 0},  {0, 1, 15, 25, 10, 1}};
  return Rat(table[n][k]);
}

// One pairing contribution after clearing by z^(5,5):
//   coeff * z^(s1,s2) * V_k            (theta_axis = 0)
//   coeff * z^(s1,s2) * (T_a - usub) V_k   (theta_axis = a)
struct Atom {
  int vidx;
  long s1, s2;
  int theta_axis;
  int usub;
  Rat coeff;
};

int vindex(int i1, int i2) {
  // entries ordered (4,0), (3,1), (2,2), (1,3), (0,4)
  (void)i1;
  return i2;
}

std::vector<Atom> pairing_atoms(const ShiftOp& op, const GriffithsSet& g2) {
  std::vector<Atom> atoms;
  for (const auto& [key, cf] : op.terms) {
    const std::vector<int>&mz = key.first, &mt = key.second;
    for (int k1 = 0; k1 <= mt[0]; ++k1)
      for (int k2 = 0; k2 <= mt[1]; ++k2) {
        Rat s12 = stirling2(mt[0], k1) * stirling2(mt[1], k2);
        if (s12 == 0) continue;
        Rat c2 = cf * s12;
        int dd = k1 + k2;
        if (dd <= 3) continue;  // transversality: pairing vanishes
        if (dd == 4) {
          atoms.push_back({vindex(k1, k2), 5 + mz[0], 5 + mz[1], 0, 0, c2});
        } else {
          // order five: eliminate through the integration-by-parts set
          const GriffithsRelation& rel = g2.for_target({k1, k2});
          for (const GriffithsTerm& t : rel.terms) {
            // d_i W^(u) = z^(-u-e_i) (T_i - u_i) V^(u); source + e_i = delta
            atoms.push_back({vindex(t.source[0], t.source[1]),
                             5 + mz[0] + k1 - t.source[0] - (t.axis == 1),
                             5 + mz[1] + k2 - t.source[1] - (t.axis == 2),
                             t.axis, t.source[t.axis - 1], c2 * t.coeff});
          }
        }
      }
  }
  return atoms;
}

struct ConstraintOp {
  std::string tag;
  int g1, g2;
  std::vector<Atom> atoms;
  long smin1, smin2;
};

std::vector<ConstraintOp> constraint_family(const ModelParams& mp,
                                            const GriffithsSet& g2) {
  const ShiftOp L1 = make_L1(mp.n, mp.a0, mp.a1, mp.a2);
  const ShiftOp L2 = make_L2(mp.n);
  const ShiftOp T1 = ShiftOp::theta(2, 1), T2 = ShiftOp::theta(2, 2);

  struct Base {
    std::string tag;
    ShiftOp op;
    int ord;
  };
  const std::vector<Base> bases = {{"L1", L1, 2},
                                   {"L2", L2, 4},
                                   {"T1*L1", op_mul(T1, L1), 3},
                                   {"T2*L1", op_mul(T2, L1), 3},
                                   {"T1*L2", op_mul(T1, L2), 5},
                                   {"T2*L2", op_mul(T2, L2), 5}};

  std::vector<ConstraintOp> fam;
  for (const Base& b : bases) {
    for (int d = 0; d + b.ord <= 5; ++d)
      for (int g1 = d; g1 >= 0; --g1) {
        int g2e = d - g1;
        ShiftOp full = op_mul(op_pow(T1, g1), op_mul(op_pow(T2, g2e), b.op));
        ConstraintOp c;
        c.tag = b.tag;
        c.g1 = g1;
        c.g2 = g2e;
        c.atoms = pairing_atoms(full, g2);
        if (c.atoms.empty()) continue;
        c.smin1 = c.atoms[0].s1;
        c.smin2 = c.atoms[0].s2;
        for (const Atom& a : c.atoms) {
          c.smin1 = std::min(c.smin1, a.s1);
          c.smin2 = std::min(c.smin2, a.s2);
        }
        fam.push_back(std::move(c));
      }
  }
  return fam;
}

}  // namespace

PFConstraintReport verify_pf_constraints(const YukawaSet& ys, Caps caps) {
  PFConstraintReport rep;
  rep.checked = caps;
  const GriffithsSet g2 = griffiths_relations(2);
  const std::vector<ConstraintOp> fam = constraint_family(ys.params, g2);

  const Caps ambient{caps.d1 + 5, caps.d2 + 5};
  std::array<Series2, 5> v;
  for (int k = 0; k < 5; ++k)
    v[k] = ys.entries[k].cleared.to_series(ambient);

  for (const ConstraintOp& con : fam) {
    const long h1 = caps.d1 + con.smin1, h2 = caps.d2 + con.smin2;
    for (long e1 = 0; e1 <= h1; ++e1)
      for (long e2 = 0; e2 <= h2; ++e2) {
        Rat total(0);
        for (const Atom& a : con.atoms) {
          long i = e1 - a.s1, j = e2 - a.s2;
          if (i < 0 || j < 0) continue;
          Rat term = a.coeff * v[a.vidx].at((int)i, (int)j);
          if (a.theta_axis == 1)
            term = term * Rat(i - a.usub);
          else if (a.theta_axis == 2)
            term = term * Rat(j - a.usub);
          total = total + term;
        }
        ++rep.constraints;
        if (total != 0) {
          rep.ok = false;
          rep.op_tag = con.tag;
          rep.g1 = con.g1;
          rep.g2 = con.g2;
          rep.e1 = (int)e1;
          rep.e2 = (int)e2;
          rep.residual = total;
          return rep;
        }
      }
  }
  return rep;
}

DerivedYukawa derive_yukawa_series(const ModelParams& params, Caps caps,
                                   const Rat& normalization) {
  DerivedYukawa out;
  const GriffithsSet g2 = griffiths_relations(2);
  const std::vector<ConstraintOp> fam = constraint_family(params, g2);

  const int w2 = caps.d2 + 1;
  const int per = (caps.d1 + 1) * w2;
  const int nunk = 5 * per;
  auto idx = [&](int vk, long i, long j) { return vk * per + (int)i * w2 + (int)j; };

  // incremental reduced basis; pivot column -> row.  Every stored row has
  // coefficient 1 at its pivot and 0 at all other pivots.
  std::map<int, std::vector<Rat>> basis;
  auto reduce_insert = [&](std::vector<Rat> row) {
    for (const auto& [pc, br] : basis) {
      if (row[pc] == 0) continue;
      Rat f = row[pc];
      for (int k = 0; k < nunk; ++k) row[k] = row[k] - f * br[k];
    }
    int lead = -1;
    for (int c = 0; c < nunk; ++c)
      if (row[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) return false;
    Rat inv = Rat(1) / row[lead];
    for (Rat& x : row) x = x * inv;
    for (auto& [pc, br] : basis) {
      if (br[lead] == 0) continue;
      Rat f = br[lead];
      for (int k = 0; k < nunk; ++k) br[k] = br[k] - f * row[k];
    }
    basis[lead] = std::move(row);
    return true;
  };

  bool done = false;
  for (const ConstraintOp& con : fam) {
    if (done) break;
    const long h1 = caps.d1 + con.smin1, h2 = caps.d2 + con.smin2;
    for (long e1 = 0; e1 <= h1 && !done; ++e1)
      for (long e2 = 0; e2 <= h2 && !done; ++e2) {
        std::vector<Rat> row(nunk, Rat(0));
        bool any = false;
        for (const Atom& a : con.atoms) {
          long i = e1 - a.s1, j = e2 - a.s2;
          if (i < 0 || j < 0 || i > caps.d1 || j > caps.d2) continue;
          Rat f = a.coeff;
          if (a.theta_axis == 1)
            f = f * Rat(i - a.usub);
          else if (a.theta_axis == 2)
            f = f * Rat(j - a.usub);
          if (f == 0) continue;
          int q = idx(a.vidx, i, j);
          row[q] = row[q] + f;
          any = true;
        }
        if (!any) continue;
        if (reduce_insert(std::move(row))) {
          ++out.rows;
          if ((int)basis.size() == nunk - 1) done = true;
        }
      }
  }

  out.kernel_dim = nunk - (int)basis.size();
  if (out.kernel_dim != 1) {
    out.detail = "kernel dimension " + std::to_string(out.kernel_dim);
    return out;
  }

  // single free column: the kernel vector has 1 there, -row[free] at pivots
  int free_col = -1;
  for (int c = 0; c < nunk; ++c)
    if (!basis.count(c)) free_col = c;
  std::vector<Rat> kern(nunk, Rat(0));
  kern[free_col] = 1;
  for (const auto& [pc, br] : basis) kern[pc] = -br[free_col];

  Rat lead = kern[idx(0, 0, 0)];
  if (lead == 0) {
    out.detail = "kernel vanishes at the V40 constant term";
    return out;
  }
  Rat scale = normalization / lead;
  for (int k = 0; k < 5; ++k) {
    Series2 s(caps);
    for (int i = 0; i <= caps.d1; ++i)
      for (int j = 0; j <= caps.d2; ++j) s.set(i, j, kern[idx(k, i, j)] * scale);
    out.v[k] = std::move(s);
  }
  out.ok = true;
  return out;
}

}  // namespace ellcy
