#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ellcy/coupling.hpp"

namespace ellcy {

namespace {

int moebius(int k) {
  int r = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    r = -r;
  }
  if (k > 1) r = -r;
  return r;
}

// multicover divisors run over gcd(d1,d2), where a zero degree defers to
// the other axis
int dir_gcd(int d1, int d2) {
  if (d1 == 0 && d2 == 0) return 1;
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  return std::gcd(d1, d2);
}

}  // namespace

Potential assemble_potential(const ThreePointResult& tp,
                             const IntersectionData& inter, int gamma,
                             int t_order, int order0) {
  if (gamma != 1 && gamma != 2)
    throw std::invalid_argument("assemble_potential: gamma must be 1 or 2");
  if (t_order < 0 || t_order > (int)tp.sectors.size())
    throw std::invalid_argument(
        "assemble_potential: t_order exceeds solved sectors");
  if (!tp.seed_checks_ok)
    throw std::runtime_error("assemble_potential: seed checks failed at " +
                             tp.seed_mismatch);
  if (tp.fail_order > 0 && tp.fail_order <= t_order)
    throw std::runtime_error(
        "assemble_potential: three-point data inconsistent at t-order " +
        std::to_string(tp.fail_order) + ", component " + tp.fail_component);

  Potential pot;
  pot.gamma = gamma;
  pot.n = inter.n;

  // d2 = 0: integrate the C11 seed twice along q1.  The q1^0 term has no
  // q-series primitive and is dropped with a marker, not a fake zero.
  QExp c11 = inter.seed(1, 1, gamma, order0);
  QExp s0(1, 0, order0);
  for (long d = 1; d <= order0; ++d) {
    Rat v = c11.coeff(d);
    if (v != 0) s0.set_coeff(d, v / Rat(d * d));
  }
  pot.sectors.push_back(s0);
  pot.classical_note =
      "d2=0 sector integrated from seed data; classical q1^0 term omitted";

  for (int m = 1; m <= t_order; ++m)
    pot.sectors.push_back(gamma == 1 ? tp.sectors[m - 1].f_gamma1
                                     : tp.sectors[m - 1].f_gamma2);
  return pot;
}

GWTable extract_gw(const Potential& pot, int max_d1, int max_d2) {
  if (max_d2 + 1 > (int)pot.sectors.size())
    throw std::invalid_argument(
        "extract_gw: potential lacks the requested d2 sectors");
  GWTable t;
  t.gamma = pot.gamma;
  t.max_d1 = max_d1;
  t.max_d2 = max_d2;
  t.note = pot.classical_note;

  for (int d2 = 0; d2 <= max_d2; ++d2) {
    const QExp& s = pot.sectors[d2];
    for (int d1 = 0; d1 <= max_d1; ++d1) {
      if (d1 == 0 && d2 == 0) {
        // the classical part lives outside the table
        t.gw[{0, 0}] = Rat(0);
        continue;
      }
      long num = (long)s.base_den() * d1 - (long)pot.n * d2 * s.base_den() / 2;
      if (num < s.lo() || num > s.hi())
        throw std::invalid_argument("extract_gw: caps do not cover d1=" +
                                    std::to_string(d1) +
                                    " d2=" + std::to_string(d2));
      t.gw[{d1, d2}] = s.coeff(num);
    }
  }

  for (const auto& [key, N] : t.gw) {
    auto [d1, d2] = key;
    Rat n = N;
    int g = dir_gcd(d1, d2);
    for (int k = 2; k <= g; ++k) {
      if (g % k) continue;
      int mu = moebius(k);
      if (mu) n += Rat(mu) * t.gw.at({d1 / k, d2 / k}) / Rat((long)k * k);
    }
    t.bps[key] = n;
  }
  return t;
}

std::string GWTable::csv() const {
  std::ostringstream out;
  out << "# gamma " << gamma << "\n";
  if (!note.empty()) out << "# " << note << "\n";
  out << "d1\\d2";
  for (int d2 = 0; d2 <= max_d2; ++d2) out << "," << d2;
  out << "\n";
  for (int d1 = 0; d1 <= max_d1; ++d1) {
    out << d1;
    for (int d2 = 0; d2 <= max_d2; ++d2)
      out << "," << rat_str(bps.at({d1, d2}));
    out << "\n";
  }
  return out.str();
}

std::string GWTable::json() const {
  nlohmann::ordered_json j;
  j["gamma"] = gamma;
  j["max_d1"] = max_d1;
  j["max_d2"] = max_d2;
  j["note"] = note;
  auto dump = [](const std::map<std::pair<int, int>, Rat>& m) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [k, v] : m) arr.push_back({k.first, k.second, rat_str(v)});
    return arr;
  };
  j["gw"] = dump(gw);
  j["bps"] = dump(bps);
  return j.dump();
}

Rat multicover_sum(const GWTable& t, int d1, int d2) {
  Rat s = t.bps.at({d1, d2});
  int g = dir_gcd(d1, d2);
  for (int k = 2; k <= g; ++k)
    if (g % k == 0) s += t.bps.at({d1 / k, d2 / k}) / Rat((long)k * k);
  return s;
}

}  // namespace ellcy
