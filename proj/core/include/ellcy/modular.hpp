#pragma once

#include <string>
#include <vector>

#include "ellcy/qexp.hpp"
#include "ellcy/series1.hpp"

namespace ellcy {

// E2, E4, E6 normalized to constant term 1, window [0, order].
QExp eisenstein(int k, int order);

// eta^m with m = 0 mod 12, so the leading exponent m/24 stays in (1/2)Z.
// Negative m goes through the inverse of the product part.
QExp eta_pow(int m, int order);

// Fourth powers of the even Jacobi theta constants in the convention where
// theta3^4 = 1 + 8q + 24q^2 + ... counts four-square representations.
QExp theta2_4(int order);
QExp theta3_4(int order);

// Weight-graded generators for the groups the fibre families land on,
// keyed 1..4: full modular group, index-2 and index-3 congruence subgroups
// keeping E4, and the principal level-2 subgroup with the theta fourths.
// `quasi` is always the plain E2.
struct GeneratorSet {
  int level = 1;
  std::vector<QExp> gens;
  std::vector<std::string> names;
  QExp quasi;
  std::string quasi_name = "E2";
};

GeneratorSet level_generators(int level, int order);

// Inverse of the normalized j-line coordinate: z(q) with
// 1728 z (1 - 432 z) ... built from 1/J = eta^24 / E4^3 via
// z = (1 - sqrt(1 - 1728/J)) / 864.  Starts q - 312 q^2 + ...
QExp z_of_q(int order);
Series1 z_of_q_series(int order);

// Pullback checks for the rank-one fibre family with a0 = 432:
//   quartic_ok:  F(z(q))^4 == E4
//   deriv_ok:    12 F^5 (theta F) (1 - 432 z) at z(q) == E2 E4 - E6
// where F is the hypergeometric solution in the rescaled coordinate.
struct ModRepReport {
  bool quartic_ok = false;
  bool deriv_ok = false;
  bool ok() const { return quartic_ok && deriv_ok; }
  explicit operator bool() const { return ok(); }
};

ModRepReport verify_modrep(int order);

struct FitResult {
  bool ok = false;
  std::vector<Rat> coeffs;
  std::vector<std::string> names;
  long rows = 0;        // matched coefficient count
  int margin = 0;       // rows - unknowns; the fit refuses margin < min
  bool unique = true;   // false when free directions were zeroed
  std::string detail;   // failure reason when !ok
};

// Solve f == sum_j c_j columns[j] exactly on the overlap of all windows.
// Refuses when fewer than (unknowns + margin_min) coefficients overlap.
FitResult fit_against(const QExp& f, const std::vector<QExp>& columns,
                      const std::vector<std::string>& names,
                      int margin_min = 3);

// Express q^{q_shift} eta^{eta_power} * (polynomial in level generators)
// matching f.  The polynomial collects monomials of total weight
// `weight - 2j` for deficits j = 0..max_E2_degree, each allowed a factor
// E2^i with i <= j.  All matching is exact on the normalized window.
FitResult fit(const QExp& f, int weight, int level, int eta_power,
              long q_shift, int max_E2_degree);

}  // namespace ellcy
