// Exact arithmetic inputs for the counting formulas over a real quadratic
// field: zeta_F(-1) by the classical divisor-sum formula, rational prime
// splitting, orders of SL_2 over residue rings of O_F, and the class factor
// H = [index] * (1/2)^g * zeta_F(-1).

#pragma once

#include <optional>
#include <string>

#include "hbstrata/alpha.hpp"
#include "hbstrata/rational.hpp"

namespace hbstrata {

// Fundamental discriminant of a real quadratic field: D > 1 with either
// D = 1 mod 4 squarefree, or D = 4d with d squarefree and d = 2,3 mod 4.
struct Discriminant {
  long long D = 0;

  explicit Discriminant(long long d);
  static bool is_fundamental(long long d);
};

// zeta_F(-1) = (1/60) * sum over b^2 < D, b = D mod 2, of sigma_1((D-b^2)/4).
Rational zeta_minus_one(const Discriminant& D);

long long sigma1(long long n);  // sum of positive divisors

enum class SplitType { Split, Inert, Ramified };

std::string split_type_name(SplitType s);

SplitType split_type(const Discriminant& D, long long p);

// [1,1] if p splits, [2] if p is inert; ramified p is rejected.
RamificationProfile profile_of(const Discriminant& D, long long p);

// |SL_2(O_F / n O_F)| = product over prime-ideal powers q^e || n O_F of
// N(q)^{3e} (1 - N(q)^{-2}).
Integer sl2_order_residue_ring(const Discriminant& D, long long n);

struct ClassFactor {
  Rational value;
  bool computed = false;  // false when user-supplied
  bool integral = false;

  bool operator==(const ClassFactor&) const = default;
};

// H = |SL_2(O_F/n)| * (1/2)^2 * zeta_F(-1) on the computed path (g = 2); an
// override bypasses the computation for other settings.
ClassFactor class_factor(const Discriminant& D, long long n,
                         std::optional<Rational> override_value = std::nullopt);

inline ClassFactor class_factor_override(const Rational& value) {
  return ClassFactor{value, false, is_integral(value)};
}

}  // namespace hbstrata
