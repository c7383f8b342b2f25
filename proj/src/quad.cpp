#include "hbstrata/quad.hpp"

#include <stdexcept>

namespace hbstrata {

namespace {

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_squarefree(long long n) {
  for (long long d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

long long legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long long r = 1, base = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

Discriminant::Discriminant(long long d) : D(d) {
  if (!is_fundamental(d))
    throw std::invalid_argument(std::to_string(d) +
                                " is not a fundamental discriminant > 1");
}

bool Discriminant::is_fundamental(long long d) {
  if (d <= 1) return false;
  if (d % 4 == 1) return is_squarefree(d);
  if (d % 4 == 0) {
    long long m = d / 4;
    return (m % 4 == 2 || m % 4 == 3) && is_squarefree(m);
  }
  return false;
}

long long sigma1(long long n) {
  long long s = 0;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += d;
    if (d != n / d) s += n / d;
  }
  return s;
}

Rational zeta_minus_one(const Discriminant& disc) {
  long long D = disc.D;
  Integer sum = 0;
  for (long long b = (D % 2 == 0) ? 0 : 1; b * b < D; b += 2) {
    long long term = sigma1((D - b * b) / 4);
    sum += (b == 0) ? term : 2 * term;  // b and -b
  }
  return Rational(sum, 60);
}

SplitType split_type(const Discriminant& disc, long long p) {
  if (!is_prime_ll(p)) throw std::invalid_argument("p must be prime");
  long long D = disc.D;
  if (D % p == 0) return SplitType::Ramified;
  if (p == 2) {
    // D odd here, hence D = 1 mod 4; split iff D = 1 mod 8
    return (D % 8 == 1) ? SplitType::Split : SplitType::Inert;
  }
  return legendre(D, p) == 1 ? SplitType::Split : SplitType::Inert;
}

std::string split_type_name(SplitType s) {
  switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "?";
}

RamificationProfile profile_of(const Discriminant& D, long long p) {
  switch (split_type(D, p)) {
    case SplitType::Split: return RamificationProfile({1, 1});
    case SplitType::Inert: return RamificationProfile({2});
    case SplitType::Ramified:
      throw std::invalid_argument("p = " + std::to_string(p) +
                                  " is ramified in the field of discriminant " +
                                  std::to_string(D.D));
  }
  throw std::logic_error("unreachable");
}

Integer sl2_order_residue_ring(const Discriminant& D, long long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Integer order = 1;
  auto local = [](const Integer& norm, int e) {
    // |SL_2(O_v / q^e)| = N^{3e} - N^{3e-2}
    return ipow(norm, 3 * e) - ipow(norm, 3 * e - 2);
  };
  long long rest = n;
  for (long long ell = 2; ell * ell <= rest; ++ell) {
    if (rest % ell) continue;
    int e = 0;
    while (rest % ell == 0) {
      rest /= ell;
      ++e;
    }
    switch (split_type(D, ell)) {
      case SplitType::Split:
        order *= local(ell, e) * local(ell, e);
        break;
      case SplitType::Inert:
        order *= local(Integer(ell) * ell, e);
        break;
      case SplitType::Ramified:
        order *= local(ell, 2 * e);
        break;
    }
  }
  if (rest > 1) {
    switch (split_type(D, rest)) {
      case SplitType::Split:
        order *= local(rest, 1) * local(rest, 1);
        break;
      case SplitType::Inert:
        order *= local(Integer(rest) * rest, 1);
        break;
      case SplitType::Ramified:
        order *= local(rest, 2);
        break;
    }
  }
  return order;
}

ClassFactor class_factor(const Discriminant& D, long long n,
                         std::optional<Rational> override_value) {
  if (override_value) return class_factor_override(*override_value);
  Rational h = Rational(sl2_order_residue_ring(D, n)) * Rational(1, 4) *
               zeta_minus_one(D);
  ClassFactor cf;
  cf.value = h;
  cf.computed = true;
  cf.integral = is_integral(h);
  return cf;
}

}  // namespace hbstrata
