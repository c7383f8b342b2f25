// Exact integer/rational arithmetic used throughout the library.
// Backed by Boost.Multiprecision (header-only); values are canonical
// (reduced, positive denominator) by construction.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hbstrata {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Integer numerator(const Rational& r) {
  return Integer(boost::multiprecision::numerator(r));
}

inline Integer denominator(const Rational& r) {
  return Integer(boost::multiprecision::denominator(r));
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

// Throws unless r is an integer.
inline Integer to_integer(const Rational& r) {
  if (!is_integral(r))
    throw std::invalid_argument("expected an integral value, got " + r.str());
  return numerator(r);
}

// Accepts "a" or "a/b" with optional sign.
inline Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: '" + s + "'");
  }
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

}  // namespace hbstrata
