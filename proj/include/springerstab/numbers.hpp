#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace springerstab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Rationals are kept in lowest terms with a positive denominator;
// cpp_rational canonicalizes everything except the sign of the denominator.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace springerstab
