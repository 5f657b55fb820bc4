#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sgfem {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// 2^e for any integer e (negative exponents give fractions).
inline Rational pow2(int e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rational(p) : Rational(1, p);
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// gcd of two nonnegative rationals: gcd of numerators over lcm of denominators.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  BigInt num = gcd(numerator(a), numerator(b));
  BigInt den = lcm(denominator(a), denominator(b));
  return Rational(num, den);
}

}  // namespace sgfem
