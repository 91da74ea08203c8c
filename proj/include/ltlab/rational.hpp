#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ltlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n/d. Boost 1.74 rejects a negative denominator, so the sign is moved first.
inline Rational make_rational(BigInt n, BigInt d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const BigInt n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

inline BigInt ipow_big(const BigInt& b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace ltlab
