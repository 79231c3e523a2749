#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tlt {

// Every identity in this domain is exact; no floating point in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int pow2(int n) { return Int(1) << n; }

inline std::string to_string(const Int& v) { return v.str(); }

// Rationals render as "p/q", or just "p" when integral.
inline std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace tlt
