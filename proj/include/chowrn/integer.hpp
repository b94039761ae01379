#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace chowrn {

// Arbitrary precision; small values live inline without heap allocation.
using Integer = boost::multiprecision::cpp_int;

// binom(a, b) with the convention binom(a, b) = 0 for b < 0, a < 0 or b > a.
inline Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Integer r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_string(const Integer& v) { return v.str(); }

}  // namespace chowrn
