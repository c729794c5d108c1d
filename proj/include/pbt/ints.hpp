#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pbt {

// All coefficients in the library are exact arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int catalan_number(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

}  // namespace pbt
