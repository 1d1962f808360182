#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. No floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <vector>

namespace torelli {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  Int q = a / b;
  if (q * b != a) throw std::domain_error("exact_div: inexact division");
  return q;
}

// Mobius function for the Witt / necklace formulas.
inline int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

// Dimension of the degree-n piece of a free Lie algebra on m generators.
inline Int witt_number(const Int& m, int n) {
  if (n < 1) throw std::invalid_argument("witt_number: n must be positive");
  Int total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Int p = 1;
    for (int i = 0; i < n / d; ++i) p *= m;
    total += mu * p;
  }
  return exact_div(total, n);
}

inline std::vector<int> divisors(int n) {
  std::vector<int> ds;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

}  // namespace torelli
