#ifndef HODGEFORGE_BIGINT_HPP
#define HODGEFORGE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hodgeforge {

/// Exact arbitrary-precision signed integer. All table entries, Betti numbers
/// and checker arithmetic use this type; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace hodgeforge

#endif
