#ifndef HODGEFORGE_CYCLOTOMIC_HPP
#define HODGEFORGE_CYCLOTOMIC_HPP

#include <vector>

#include "hodgeforge/bigint.hpp"

namespace hodgeforge {

/// A scalar that is exactly a root of unity: zeta_m^e with 0 <= e < m.
/// Group elements act on basis monomials through these; nothing is ever
/// evaluated in floating point.
struct Scalar {
  int e = 0;
  int m = 1;

  static Scalar one(int m) { return {0, m}; }
  static Scalar power(int e, int m) {
    e %= m;
    if (e < 0) e += m;
    return {e, m};
  }
  Scalar times(const Scalar& other) const;
  bool operator==(const Scalar&) const = default;
};

/// An exact element of Z[zeta_m], stored as integer coefficients indexed by
/// exponent: sum_e c[e] * zeta_m^e. Orbit averages accumulate into this and
/// are reduced at the end.
struct CycSum {
  int m = 1;
  std::vector<Int> c;

  explicit CycSum(int m) : m(m), c(m, Int(0)) {}
  void add(const Scalar& s, const Int& count = 1);
  void add(const CycSum& other);
};

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// computed by exact integer polynomial division of x^m - 1.
std::vector<Int> cyclotomic_polynomial(int m);

/// Reduces the sum modulo the vanishing relations of zeta_m (equivalently,
/// modulo the m-th cyclotomic polynomial) and returns the unique rational
/// integer it equals. Throws internal_error if the value is not an integer:
/// a group-average trace can never be anything else, so that is a bug.
Int reduce_to_integer(const CycSum& s);

}  // namespace hodgeforge

#endif
