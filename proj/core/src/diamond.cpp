#include "hodgeforge/diamond.hpp"

#include "hodgeforge/errors.hpp"

namespace hodgeforge {

namespace {

std::vector<std::vector<Int>> square(int n) {
  return std::vector<std::vector<Int>>(n + 1, std::vector<Int>(n + 1, Int(0)));
}

void check_index(int n, int p, int q) {
  if (p < 0 || q < 0 || p > n || q > n)
    throw input_error("diamond index (" + std::to_string(p) + "," +
                      std::to_string(q) + ") out of range for n=" +
                      std::to_string(n));
}

}  // namespace

HodgeDiamond HodgeDiamond::zero(int n) {
  if (n < 0) throw input_error("diamond dimension must be nonnegative");
  return HodgeDiamond{n, square(n)};
}

HodgeDiamond HodgeDiamond::projective_space(int n) {
  HodgeDiamond d = zero(n);
  for (int p = 0; p <= n; ++p) d.h[p][p] = 1;
  return d;
}

HodgeDiamond HodgeDiamond::curve(const Int& g) {
  if (g < 0) throw input_error("genus must be nonnegative");
  HodgeDiamond d = zero(1);
  d.h[0][0] = 1;
  d.h[1][1] = 1;
  d.h[1][0] = g;
  d.h[0][1] = g;
  return d;
}

HodgeDiamond HodgeDiamond::point() { return projective_space(0); }

const Int& HodgeDiamond::at(int p, int q) const {
  check_index(n, p, q);
  return h[p][q];
}

Int& HodgeDiamond::at(int p, int q) {
  check_index(n, p, q);
  return h[p][q];
}

Int HodgeDiamond::at_or_zero(int p, int q) const {
  if (p < 0 || q < 0 || p > n || q > n) return 0;
  return h[p][q];
}

TruncatedDiamond TruncatedDiamond::zero(int n) {
  if (n < 1) throw input_error("truncated diamond needs dimension >= 1");
  return TruncatedDiamond{n, square(n)};
}

TruncatedDiamond TruncatedDiamond::of(const HodgeDiamond& d) {
  if (d.n < 1) throw input_error("truncated diamond needs dimension >= 1");
  TruncatedDiamond t{d.n, d.h};
  for (int p = 0; p <= d.n; ++p) {
    int q = d.n - p;
    t.h[p][q] = 0;
  }
  return t;
}

const Int& TruncatedDiamond::at(int p, int q) const {
  check_index(n, p, q);
  if (p + q == n)
    throw input_error("middle-row cell (" + std::to_string(p) + "," +
                      std::to_string(q) + ") is absent from a truncated diamond");
  return h[p][q];
}

Int& TruncatedDiamond::at(int p, int q) {
  check_index(n, p, q);
  if (p + q == n)
    throw input_error("middle-row cell (" + std::to_string(p) + "," +
                      std::to_string(q) + ") is absent from a truncated diamond");
  return h[p][q];
}

Int TruncatedDiamond::at_or_zero(int p, int q) const {
  if (p < 0 || q < 0 || p > n || q > n) return 0;
  if (p + q == n)
    throw input_error("middle-row cell (" + std::to_string(p) + "," +
                      std::to_string(q) + ") is absent from a truncated diamond");
  return h[p][q];
}

const Int& PrimitiveTable::at(int p, int q) const {
  check_index(n, p, q);
  if (p + q > n)
    throw input_error("primitive numbers are defined for p+q <= n only");
  return l[p][q];
}

Int& PrimitiveTable::at(int p, int q) {
  check_index(n, p, q);
  if (p + q > n)
    throw input_error("primitive numbers are defined for p+q <= n only");
  return l[p][q];
}

namespace {

void check_cell(ValidityReport& r, const char* predicate, bool ok, int p, int q) {
  if (!ok) {
    r.valid = false;
    r.violations.push_back({predicate, p, q});
  }
}

}  // namespace

ValidityReport validate(const HodgeDiamond& d) {
  ValidityReport r;
  const int n = d.n;
  check_cell(r, "corner_one", d.h[0][0] == 1, 0, 0);
  check_cell(r, "corner_one", d.h[n][n] == 1, n, n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      check_cell(r, "nonnegative", d.h[p][q] >= 0, p, q);
      check_cell(r, "conjugation_symmetry", d.h[p][q] == d.h[q][p], p, q);
      check_cell(r, "duality_symmetry", d.h[p][q] == d.h[n - p][n - q], p, q);
      if (p >= 1 && q >= 1 && p + q <= n)
        check_cell(r, "lefschetz_monotone", d.h[p][q] >= d.h[p - 1][q - 1], p, q);
    }
  return r;
}

ValidityReport validate(const TruncatedDiamond& d) {
  ValidityReport r;
  const int n = d.n;
  check_cell(r, "corner_one", d.h[0][0] == 1, 0, 0);
  check_cell(r, "corner_one", d.h[n][n] == 1, n, n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q == n) continue;
      check_cell(r, "nonnegative", d.h[p][q] >= 0, p, q);
      check_cell(r, "conjugation_symmetry", d.h[p][q] == d.h[q][p], p, q);
      check_cell(r, "duality_symmetry", d.h[p][q] == d.h[n - p][n - q], p, q);
      if (p >= 1 && q >= 1 && p + q < n)
        check_cell(r, "lefschetz_monotone", d.h[p][q] >= d.h[p - 1][q - 1], p, q);
    }
  return r;
}

ValidityReport validate_betti(const BettiVector& b) {
  ValidityReport r;
  if (b.empty() || b.size() % 2 == 0) {
    check_cell(r, "length_odd", false, static_cast<int>(b.size()), 0);
    return r;
  }
  const int top = static_cast<int>(b.size()) - 1;
  const int n = top / 2;
  check_cell(r, "corner_one", b[0] == 1, 0, 0);
  check_cell(r, "corner_one", b[top] == 1, top, 0);
  for (int k = 0; k <= top; ++k) {
    check_cell(r, "nonnegative", b[k] >= 0, k, 0);
    check_cell(r, "duality_symmetry", b[k] == b[top - k], k, 0);
    if (k >= 2 && k <= n)
      check_cell(r, "lefschetz_monotone", b[k] >= b[k - 2], k, 0);
    if (k % 2 == 1) check_cell(r, "odd_entry_even", b[k] % 2 == 0, k, 0);
  }
  return r;
}

PrimitiveTable primitive_numbers(const HodgeDiamond& d) {
  PrimitiveTable t{d.n, square(d.n)};
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q + p <= d.n; ++q)
      t.l[p][q] = d.h[p][q] - d.at_or_zero(p - 1, q - 1);
  return t;
}

HodgeDiamond integrate_primitive(const PrimitiveTable& t) {
  HodgeDiamond d = HodgeDiamond::zero(t.n);
  for (int p = 0; p <= t.n; ++p)
    for (int q = 0; q <= t.n; ++q) {
      if (p + q <= t.n) {
        Int acc = 0;
        for (int s = 0; s <= std::min(p, q); ++s) acc += t.l[p - s][q - s];
        d.h[p][q] = acc;
      } else {
        Int acc = 0;
        const int pp = t.n - p, qq = t.n - q;
        for (int s = 0; s <= std::min(pp, qq); ++s) acc += t.l[pp - s][qq - s];
        d.h[p][q] = acc;
      }
    }
  return d;
}

BettiVector betti_of(const HodgeDiamond& d) {
  BettiVector b(2 * d.n + 1, Int(0));
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) b[p + q] += d.h[p][q];
  return b;
}

BettiVector betti_of(const TruncatedDiamond& d) {
  BettiVector b(2 * d.n + 1, Int(0));
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q)
      if (p + q != d.n) b[p + q] += d.h[p][q];
  b[d.n] = -1;
  return b;
}

HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b) {
  HodgeDiamond d = HodgeDiamond::zero(a.n + b.n);
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q) {
      Int acc = 0;
      for (int p1 = std::max(0, p - b.n); p1 <= std::min(p, a.n); ++p1)
        for (int q1 = std::max(0, q - b.n); q1 <= std::min(q, a.n); ++q1)
          acc += a.h[p1][q1] * b.h[p - p1][q - q1];
      d.h[p][q] = acc;
    }
  return d;
}

HodgeDiamond blow_up(const HodgeDiamond& x, const HodgeDiamond& center) {
  if (center.n >= x.n)
    throw input_error("blow-up center must have strictly smaller dimension");
  const int r = x.n - center.n;
  HodgeDiamond d = x;
  for (int p = 0; p <= d.n; ++p)
    for (int q = 0; q <= d.n; ++q)
      for (int i = 0; i <= r - 2; ++i)
        d.h[p][q] += center.at_or_zero(p - i - 1, q - i - 1);
  return d;
}

TruncatedDiamond blow_up_points(const TruncatedDiamond& x, const Int& count) {
  if (count < 0) throw input_error("blow-up count must be nonnegative");
  TruncatedDiamond d = x;
  for (int s = 1; s < d.n; ++s)
    if (2 * s != d.n) d.h[s][s] += count;
  return d;
}

}  // namespace hodgeforge
