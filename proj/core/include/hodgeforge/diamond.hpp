#ifndef HODGEFORGE_DIAMOND_HPP
#define HODGEFORGE_DIAMOND_HPP

#include <string>
#include <vector>

#include "hodgeforge/bigint.hpp"

namespace hodgeforge {

/// A formal Hodge diamond of dimension n: an (n+1)x(n+1) matrix of naturals
/// h[p][q], indexed row-major. No geometric realizability is implied; the
/// validity predicate below captures exactly the first-order symmetries.
struct HodgeDiamond {
  int n = 0;
  std::vector<std::vector<Int>> h;

  static HodgeDiamond zero(int n);
  /// Projective n-space: ones on the (p,p) diagonal.
  static HodgeDiamond projective_space(int n);
  /// Smooth curve of genus g.
  static HodgeDiamond curve(const Int& g);
  static HodgeDiamond point();

  const Int& at(int p, int q) const;
  Int& at(int p, int q);
  /// h[p][q], with 0 for indices outside [0,n]. Convenient for convolutions.
  Int at_or_zero(int p, int q) const;
};

/// A formal Hodge diamond with the middle row p+q = n deliberately absent.
/// Entries with p+q == n are carried as storage but must never be read; the
/// accessor enforces this.
struct TruncatedDiamond {
  int n = 0;
  std::vector<std::vector<Int>> h;

  static TruncatedDiamond zero(int n);
  /// Drops the middle row of a full diamond.
  static TruncatedDiamond of(const HodgeDiamond& d);

  const Int& at(int p, int q) const;
  Int& at(int p, int q);
  Int at_or_zero(int p, int q) const;
};

struct Violation {
  std::string predicate;
  int p = 0;
  int q = 0;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Betti numbers b_0..b_2n; b_k is the sum of h[p][q] over p+q = k.
using BettiVector = std::vector<Int>;

/// Differences l[p][q] = h[p][q] - h[p-1][q-1], defined for p+q <= n.
/// On a valid diamond these are the dimensions of the primitive pieces.
struct PrimitiveTable {
  int n = 0;
  std::vector<std::vector<Int>> l;

  const Int& at(int p, int q) const;
  Int& at(int p, int q);
};

/// Checks h[0][0] = h[n][n] = 1, the two index symmetries
/// h[p][q] = h[q][p] = h[n-p][n-q], nonnegativity, and the hard Lefschetz
/// monotonicity h[p][q] >= h[p-1][q-1] for p+q <= n. This is the single
/// validity gate; all other operations assume validated inputs.
ValidityReport validate(const HodgeDiamond& d);

/// Same predicates, skipping every check that touches the absent middle row.
ValidityReport validate(const TruncatedDiamond& d);

/// Betti-vector shape checks: b_0 = b_2n = 1, b_k = b_2n-k,
/// b_k >= b_k-2 for k <= n, odd-index entries even.
ValidityReport validate_betti(const BettiVector& b);

PrimitiveTable primitive_numbers(const HodgeDiamond& d);

/// Reconstructs h[p][q] = sum_s l[p-s][q-s] for p+q <= n, mirrored above.
HodgeDiamond integrate_primitive(const PrimitiveTable& t);

BettiVector betti_of(const HodgeDiamond& d);

/// Betti numbers of a truncated diamond, defined for k != n only;
/// the entry at k = n is returned as -1 (absent).
BettiVector betti_of(const TruncatedDiamond& d);

/// Product formula: h[p][q] = sum over p1+p2=p, q1+q2=q of the factor values.
HodgeDiamond kunneth(const HodgeDiamond& a, const HodgeDiamond& b);

/// Diamond of the blow-up of an n-fold with diamond `x` along a smooth center
/// with diamond `center` of strictly smaller dimension: with r = n - dim
/// center, adds sum_{i=0}^{r-2} center[p-i-1][q-i-1] to each cell.
HodgeDiamond blow_up(const HodgeDiamond& x, const HodgeDiamond& center);

/// Adds `count` to every diagonal cell h[s][s], 0 < s < n, of a truncated
/// diamond (cells with 2s = n are absent and untouched). This is the n-fold
/// point blow-up effect on the stored rows.
TruncatedDiamond blow_up_points(const TruncatedDiamond& x, const Int& count);

}  // namespace hodgeforge

#endif
