#ifndef HODGEFORGE_CONSTRUCTOR_HPP
#define HODGEFORGE_CONSTRUCTOR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hodgeforge/diamond.hpp"
#include "hodgeforge/invariants.hpp"

namespace hodgeforge {

/// A buildable construction: covering datum i0, blow-up center blocks, point
/// blow-ups, and optionally a final product with the projective line (in
/// which case the group data describes the inner (n-1)-fold). provenance
/// names the planner that produced the recipe.
struct Recipe {
  int n = 1;
  GroupSpec i0 = GabgSpec{0, 0, 0};
  std::vector<GroupSpec> blocks;
  Int point_blowups = 0;
  bool times_p1 = false;
  std::string provenance;
};

/// Evaluation result with per-cell determinacy: a cell is nullopt when the
/// recipe's guarantees do not pin it down (the middle row of a plain
/// construction, and the rows adjacent to the middle after a product with
/// the projective line).
struct EvaluatedDiamond {
  int n = 0;
  std::vector<std::vector<std::optional<Int>>> h;

  const std::optional<Int>& at(int p, int q) const;
  bool determined(int p, int q) const { return at(p, q).has_value(); }
  /// Requires every off-middle cell to be determined.
  TruncatedDiamond truncated() const;
  /// Present when every cell, middle row included, is determined.
  std::optional<HodgeDiamond> full() const;
};

struct ThresholdDetail {
  int p = 0;
  int q = 0;
  Int required;
  Int given;
};

/// Planner result; infeasibility is a value, never an exception. reason is
/// empty exactly when a recipe is present; details lists the failing cells
/// with their exact thresholds where that is the cause.
struct PlanOutcome {
  std::optional<Recipe> recipe;
  std::string reason;
  std::vector<ThresholdDetail> details;

  bool feasible() const { return recipe.has_value(); }
};

struct BettiPlan {
  PlanOutcome plan;
  /// The stated stronger sufficient condition
  /// 8*(b_2k - b_2k-2) >= k*(n^2-2n+5); advisory only, never the gate.
  bool stated_sufficient_condition = true;
};

/// Primitive table of the covering construction: l(p,q) for p+q < n equals
/// the i0 invariant dimension at (p,q) plus the block invariant dimensions
/// at (p-1,q-1). Cells with p+q >= n are left zero and carry no meaning.
PrimitiveTable key_construction(const InvariantTable& i0,
                                const std::vector<InvariantTable>& blocks,
                                int n);

/// Realizes the recipe's diamond. Plain recipes determine every cell off the
/// middle row (all cells when the recipe is purely point blocks); times_p1
/// recipes determine everything except the rows directly above and below the
/// middle, and do determine the middle row itself.
EvaluatedDiamond evaluate(const Recipe& recipe, const Caps& caps, int jobs = 1);

/// Plans a construction whose weight-k row matches `target` exactly
/// (target[i] is the (k-i, i) entry, so length k+1, symmetric). For even
/// k = 2m the diagonal entry must be at least the structural floor; the
/// excess is realized by point blow-ups.
PlanOutcome plan_weight_k(int k, const std::vector<Int>& target, int n);

/// Structural floor of the diagonal entry for even weight k = 2m.
Int weight_floor(int m);

/// Plans a construction matching a full truncated diamond exactly.
PlanOutcome plan_truncated(const TruncatedDiamond& target);

/// Plans a construction matching a middle row exactly (target[p] is the
/// (p, n-p) entry). Off-middle rows of the result are whatever the
/// construction yields; for n >= 3 the rows adjacent to the middle are
/// undetermined.
PlanOutcome plan_middle_weight(const std::vector<Int>& target, int n);

/// Plans a construction whose Betti numbers b_k match for every k != n,
/// distributing each even b near the diagonal and each odd b on the two
/// cells beside it.
BettiPlan plan_betti(const BettiVector& target);

/// Fixed diagonal contribution at l(p,p) of the single-cover planner with
/// outer weight k0, and of the two-cover planner; and their maximum, the
/// planning threshold C(p,n).
Int planner_constant_c1(int p, int n, int k0);
Int planner_constant_c2(int p, int n);
Int planner_constant(int p, int n);

/// Certificate for the existence of an n-fold whose (a,b) Hodge number is
/// (3^c - 1)/2 while every other Hodge number off the diagonal mirror orbit
/// of (a,b) vanishes; diagonal values are deliberately unspecified. The
/// tree records the inductive assembly from cyclic-cover curve data.
struct ZcNode {
  enum class Kind { Leaf, Combine };
  Kind kind = Kind::Leaf;
  /// Leaf: one curve with its order-3^c automorphism (or the inverse).
  Int genus = 0;
  bool inverse_automorphism = false;
  /// Combine: product of two certified pieces, quotiented and resolved.
  std::unique_ptr<ZcNode> first;
  std::unique_ptr<ZcNode> second;
  /// Certified bidegree carried by this node.
  int a = 0;
  int b = 0;
};

struct ZcCertificate {
  int a = 0;
  int b = 0;
  int c = 1;
  int n = 0;
  Int offdiag;
  int projective_factor = 0;
  ZcNode tree;
};

ZcCertificate zc_certificate(int a, int b, int c, int n);

/// The certified off-diagonal Hodge numbers: h(p,q) for p != q is offdiag
/// exactly when (p,q) lies on the shifted mirror orbit of (a,b), else 0.
/// Diagonal cells are unspecified (nullopt).
std::optional<Int> zc_hodge(const ZcCertificate& cert, int p, int q);

}  // namespace hodgeforge

#endif
