#ifndef HODGEFORGE_INEQUALITIES_HPP
#define HODGEFORGE_INEQUALITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hodgeforge/constructor.hpp"
#include "hodgeforge/diamond.hpp"

namespace hodgeforge {

/// One evaluated rule: the named inequality or identity, the mathematical
/// fact it rests on, the verdict, and the two compared quantities. Rules
/// whose hypotheses are not met report "n/a" with the sides still evaluated
/// whenever they are expressible.
struct CheckRow {
  std::string rule;
  std::string anchor;
  std::string status;
  Int lhs;
  Int rhs;
};

struct CheckReport {
  std::string classification;
  std::vector<CheckRow> rows;

  bool passed() const;
};

/// Surface Hodge data; b1 = 2 h10 and b2 = 2 h20 + h11.
struct SurfaceData {
  Int h10;
  Int h20;
  Int h11;
};

/// Evaluates the surface inequality in its Hodge form 1 + h10 + h20 <= h11,
/// the strict consequence h20 < h11, and the Chern translation c1^2 <= 3 c2
/// with c2 = 2 - 2 b1 + b2 and c1^2 = 10 - 4 b1 + 10 h20 - h11.
CheckReport surface_check(const SurfaceData& d);

/// Threefold Hodge data with optional Chern input. The canonical type is
/// read off h30 when h11 = 1.
struct ThreefoldData {
  Int h10;
  Int h20;
  Int h30;
  Int h11;
  Int h21;
  std::optional<Int> c1c2;
  std::optional<Int> c1_cubed;
};

CheckReport threefold_check(const ThreefoldData& d);

/// The admissible middle Hodge numbers h21 of the anti-ample branch.
const std::vector<Int>& fano_h21_values();

/// Fourfold Hodge data with optional Chern input. The canonical type cannot
/// be read off the Hodge numbers; callers may state it ("ample",
/// "anti_ample", "trivial") or leave it empty. Vanishing c1-monomials also
/// activate the numerically-trivial rule.
struct FourfoldData {
  Int h10;
  Int h20;
  Int h30;
  Int h40;
  Int h11;
  Int h21;
  Int h31;
  Int h22;
  std::optional<Int> c1_4;
  std::optional<Int> c1_2_c2;
  std::optional<Int> c1_c3;
  std::optional<Int> c2_2;
  std::optional<Int> c4;
  std::string canonical;
};

CheckReport fourfold_check(const FourfoldData& d);

/// Full diamond of a smooth degree-d hypersurface in projective (n+1)-space:
/// off-middle rows equal projective n-space, the middle primitive numbers
/// come from the coefficient of t^((q+1)d-(n+2)) in ((1-t^(d-1))/(1-t))^(n+2),
/// and the ambient class is added on the diagonal when n is even.
HodgeDiamond hypersurface_hodge(int n, long d);

/// Primitive cohomology dimensions P^0..P^n of V_d x P^(n-k):
/// P^j = b_j - b_(j-2) of the product diamond.
std::vector<Int> product_primitive(int n, int k, long d);

struct DominationQuery {
  int n = 1;
  int r = 0;
  int s = 0;
  int p = 0;
  int q = 0;
};

struct DominationVerdict {
  bool dominates = false;
  std::string tag;
};

/// Decides whether h^(r,s) dominates h^(p,q) nontrivially in dimension n.
/// True exactly for n = 2, (r,s) = (1,1), (p,q) = (2,0) up to the index
/// symmetries. Every answer carries a tag: the witnessing inequality for
/// the true case, the triviality reason when the relation follows from the
/// symmetries or the monotonicity chain, and otherwise the name of the
/// family along which the relation fails.
DominationVerdict dominates(const DominationQuery& query);

struct FamilyWitness {
  /// Value of the bounded side; absent when the family only certifies
  /// boundedness without computing the number.
  std::optional<Int> h_rs;
  Int h_pq;
};

struct FamilyReport {
  std::string tag;
  /// Witness values were produced (the growing side is always numeric when
  /// true; the bounded side may still be a flag).
  bool computable = true;
  /// The bounded side is numeric in every witness.
  bool exact_bounded_side = true;
  /// Explicit bound for the h_rs side when the family pins one down.
  std::optional<Int> bound;
  std::vector<FamilyWitness> witnesses;
  std::optional<ZcCertificate> certificate;
  std::optional<Recipe> recipe;
  std::string note;
};

/// Produces `count` witness pairs along the counterexample family named by
/// dominates(query), with the growing side strictly increasing. Families
/// whose bounded side the theory does not compute return a boundedness flag
/// (and the certificate); the hyperplane-section family returns no numbers,
/// only the ambient recipe.
FamilyReport counterexample_family(const DominationQuery& query, int count);

}  // namespace hodgeforge

#endif
