#ifndef HODGEFORGE_GROUPS_HPP
#define HODGEFORGE_GROUPS_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "hodgeforge/cohomology.hpp"
#include "hodgeforge/cyclotomic.hpp"
#include "hodgeforge/errors.hpp"

namespace hodgeforge {

/// Per-factor twist: j is the exponent of the order-(2g+1) rotation of that
/// factor, s flips the sign of its one-form letters (the involution). Both
/// are stored normalized: 0 <= j < 2g+1.
struct Twist {
  int j = 0;
  std::uint8_t s = 0;

  auto operator<=>(const Twist&) const = default;
};

/// An automorphism of a product of curves: factor f's content is twisted by
/// twist[f], then moved to factor perm[f]. Factors may only be permuted onto
/// factors of equal genus. Equality and ordering are the canonical
/// (perm, twist) tuple comparisons.
struct GroupElement {
  std::vector<int> perm;
  std::vector<Twist> twist;

  auto operator<=>(const GroupElement&) const = default;
};

GroupElement identity_element(const ProductSpace& space);

/// Throws input_error unless perm is a genus-preserving permutation and all
/// twists are normalized for their factor.
void check_element(const ProductSpace& space, const GroupElement& e);

/// Composition second . first (first acts first).
GroupElement compose(const ProductSpace& space, const GroupElement& second,
                     const GroupElement& first);

GroupElement inverse(const ProductSpace& space, const GroupElement& e);

/// Applies an element to a basis monomial. The image is again a basis
/// monomial; the scalar collects the rotation eigenvalues, the involution
/// signs, and the reordering sign of the odd-degree letters.
std::pair<Monomial, Scalar> act(const ProductSpace& space,
                                const GroupElement& e, const Monomial& mono);

/// Group presentation on (a+b) factors of genus g: rotations with exponent
/// sums balanced across the two blocks, signed block permutations, and the
/// block swap when a = b.
struct GabgSpec {
  int a = 0;
  int b = 0;
  Int g = 0;
};

/// Group for the weight-two construction on (C_g x C_g)^(n1*n2): factor
/// (j,i,c) is curve c of the copy at block j, slot i. Generated by per-block
/// and per-slot balanced rotations, the diagonal signed swap, and the block
/// and slot permutations.
struct Weight2Spec {
  int n1 = 1;
  int n2 = 1;
  Int g = 0;
};

/// Explicit generator list on an explicit space.
struct ExplicitSpec {
  ProductSpace space;
  std::vector<GroupElement> gens;
};

/// Independent groups acting on consecutive factor ranges.
struct ProductGroupSpec {
  std::vector<GabgSpec> parts;
};

using GroupSpec = std::variant<GabgSpec, Weight2Spec, ExplicitSpec, ProductGroupSpec>;

/// The space a group spec acts on. Genera must fit enumeration range;
/// oversized genera are a resource error (closed-form paths never call this).
ProductSpace space_of(const GroupSpec& spec);

std::vector<GroupElement> generators(const GroupSpec& spec);

/// Deterministic single-threaded breadth-first closure under composition.
/// Result is sorted in canonical element order. Throws resource_limit_error
/// when the closure would exceed max_group; never returns a partial set.
std::vector<GroupElement> close(const ProductSpace& space,
                                const std::vector<GroupElement>& gens,
                                std::uint64_t max_group);

/// The three factors of the balanced-rotation group's closure, enumerated
/// directly: all balanced rotation vectors, the parity-matched signed
/// permutations of each block, and the block swap (when a = b). The closure
/// of generators(GabgSpec) is exactly the set of products k1.k2.k3, each
/// element reached once.
std::vector<GroupElement> kind1_elements(const GabgSpec& spec);
std::vector<GroupElement> kind2_elements(const GabgSpec& spec);
std::vector<GroupElement> kind3_elements(const GabgSpec& spec);

}  // namespace hodgeforge

#endif
