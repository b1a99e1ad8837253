#ifndef HODGEFORGE_COHOMOLOGY_HPP
#define HODGEFORGE_COHOMOLOGY_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "hodgeforge/diamond.hpp"

namespace hodgeforge {

/// One tensor factor of a basis monomial on a product of curves. Each factor
/// of genus g contributes the unit class, the g holomorphic and g
/// antiholomorphic one-form classes, or the top class. Degree-two content of
/// a factor is always the top class; there is no two-form product letter.
struct Letter {
  enum class Kind : std::uint8_t { One, Hol, AntiHol, Top };
  Kind kind = Kind::One;
  /// 1-based eigenform index l in 1..g; 0 for One and Top.
  int index = 0;

  auto operator<=>(const Letter&) const = default;

  /// Bidegree contribution: One (0,0), Hol (1,0), AntiHol (0,1), Top (1,1).
  int p() const { return kind == Kind::Hol || kind == Kind::Top ? 1 : 0; }
  int q() const { return kind == Kind::AntiHol || kind == Kind::Top ? 1 : 0; }
  /// Odd total degree: exactly the one-form letters. Permutations pick up
  /// their reordering sign from these.
  bool odd() const { return kind == Kind::Hol || kind == Kind::AntiHol; }
};

/// A product of smooth curves, one genus per factor. Genus 0 factors are
/// allowed (their only letters are One and Top).
struct ProductSpace {
  std::vector<int> genera;

  int factors() const { return static_cast<int>(genera.size()); }
  /// Order of the scalar group every twist lands in: lcm over factors of
  /// 2*(2g+1), and at least 2 so a bare sign is always representable.
  int scalar_modulus() const;
};

/// A basis monomial: one letter per factor. Carries no sign; scalars live
/// beside monomials, never inside them.
struct Monomial {
  std::vector<Letter> letters;

  auto operator<=>(const Monomial&) const = default;
  std::pair<int, int> bidegree() const;
};

/// All monomials of bidegree (p,q), in canonical lexicographic order.
std::vector<Monomial> basis(const ProductSpace& space, int p, int q);

/// Number of basis monomials of bidegree (p,q), without enumerating.
Int basis_count(const ProductSpace& space, int p, int q);

/// The full diamond of the product space; entry (p,q) equals
/// basis_count(space, p, q).
HodgeDiamond hodge_numbers(const ProductSpace& space);

}  // namespace hodgeforge

#endif
