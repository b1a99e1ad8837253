#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hodgeforge/cohomology.hpp"
#include "hodgeforge/diamond.hpp"

using namespace hodgeforge;

namespace {

std::vector<ProductSpace> small_spaces() {
  std::vector<ProductSpace> out;
  out.push_back(ProductSpace{{0}});
  out.push_back(ProductSpace{{1}});
  out.push_back(ProductSpace{{3}});
  out.push_back(ProductSpace{{1, 1}});
  out.push_back(ProductSpace{{2, 0}});
  out.push_back(ProductSpace{{1, 2, 3}});
  out.push_back(ProductSpace{{0, 1, 0, 2}});
  out.push_back(ProductSpace{{2, 2, 1, 1}});
  return out;
}

}  // namespace

TEST_CASE("basis sizes sum to the product of factor ranks") {
  for (const ProductSpace& space : small_spaces()) {
    Int expect = 1;
    for (int g : space.genera) expect *= 2 + 2 * g;
    Int total = 0;
    const int k = space.factors();
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        total += Int(basis(space, p, q).size());
    CHECK(total == expect);
  }
}

TEST_CASE("basis counts agree with enumeration and with the diamond") {
  for (const ProductSpace& space : small_spaces()) {
    const HodgeDiamond d = hodge_numbers(space);
    const int k = space.factors();
    REQUIRE(d.n == k);
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q) {
        const auto mono = basis(space, p, q);
        CHECK(basis_count(space, p, q) == Int(mono.size()));
        CHECK(d.at(p, q) == Int(mono.size()));
      }
  }
}

TEST_CASE("the product diamond is the kunneth product of its curves") {
  for (const ProductSpace& space : small_spaces()) {
    HodgeDiamond expect = HodgeDiamond::point();
    for (int g : space.genera) expect = kunneth(expect, HodgeDiamond::curve(g));
    const HodgeDiamond got = hodge_numbers(space);
    REQUIRE(got.n == expect.n);
    for (int p = 0; p <= got.n; ++p)
      for (int q = 0; q <= got.n; ++q) CHECK(got.at(p, q) == expect.at(p, q));
  }
}

TEST_CASE("conjugation swaps the basis bidegrees") {
  for (const ProductSpace& space : small_spaces()) {
    const int k = space.factors();
    for (int p = 0; p <= k; ++p)
      for (int q = 0; q <= k; ++q)
        CHECK(basis(space, p, q).size() == basis(space, q, p).size());
  }
}

TEST_CASE("every basis monomial carries the requested bidegree") {
  const ProductSpace space{{2, 1, 0}};
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q)
      for (const Monomial& m : basis(space, p, q)) {
        CHECK(m.bidegree() == std::pair<int, int>{p, q});
        REQUIRE(m.letters.size() == 3);
      }
}

TEST_CASE("the basis is sorted and duplicate free") {
  const ProductSpace space{{2, 2}};
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      const auto mono = basis(space, p, q);
      CHECK(std::is_sorted(mono.begin(), mono.end()));
      CHECK(std::adjacent_find(mono.begin(), mono.end()) == mono.end());
    }
}

TEST_CASE("single factor letters follow the curve ranks") {
  const ProductSpace space{{3}};
  CHECK(basis(space, 0, 0).size() == 1);
  CHECK(basis(space, 1, 0).size() == 3);
  CHECK(basis(space, 0, 1).size() == 3);
  CHECK(basis(space, 1, 1).size() == 1);
  const Monomial top = basis(space, 1, 1).front();
  CHECK(top.letters.front().kind == Letter::Kind::Top);
}

TEST_CASE("genus zero factors contribute only unit and top letters") {
  const ProductSpace space{{0, 0}};
  CHECK(basis(space, 1, 0).empty());
  CHECK(basis(space, 1, 1).size() == 2);
  CHECK(basis(space, 2, 2).size() == 1);
  const HodgeDiamond d = hodge_numbers(space);
  CHECK(validate(d).valid);
  CHECK(d.at(1, 1) == 2);
}

TEST_CASE("scalar modulus covers rotations and the sign") {
  CHECK(ProductSpace{{0}}.scalar_modulus() == 2);
  CHECK(ProductSpace{{1}}.scalar_modulus() == 6);
  CHECK(ProductSpace{{1, 2}}.scalar_modulus() == 30);
}
