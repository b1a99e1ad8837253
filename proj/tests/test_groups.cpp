#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <json.hpp>

#include "hodgeforge/cohomology.hpp"
#include "hodgeforge/errors.hpp"
#include "hodgeforge/groups.hpp"

using namespace hodgeforge;

namespace {

nlohmann::json load_artifact(const char* name) {
  std::ifstream file(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE(file.good());
  return nlohmann::json::parse(file);
}

GroupElement random_element(std::mt19937_64& rng, const ProductSpace& space) {
  const int k = space.factors();
  GroupElement e = identity_element(space);
  // Permute only within equal-genus classes.
  std::map<int, std::vector<int>> classes;
  for (int f = 0; f < k; ++f)
    classes[space.genera[static_cast<std::size_t>(f)]].push_back(f);
  for (auto& [genus, members] : classes) {
    std::vector<int> shuffled = members;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t i = 0; i < members.size(); ++i)
      e.perm[static_cast<std::size_t>(members[i])] = shuffled[i];
  }
  for (int f = 0; f < k; ++f) {
    const int order = 2 * space.genera[static_cast<std::size_t>(f)] + 1;
    std::uniform_int_distribution<int> rot(0, order - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    e.twist[static_cast<std::size_t>(f)].j = rot(rng);
    e.twist[static_cast<std::size_t>(f)].s =
        static_cast<std::uint8_t>(sign(rng));
  }
  check_element(space, e);
  return e;
}

Monomial random_monomial(std::mt19937_64& rng, const ProductSpace& space) {
  Monomial m;
  for (int g : space.genera) {
    std::uniform_int_distribution<int> pick(0, 2 * g + 1);
    const int raw = pick(rng);
    Letter letter;
    if (raw == 0) {
      letter.kind = Letter::Kind::One;
    } else if (raw == 2 * g + 1) {
      letter.kind = Letter::Kind::Top;
    } else if (raw <= g) {
      letter.kind = Letter::Kind::Hol;
      letter.index = raw;
    } else {
      letter.kind = Letter::Kind::AntiHol;
      letter.index = raw - g;
    }
    m.letters.push_back(letter);
  }
  return m;
}

// Reference computation of the action, written against the documented
// convention: rotations scale the index-l one-forms by the l-th power of the
// factor's primitive root (conjugates inversely), the involution negates
// every one-form, and moving letters to their destinations contributes the
// parity of inversions among the odd letters' destination positions.
std::pair<Monomial, int> reference_act(const ProductSpace& space,
                                       const GroupElement& e,
                                       const Monomial& mono) {
  const int m = space.scalar_modulus();
  const int k = space.factors();
  long long exp = 0;
  Monomial out;
  out.letters.resize(static_cast<std::size_t>(k));
  std::vector<int> odd_destinations;
  for (int f = 0; f < k; ++f) {
    const Letter& letter = mono.letters[static_cast<std::size_t>(f)];
    const std::size_t dest = static_cast<std::size_t>(
        e.perm[static_cast<std::size_t>(f)]);
    out.letters[dest] = letter;
    if (!letter.odd()) continue;
    const int order = 2 * space.genera[static_cast<std::size_t>(f)] + 1;
    const long long rot = static_cast<long long>(
                              e.twist[static_cast<std::size_t>(f)].j) *
                          letter.index * (m / order);
    exp += letter.kind == Letter::Kind::Hol ? rot : -rot;
    if (e.twist[static_cast<std::size_t>(f)].s) exp += m / 2;
    odd_destinations.push_back(static_cast<int>(dest));
  }
  int inversions = 0;
  for (std::size_t i = 0; i < odd_destinations.size(); ++i)
    for (std::size_t j = i + 1; j < odd_destinations.size(); ++j)
      if (odd_destinations[i] > odd_destinations[j]) ++inversions;
  if (inversions % 2) exp += m / 2;
  exp %= m;
  if (exp < 0) exp += m;
  return {out, static_cast<int>(exp)};
}

}  // namespace

TEST_CASE("compose and inverse satisfy the group laws") {
  std::mt19937_64 rng(23);
  const ProductSpace space{{1, 1, 2, 0}};
  const GroupElement id = identity_element(space);
  for (int trial = 0; trial < 50; ++trial) {
    const GroupElement a = random_element(rng, space);
    const GroupElement b = random_element(rng, space);
    const GroupElement c = random_element(rng, space);
    CHECK(compose(space, a, id) == a);
    CHECK(compose(space, id, a) == a);
    CHECK(compose(space, a, inverse(space, a)) == id);
    CHECK(compose(space, inverse(space, a), a) == id);
    CHECK(compose(space, compose(space, a, b), c) ==
          compose(space, a, compose(space, b, c)));
  }
}

TEST_CASE("acting matches the reference computation") {
  std::mt19937_64 rng(29);
  for (const ProductSpace& space :
       {ProductSpace{{1, 1}}, ProductSpace{{2, 1}}, ProductSpace{{2, 2}}}) {
    for (int trial = 0; trial < 200; ++trial) {
      const GroupElement e = random_element(rng, space);
      const Monomial m = random_monomial(rng, space);
      const auto [got, scalar] = act(space, e, m);
      const auto [expect, exponent] = reference_act(space, e, m);
      CHECK(got == expect);
      CHECK(scalar.e == exponent);
      CHECK(scalar.m == space.scalar_modulus());
    }
  }
}

TEST_CASE("acting by a composition composes the actions") {
  std::mt19937_64 rng(31);
  for (const ProductSpace& space :
       {ProductSpace{{1, 1, 1}}, ProductSpace{{2, 0, 1, 1}}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const GroupElement first = random_element(rng, space);
      const GroupElement second = random_element(rng, space);
      const Monomial m = random_monomial(rng, space);
      const auto [mid, s1] = act(space, first, m);
      const auto [after, s2] = act(space, second, mid);
      const auto [direct, s] =
          act(space, compose(space, second, first), m);
      CHECK(direct == after);
      CHECK(s == s1.times(s2));
    }
  }
}

TEST_CASE("scalars always stay normalized roots of unity") {
  std::mt19937_64 rng(37);
  const ProductSpace space{{2, 1}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto [unused, s] =
        act(space, random_element(rng, space), random_monomial(rng, space));
    CHECK(s.m == space.scalar_modulus());
    CHECK(s.e >= 0);
    CHECK(s.e < s.m);
  }
}

TEST_CASE("a bare swap of two one-forms picks up the reordering sign") {
  const ProductSpace space{{1, 1}};
  GroupElement swap = identity_element(space);
  swap.perm = {1, 0};
  Monomial m;
  m.letters = {Letter{Letter::Kind::Hol, 1}, Letter{Letter::Kind::Hol, 1}};
  const auto [image, s] = act(space, swap, m);
  CHECK(image == m);
  CHECK(s.e == s.m / 2);

  Monomial mixed;
  mixed.letters = {Letter{Letter::Kind::Hol, 1}, Letter{Letter::Kind::One}};
  const auto [image2, s2] = act(space, swap, mixed);
  CHECK(image2.letters[0].kind == Letter::Kind::One);
  CHECK(image2.letters[1].kind == Letter::Kind::Hol);
  CHECK(s2.e == 0);
}

TEST_CASE("element checking rejects malformed data") {
  const ProductSpace space{{1, 2}};
  GroupElement mixes = identity_element(space);
  mixes.perm = {1, 0};
  CHECK_THROWS_AS(check_element(space, mixes), input_error);

  GroupElement overflow = identity_element(space);
  overflow.twist[0].j = 3;
  CHECK_THROWS_AS(check_element(space, overflow), input_error);

  GroupElement shape = identity_element(space);
  shape.perm.pop_back();
  CHECK_THROWS_AS(check_element(space, shape), input_error);
}

TEST_CASE("closure orders match the pinned artifact") {
  const nlohmann::json artifact = load_artifact("closure_orders.json");
  for (const auto& row : artifact.at("gabg")) {
    GabgSpec spec;
    spec.a = row.at("a").get<int>();
    spec.b = row.at("b").get<int>();
    spec.g = Int(row.at("g").get<int>());
    const ProductSpace space = space_of(spec);
    const auto elements = close(space, generators(spec), 1'000'000);
    CHECK(elements.size() == row.at("order").get<std::size_t>());
    CHECK(std::is_sorted(elements.begin(), elements.end()));
  }
  for (const auto& row : artifact.at("weight2")) {
    Weight2Spec spec;
    spec.n1 = row.at("n1").get<int>();
    spec.n2 = row.at("n2").get<int>();
    spec.g = Int(row.at("g").get<int>());
    const ProductSpace space = space_of(spec);
    const auto elements = close(space, generators(spec), 1'000'000);
    CHECK(elements.size() == row.at("order").get<std::size_t>());
  }
}

TEST_CASE("the closure factors through the three element kinds") {
  for (const GabgSpec spec :
       {GabgSpec{2, 0, 1}, GabgSpec{2, 1, 1}, GabgSpec{1, 1, 1},
        GabgSpec{2, 2, 1}}) {
    const ProductSpace space = space_of(spec);
    const auto closure = close(space, generators(spec), 1'000'000);
    const std::set<GroupElement> members(closure.begin(), closure.end());

    const auto k1 = kind1_elements(spec);
    const auto k2 = kind2_elements(spec);
    const auto k3 = kind3_elements(spec);
    std::set<GroupElement> products;
    for (const GroupElement& e1 : k1)
      for (const GroupElement& e2 : k2)
        for (const GroupElement& e3 : k3) {
          const GroupElement product =
              compose(space, e1, compose(space, e2, e3));
          CHECK(members.count(product) == 1);
          products.insert(product);
        }
    CHECK(products.size() == members.size());
    CHECK(k1.size() * k2.size() * k3.size() == members.size());
  }
}

TEST_CASE("closure respects the group cap") {
  const GabgSpec spec{2, 2, 1};
  const ProductSpace space = space_of(spec);
  CHECK_THROWS_AS(
      static_cast<void>(close(space, generators(spec), 100)),
      resource_limit_error);
}
