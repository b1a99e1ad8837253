#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hodgeforge/diamond.hpp"

using namespace hodgeforge;

namespace {

HodgeDiamond random_product(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> genus(0, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  HodgeDiamond d = HodgeDiamond::point();
  while (d.n < n) {
    if (coin(rng) == 0) {
      d = kunneth(d, HodgeDiamond::projective_space(1));
    } else {
      d = kunneth(d, HodgeDiamond::curve(genus(rng)));
    }
  }
  return d;
}

bool same(const HodgeDiamond& a, const HodgeDiamond& b) {
  if (a.n != b.n) return false;
  for (int p = 0; p <= a.n; ++p)
    for (int q = 0; q <= a.n; ++q)
      if (a.at(p, q) != b.at(p, q)) return false;
  return true;
}

}  // namespace

TEST_CASE("projective space diamonds validate up to dimension twenty") {
  for (int n = 0; n <= 20; ++n) {
    const HodgeDiamond d = HodgeDiamond::projective_space(n);
    CHECK(validate(d).valid);
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        CHECK(d.at(p, q) == (p == q ? 1 : 0));
  }
}

TEST_CASE("curve and point diamonds are valid") {
  CHECK(validate(HodgeDiamond::point()).valid);
  for (int g = 0; g <= 5; ++g) {
    const HodgeDiamond c = HodgeDiamond::curve(g);
    CHECK(validate(c).valid);
    CHECK(c.at(1, 0) == g);
    CHECK(c.at(0, 1) == g);
    CHECK(c.at(1, 1) == 1);
  }
}

TEST_CASE("the validity gate rejects each broken predicate") {
  HodgeDiamond corner = HodgeDiamond::projective_space(2);
  corner.at(0, 0) = 2;
  CHECK_FALSE(validate(corner).valid);

  HodgeDiamond asym = HodgeDiamond::projective_space(2);
  asym.at(1, 0) = 1;
  CHECK_FALSE(validate(asym).valid);

  HodgeDiamond dual = HodgeDiamond::projective_space(3);
  dual.at(1, 1) = 2;
  CHECK_FALSE(validate(dual).valid);

  HodgeDiamond monotone = HodgeDiamond::projective_space(4);
  monotone.at(1, 1) = 0;
  monotone.at(3, 3) = 0;
  const ValidityReport report = validate(monotone);
  CHECK_FALSE(report.valid);
  CHECK(!report.violations.empty());
}

TEST_CASE("kunneth matches the closed product forms of curves") {
  for (int g = 0; g <= 3; ++g)
    for (int h = 0; h <= 3; ++h) {
      const HodgeDiamond d =
          kunneth(HodgeDiamond::curve(g), HodgeDiamond::curve(h));
      CHECK(d.n == 2);
      CHECK(d.at(1, 0) == g + h);
      CHECK(d.at(2, 0) == g * h);
      CHECK(d.at(1, 1) == 2 + 2 * g * h);
      CHECK(d.at(2, 1) == g + h);
      CHECK(d.at(2, 2) == 1);
      CHECK(validate(d).valid);
    }
}

TEST_CASE("kunneth is commutative and associative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const HodgeDiamond a = random_product(rng, 2);
    const HodgeDiamond b = random_product(rng, 2);
    const HodgeDiamond c = random_product(rng, 1);
    CHECK(same(kunneth(a, b), kunneth(b, a)));
    CHECK(same(kunneth(kunneth(a, b), c), kunneth(a, kunneth(b, c))));
  }
}

TEST_CASE("kunneth with a point is the identity") {
  std::mt19937_64 rng(11);
  const HodgeDiamond a = random_product(rng, 3);
  CHECK(same(kunneth(a, HodgeDiamond::point()), a));
}

TEST_CASE("primitive numbers are nonnegative and integrate back") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const HodgeDiamond d = random_product(rng, 2 + trial % 4);
    REQUIRE(validate(d).valid);
    const PrimitiveTable l = primitive_numbers(d);
    for (int p = 0; p <= d.n; ++p)
      for (int q = 0; q <= d.n && p + q <= d.n; ++q) {
        CHECK(l.at(p, q) >= 0);
        Int sum = 0;
        for (int s = 0; s <= std::min(p, q); ++s) sum += l.at(p - s, q - s);
        CHECK(sum == d.at(p, q));
      }
    CHECK(same(integrate_primitive(l), d));
  }
}

TEST_CASE("betti numbers sum antidiagonals") {
  const HodgeDiamond d =
      kunneth(HodgeDiamond::curve(2), HodgeDiamond::curve(3));
  const BettiVector b = betti_of(d);
  REQUIRE(b.size() == 5);
  CHECK(b[0] == 1);
  CHECK(b[1] == 10);
  CHECK(b[2] == 26);
  CHECK(b[3] == 10);
  CHECK(b[4] == 1);
  CHECK(validate_betti(b).valid);
}

TEST_CASE("betti validity rejects odd entries that are odd numbers") {
  BettiVector b{Int(1), Int(3), Int(4), Int(3), Int(1)};
  CHECK_FALSE(validate_betti(b).valid);
  BettiVector ok{Int(1), Int(2), Int(4), Int(2), Int(1)};
  CHECK(validate_betti(ok).valid);
  BettiVector shrinking{Int(1), Int(0), Int(4), Int(6), Int(2), Int(0), Int(1)};
  CHECK_FALSE(validate_betti(shrinking).valid);
}

TEST_CASE("blow-up adds the shifted betti numbers of the center") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const HodgeDiamond x = random_product(rng, 3 + trial % 5);
    const int center_dim = trial % x.n;
    const HodgeDiamond center =
        center_dim == 0 ? HodgeDiamond::point() : random_product(rng, center_dim);
    REQUIRE(center.n < x.n);
    const HodgeDiamond blown = blow_up(x, center);
    CHECK(validate(blown).valid);
    const BettiVector bx = betti_of(x);
    const BettiVector bz = betti_of(center);
    const BettiVector bb = betti_of(blown);
    const int r = x.n - center.n;
    for (int k = 0; k <= 2 * x.n; ++k) {
      Int expect = bx[static_cast<std::size_t>(k)];
      for (int i = 1; i <= r - 1; ++i) {
        const int shifted = k - 2 * i;
        if (shifted >= 0 && shifted <= 2 * center.n)
          expect += bz[static_cast<std::size_t>(shifted)];
      }
      CHECK(bb[static_cast<std::size_t>(k)] == expect);
    }
  }
}

TEST_CASE("blow-up rejects centers of equal or larger dimension") {
  const HodgeDiamond x = HodgeDiamond::projective_space(2);
  CHECK_THROWS(static_cast<void>(blow_up(x, x)));
  CHECK_THROWS(static_cast<void>(
      blow_up(x, HodgeDiamond::projective_space(3))));
}

TEST_CASE("point blow-ups raise exactly the interior diagonal") {
  const HodgeDiamond x = kunneth(HodgeDiamond::curve(1),
                                 HodgeDiamond::projective_space(2));
  const HodgeDiamond blown = blow_up(x, HodgeDiamond::point());
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const Int expect =
          x.at(p, q) + ((p == q && p > 0 && p < 3) ? Int(1) : Int(0));
      CHECK(blown.at(p, q) == expect);
    }
}

TEST_CASE("truncated diamonds hide the middle row") {
  const HodgeDiamond full =
      kunneth(HodgeDiamond::curve(2), HodgeDiamond::curve(1));
  const TruncatedDiamond t = TruncatedDiamond::of(full);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(1, 0) == 3);
  CHECK_THROWS(static_cast<void>(t.at(1, 1)));
  CHECK_THROWS(static_cast<void>(t.at(2, 0)));
  CHECK(validate(t).valid);

  const BettiVector b = betti_of(t);
  CHECK(b[1] == 6);
  CHECK(b[2] == -1);
  CHECK(b[3] == 6);
}

TEST_CASE("interior point blow-ups on truncated diamonds skip the middle") {
  const HodgeDiamond full =
      kunneth(kunneth(HodgeDiamond::curve(1), HodgeDiamond::curve(1)),
              HodgeDiamond::projective_space(2));
  TruncatedDiamond t = TruncatedDiamond::of(full);
  const TruncatedDiamond blown = blow_up_points(t, 5);
  for (int s = 1; s < 4; ++s) {
    if (2 * s == 4) continue;
    CHECK(blown.at(s, s) == t.at(s, s) + 5);
  }
  CHECK(blown.at(1, 0) == t.at(1, 0));
  CHECK(validate(blown).valid);
}
