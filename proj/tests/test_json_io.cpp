#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <variant>

#include "hodgeforge/errors.hpp"
#include "hodgeforge/json_io.hpp"

using namespace hodgeforge;

namespace {

const Caps caps;

}  // namespace

TEST_CASE("full diamonds survive a round trip") {
  const HodgeDiamond original =
      kunneth(HodgeDiamond::curve(3), HodgeDiamond::projective_space(2));
  const AnyDiamond parsed = parse_diamond(diamond_json(original));
  REQUIRE(std::holds_alternative<HodgeDiamond>(parsed));
  const HodgeDiamond& got = std::get<HodgeDiamond>(parsed);
  REQUIRE(got.n == original.n);
  for (int p = 0; p <= got.n; ++p)
    for (int q = 0; q <= got.n; ++q)
      CHECK(got.at(p, q) == original.at(p, q));
}

TEST_CASE("truncated diamonds keep their missing middle through a round trip") {
  TruncatedDiamond original = TruncatedDiamond::zero(3);
  for (int p = 0; p <= 3; ++p)
    original.at(std::min(p, 3 - p), std::min(p, 3 - p)) = 1;
  original.at(2, 0) = 4;
  original.at(0, 2) = 4;
  original.at(3, 1) = 4;
  original.at(1, 3) = 4;
  const std::string text = diamond_json(original);
  CHECK(text.find("null") != std::string::npos);
  const AnyDiamond parsed = parse_diamond(text);
  REQUIRE(std::holds_alternative<TruncatedDiamond>(parsed));
  const TruncatedDiamond& got = std::get<TruncatedDiamond>(parsed);
  CHECK(got.at(2, 0) == 4);
  CHECK_THROWS_AS(static_cast<void>(got.at(2, 1)), input_error);
}

TEST_CASE("nulls anywhere but the middle row are rejected") {
  CHECK_THROWS_AS(static_cast<void>(parse_diamond(
                      R"({"h": [[1, null], [0, 1]], "n": 1})")),
                  input_error);
  CHECK_THROWS_AS(static_cast<void>(parse_diamond(
                      R"({"h": [[1, 0], [null, 1]], "n": 1})")),
                  input_error);
  CHECK_THROWS_AS(static_cast<void>(parse_diamond(
                      R"({"h": [[1, 0, 1], [0, null, 0], [1, 0, 1]], "n": 2})")),
                  input_error);
}

TEST_CASE("oversized entries travel as decimal strings") {
  HodgeDiamond big = HodgeDiamond::projective_space(2);
  const Int huge = Int("123456789012345678901234567890");
  big.at(2, 0) = huge;
  big.at(0, 2) = huge;
  const std::string text = diamond_json(big);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  const AnyDiamond parsed = parse_diamond(text);
  CHECK(std::get<HodgeDiamond>(parsed).at(2, 0) == huge);
}

TEST_CASE("group descriptions of every kind survive a round trip") {
  const GroupSpec two_block = GabgSpec{3, 1, 7};
  const std::string two_block_text = group_json(two_block);
  CHECK(two_block_text.find("\"Gabg\"") != std::string::npos);
  const GroupSpec parsed = parse_group(two_block_text);
  REQUIRE(std::holds_alternative<GabgSpec>(parsed));
  CHECK(std::get<GabgSpec>(parsed).a == 3);
  CHECK(std::get<GabgSpec>(parsed).b == 1);
  CHECK(std::get<GabgSpec>(parsed).g == 7);

  const GroupSpec weight2 = Weight2Spec{2, 2, Int(5)};
  const std::string weight2_text = group_json(weight2);
  CHECK(weight2_text.find("\"Weight2\"") != std::string::npos);
  REQUIRE(std::holds_alternative<Weight2Spec>(parse_group(weight2_text)));
  CHECK(std::get<Weight2Spec>(parse_group(weight2_text)).g == 5);

  ExplicitSpec explicit_spec;
  explicit_spec.space.genera = {1, 1};
  GroupElement gen;
  gen.perm = {1, 0};
  gen.twist = {Twist{2, 1}, Twist{0, 0}};
  explicit_spec.gens = {gen};
  const std::string explicit_text = group_json(explicit_spec);
  CHECK(explicit_text.find("\"Explicit\"") != std::string::npos);
  CHECK(explicit_text.find("\"gens\"") != std::string::npos);
  const GroupSpec explicit_parsed = parse_group(explicit_text);
  REQUIRE(std::holds_alternative<ExplicitSpec>(explicit_parsed));
  const ExplicitSpec& got = std::get<ExplicitSpec>(explicit_parsed);
  CHECK(got.space.genera == std::vector<int>{1, 1});
  REQUIRE(got.gens.size() == 1);
  CHECK(got.gens[0].perm == std::vector<int>{1, 0});
  CHECK(got.gens[0].twist == gen.twist);

  ProductGroupSpec product;
  product.parts = {GabgSpec{2, 0, 4}, GabgSpec{1, 0, 1}};
  const std::string product_text = group_json(product);
  CHECK(product_text.find("\"Product\"") != std::string::npos);
  const GroupSpec product_parsed = parse_group(product_text);
  REQUIRE(std::holds_alternative<ProductGroupSpec>(product_parsed));
  CHECK(std::get<ProductGroupSpec>(product_parsed).parts.size() == 2);
}

TEST_CASE("unknown fields are rejected everywhere") {
  CHECK_THROWS_AS(
      static_cast<void>(parse_group(R"({"kind": "Gabg", "a": 2, "b": 0,
                                        "g": 1, "extra": 3})")),
      input_error);
  CHECK_THROWS_AS(static_cast<void>(parse_diamond(
                      R"({"h": [[1]], "n": 0, "name": "point"})")),
                  input_error);
  CHECK_THROWS_AS(static_cast<void>(parse_betti(R"({"b": [1, 0, 1]})")),
                  input_error);
  CHECK_THROWS_AS(static_cast<void>(parse_group(R"({"kind": "Rotation"})")),
                  input_error);
  CHECK_THROWS_AS(static_cast<void>(parse_group("not json")), input_error);
}

TEST_CASE("recipes survive a round trip with every feature populated") {
  Recipe original;
  original.n = 5;
  original.i0 = GabgSpec{3, 0, 2};
  original.blocks = {GabgSpec{2, 0, 1}, GabgSpec{1, 1, 3}};
  original.point_blowups = 9;
  original.times_p1 = true;
  original.provenance = "weight-planner";
  const Recipe got = parse_recipe(recipe_json(original));
  CHECK(got.n == 5);
  CHECK(std::get<GabgSpec>(got.i0).g == 2);
  REQUIRE(got.blocks.size() == 2);
  CHECK(std::get<GabgSpec>(got.blocks[1]).b == 1);
  CHECK(got.point_blowups == 9);
  CHECK(got.times_p1);
  CHECK(got.provenance == "weight-planner");

  const EvaluatedDiamond left = evaluate(original, caps);
  const EvaluatedDiamond right = evaluate(got, caps);
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      REQUIRE(left.determined(p, q) == right.determined(p, q));
      if (left.determined(p, q)) CHECK(*left.at(p, q) == *right.at(p, q));
    }
}

TEST_CASE("planner envelopes unwrap to their recipe when feasible") {
  std::vector<Int> target = {Int(1), Int(0), Int(2), Int(0), Int(1)};
  target[2] = weight_floor(2) + 2;
  const PlanOutcome outcome = plan_weight_k(4, target, 5);
  REQUIRE(outcome.feasible());
  const std::string text = plan_json(outcome);
  const Recipe unwrapped = parse_recipe(text);
  CHECK(unwrapped.n == outcome.recipe->n);

  std::vector<Int> bad_target = {Int(1), Int(0), Int(1), Int(0), Int(1)};
  const std::string infeasible_text = plan_json(plan_weight_k(4, bad_target, 5));
  CHECK_THROWS_AS(static_cast<void>(parse_recipe(infeasible_text)),
                  input_error);
}

TEST_CASE("verdict serialization is byte exact") {
  const std::string text = verdict_json(dominates({2, 1, 1, 2, 0}));
  CHECK(text ==
        "{\n  \"dominates\": true,\n  \"justification\": "
        "\"surface-bmy-inequality\"\n}\n");
}

TEST_CASE("invariant tables serialize sparsely and in order") {
  const InvariantTable table = invariant_table(GabgSpec{2, 0, 1}, caps);
  const std::string text = table_json(table);
  CHECK(text.find("\"dims\"") != std::string::npos);
  CHECK(text.find("\"k\": 2") != std::string::npos);
  CHECK(text.find("[\n      0,\n      0,\n      1\n    ]") !=
        std::string::npos);
}

TEST_CASE("surface and threefold parsers read full objects") {
  const SurfaceData surface =
      parse_surface(R"({"h10": 1, "h11": 5, "h20": 2})");
  CHECK(surface.h10 == 1);
  CHECK(surface.h20 == 2);
  CHECK(surface.h11 == 5);
  CHECK_THROWS_AS(static_cast<void>(parse_surface(R"({"h10": 1})")),
                  input_error);

  const ThreefoldData threefold = parse_threefold(
      R"({"c1_cubed": -64, "c1c2": -24, "h10": 0, "h11": 1, "h20": 0,
          "h21": 4, "h30": 2})");
  CHECK(threefold.h21 == 4);
  REQUIRE(threefold.c1c2.has_value());
  CHECK(*threefold.c1c2 == -24);
  REQUIRE(threefold.c1_cubed.has_value());
  CHECK(*threefold.c1_cubed == -64);

  const ThreefoldData sparse = parse_threefold(
      R"({"c1_cubed": null, "c1c2": null, "h10": 0, "h11": 1, "h20": 0,
          "h21": 52, "h30": 0})");
  CHECK(!sparse.c1c2.has_value());
}

TEST_CASE("fourfold parsing accepts the canonical type and chern block") {
  const FourfoldData d = parse_fourfold(
      R"({"c1_2_c2": 250, "c1_4": 625, "c1_c3": 50, "c2_2": 100, "c4": 5,
          "canonical": "anti_ample", "h10": 0, "h11": 1, "h20": 0, "h21": 0,
          "h22": 1, "h30": 0, "h31": 0, "h40": 0})");
  CHECK(d.canonical == "anti_ample");
  REQUIRE(d.c2_2.has_value());
  CHECK(*d.c2_2 == 100);
  CHECK_THROWS_AS(static_cast<void>(parse_fourfold(R"({"h10": 0})")),
                  input_error);
}

TEST_CASE("betti vectors parse from both accepted shapes") {
  const BettiVector bare = parse_betti("[1, 0, 2, 0, 1]");
  REQUIRE(bare.size() == 5);
  CHECK(bare[2] == 2);
  const BettiVector wrapped = parse_betti(R"({"betti": [1, 0, 2, 0, 1]})");
  CHECK(wrapped == bare);
  CHECK_THROWS_AS(static_cast<void>(parse_betti(R"({"betti": 3})")),
                  input_error);
  const BettiVector negative = parse_betti("[1, 0, -2, 0, 1]");
  CHECK(!validate_betti(negative).valid);
}

TEST_CASE("weight and middle plan inputs parse their envelope") {
  const WeightPlanInput weight = parse_weight_input(
      R"({"k": 4, "n": 5, "target": [1, 0, 5, 0, 1]})");
  CHECK(weight.k == 4);
  CHECK(weight.n == 5);
  REQUIRE(weight.target.size() == 5);
  CHECK(weight.target[2] == 5);
  CHECK_THROWS_AS(
      static_cast<void>(parse_weight_input(R"({"k": 4, "target": []})")),
      input_error);

  const MiddlePlanInput middle =
      parse_middle_input(R"({"n": 3, "target": [0, 2, 2, 0]})");
  CHECK(middle.n == 3);
  CHECK(middle.target[1] == 2);
}

TEST_CASE("check reports serialize with one row per rule") {
  const CheckReport report = surface_check({0, 2, 4});
  const std::string text = report_json(report);
  CHECK(text.find("\"classification\": \"general-type-surface\"") !=
        std::string::npos);
  CHECK(text.find("\"rule\": \"bmy-hodge-form\"") != std::string::npos);
  CHECK(text.find("\"paper_anchor\": \"bogomolov-miyaoka-yau\"") !=
        std::string::npos);
  CHECK(text.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("family reports serialize witnesses and optional blocks") {
  const std::string growing =
      family_json(counterexample_family({3, 2, 1, 1, 1}, 3));
  CHECK(growing.find("\"tag\": \"point-blowup-family\"") != std::string::npos);
  CHECK(growing.find("\"witnesses\"") != std::string::npos);
  CHECK(growing.find("\"computable\": true") != std::string::npos);

  const std::string flagged =
      family_json(counterexample_family({4, 2, 2, 4, 0}, 2));
  CHECK(flagged.find("\"certificate\"") != std::string::npos);
  CHECK(flagged.find("\"exact_bounded_side\": false") != std::string::npos);
}

TEST_CASE("certificates serialize their tree") {
  const std::string text = certificate_json(zc_certificate(2, 1, 2, 4));
  CHECK(text.find("\"offdiag\": 4") != std::string::npos);
  CHECK(text.find("\"tree\"") != std::string::npos);
  CHECK(text.find("\"genus\": 4") != std::string::npos);
}
