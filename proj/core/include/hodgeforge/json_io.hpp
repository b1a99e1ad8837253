#ifndef HODGEFORGE_JSON_IO_HPP
#define HODGEFORGE_JSON_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "hodgeforge/constructor.hpp"
#include "hodgeforge/diamond.hpp"
#include "hodgeforge/inequalities.hpp"
#include "hodgeforge/invariants.hpp"

namespace hodgeforge {

// Serialization uses two-space indentation and lexicographically sorted
// keys. Integers are emitted as JSON numbers when they fit in 64 bits and
// as decimal strings otherwise; parsers accept both forms.

std::string diamond_json(const HodgeDiamond& d);
std::string diamond_json(const TruncatedDiamond& d);
std::string diamond_json(const EvaluatedDiamond& d);

/// Parses {"n", "h"}; entries may be null exactly on the middle row, in
/// which case the result is truncated.
using AnyDiamond = std::variant<HodgeDiamond, TruncatedDiamond>;
AnyDiamond parse_diamond(const std::string& text);

std::string table_json(const InvariantTable& t);
std::string group_json(const GroupSpec& s);
GroupSpec parse_group(const std::string& text);

std::string recipe_json(const Recipe& r);
Recipe parse_recipe(const std::string& text);

std::string plan_json(const PlanOutcome& p);
std::string betti_plan_json(const BettiPlan& p);

std::string report_json(const ValidityReport& r);
std::string report_json(const CheckReport& r);

std::string certificate_json(const ZcCertificate& c);
std::string family_json(const FamilyReport& f);
std::string verdict_json(const DominationVerdict& v);

SurfaceData parse_surface(const std::string& text);
ThreefoldData parse_threefold(const std::string& text);
FourfoldData parse_fourfold(const std::string& text);

/// Accepts a bare array or {"betti": [...]}.
BettiVector parse_betti(const std::string& text);

struct WeightPlanInput {
  int k = 1;
  int n = 2;
  std::vector<Int> target;
};
WeightPlanInput parse_weight_input(const std::string& text);

struct MiddlePlanInput {
  int n = 1;
  std::vector<Int> target;
};
MiddlePlanInput parse_middle_input(const std::string& text);

}  // namespace hodgeforge

#endif
