#include "hodgeforge/json_io.hpp"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>

#include <json.hpp>

#include "hodgeforge/errors.hpp"

namespace hodgeforge {

namespace {

using nlohmann::json;

json encode_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

Int decode_int(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw input_error(what + " is not a decimal integer string");
    }
  }
  throw input_error(what + " must be an integer or a decimal string");
}

int decode_small(const json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw input_error(what + " must be an integer");
  const std::int64_t v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max())
    throw input_error(what + " is out of range");
  return static_cast<int>(v);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("malformed JSON input");
  return j;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw input_error("input must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end())
    throw input_error(std::string("missing field \"") + key + "\"");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  if (!j.is_object()) throw input_error("input must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw input_error("input must be a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known)
      throw input_error("unknown field \"" + item.key() + "\"");
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json group_to_json(const GroupSpec& s);

json gabg_to_json(const GabgSpec& s) {
  return json{{"a", s.a},
              {"b", s.b},
              {"g", encode_int(s.g)},
              {"kind", "Gabg"}};
}

json element_to_json(const GroupElement& e) {
  json perm = json::array();
  for (int p : e.perm) perm.push_back(p);
  json twist = json::array();
  for (const Twist& t : e.twist)
    twist.push_back(json::array({t.j, static_cast<int>(t.s)}));
  return json{{"perm", perm}, {"twist", twist}};
}

json group_to_json(const GroupSpec& s) {
  return std::visit(
      [](const auto& spec) -> json {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, GabgSpec>) {
          return gabg_to_json(spec);
        } else if constexpr (std::is_same_v<T, Weight2Spec>) {
          return json{{"g", encode_int(spec.g)},
                      {"kind", "Weight2"},
                      {"n1", spec.n1},
                      {"n2", spec.n2}};
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          json genera = json::array();
          for (int g : spec.space.genera) genera.push_back(g);
          json gens = json::array();
          for (const GroupElement& e : spec.gens)
            gens.push_back(element_to_json(e));
          return json{{"genera", genera},
                      {"gens", gens},
                      {"kind", "Explicit"}};
        } else {
          json parts = json::array();
          for (const GabgSpec& part : spec.parts)
            parts.push_back(gabg_to_json(part));
          return json{{"kind", "Product"}, {"parts", parts}};
        }
      },
      s);
}

GabgSpec parse_gabg(const json& j) {
  check_keys(j, {"a", "b", "g", "kind"});
  GabgSpec s;
  s.a = decode_small(field(j, "a"), "a");
  s.b = decode_small(field(j, "b"), "b");
  s.g = decode_int(field(j, "g"), "g");
  return s;
}

GroupElement parse_element(const json& j) {
  check_keys(j, {"perm", "twist"});
  GroupElement e;
  const json& perm = field(j, "perm");
  if (!perm.is_array()) throw input_error("perm must be an array");
  for (const json& v : perm) e.perm.push_back(decode_small(v, "perm entry"));
  const json& twist = field(j, "twist");
  if (!twist.is_array()) throw input_error("twist must be an array");
  for (const json& v : twist) {
    if (!v.is_array() || v.size() != 2)
      throw input_error("twist entries must be [j, s] pairs");
    Twist t;
    t.j = decode_small(v[0], "twist rotation");
    const int s = decode_small(v[1], "twist sign");
    if (s != 0 && s != 1) throw input_error("twist sign must be 0 or 1");
    t.s = static_cast<std::uint8_t>(s);
    e.twist.push_back(t);
  }
  return e;
}

GroupSpec parse_group_json(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw input_error("group kind must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "Gabg") return parse_gabg(j);
  if (name == "Weight2") {
    check_keys(j, {"g", "kind", "n1", "n2"});
    Weight2Spec s;
    s.n1 = decode_small(field(j, "n1"), "n1");
    s.n2 = decode_small(field(j, "n2"), "n2");
    s.g = decode_int(field(j, "g"), "g");
    return s;
  }
  if (name == "Explicit") {
    check_keys(j, {"genera", "gens", "kind"});
    ExplicitSpec s;
    const json& genera = field(j, "genera");
    if (!genera.is_array()) throw input_error("genera must be an array");
    for (const json& g : genera)
      s.space.genera.push_back(decode_small(g, "genus"));
    const json& gens = field(j, "gens");
    if (!gens.is_array()) throw input_error("gens must be an array");
    for (const json& e : gens) s.gens.push_back(parse_element(e));
    return s;
  }
  if (name == "Product") {
    check_keys(j, {"kind", "parts"});
    ProductGroupSpec s;
    const json& parts = field(j, "parts");
    if (!parts.is_array()) throw input_error("parts must be an array");
    for (const json& part : parts) {
      const json& part_kind = field(part, "kind");
      if (!part_kind.is_string() || part_kind.get<std::string>() != "Gabg")
        throw input_error("product parts must be Gabg specs");
      s.parts.push_back(parse_gabg(part));
    }
    return s;
  }
  throw input_error("unknown group kind \"" + name + "\"");
}

json recipe_to_json(const Recipe& r) {
  json blocks = json::array();
  for (const GroupSpec& b : r.blocks) blocks.push_back(group_to_json(b));
  return json{{"blocks", blocks},
              {"i0", group_to_json(r.i0)},
              {"n", r.n},
              {"point_blowups", encode_int(r.point_blowups)},
              {"provenance", r.provenance},
              {"times_p1", r.times_p1}};
}

Recipe parse_recipe_json(const json& j) {
  if (j.is_object() && j.contains("feasible")) {
    check_keys(j, {"details", "feasible", "reason", "recipe",
                   "stated_sufficient_condition"});
    const json& feasible = field(j, "feasible");
    if (!feasible.is_boolean() || !feasible.get<bool>())
      throw input_error("cannot evaluate an infeasible plan");
    return parse_recipe_json(field(j, "recipe"));
  }
  check_keys(j, {"blocks", "i0", "n", "point_blowups", "provenance",
                 "times_p1"});
  Recipe r;
  r.n = decode_small(field(j, "n"), "n");
  if (const json* i0 = optional_field(j, "i0")) r.i0 = parse_group_json(*i0);
  if (const json* blocks = optional_field(j, "blocks")) {
    if (!blocks->is_array()) throw input_error("blocks must be an array");
    for (const json& b : *blocks) r.blocks.push_back(parse_group_json(b));
  }
  if (const json* blowups = optional_field(j, "point_blowups"))
    r.point_blowups = decode_int(*blowups, "point_blowups");
  if (const json* provenance = optional_field(j, "provenance")) {
    if (!provenance->is_string())
      throw input_error("provenance must be a string");
    r.provenance = provenance->get<std::string>();
  }
  if (const json* times = optional_field(j, "times_p1")) {
    if (!times->is_boolean()) throw input_error("times_p1 must be a boolean");
    r.times_p1 = times->get<bool>();
  }
  return r;
}

json plan_to_json(const PlanOutcome& p) {
  if (p.feasible())
    return json{{"feasible", true}, {"recipe", recipe_to_json(*p.recipe)}};
  json details = json::array();
  for (const ThresholdDetail& d : p.details)
    details.push_back(json{{"given", encode_int(d.given)},
                           {"p", d.p},
                           {"q", d.q},
                           {"required", encode_int(d.required)}});
  return json{{"details", details}, {"feasible", false}, {"reason", p.reason}};
}

json node_to_json(const ZcNode& node) {
  if (node.kind == ZcNode::Kind::Leaf)
    return json{{"a", node.a},
                {"b", node.b},
                {"genus", encode_int(node.genus)},
                {"inverse", node.inverse_automorphism},
                {"kind", "leaf"}};
  return json{{"a", node.a},
              {"b", node.b},
              {"first", node_to_json(*node.first)},
              {"kind", "combine"},
              {"second", node_to_json(*node.second)}};
}

json certificate_to_json(const ZcCertificate& c) {
  return json{{"a", c.a},
              {"b", c.b},
              {"c", c.c},
              {"n", c.n},
              {"offdiag", encode_int(c.offdiag)},
              {"projective_factor", c.projective_factor},
              {"tree", node_to_json(c.tree)}};
}

}  // namespace

std::string diamond_json(const HodgeDiamond& d) {
  json h = json::array();
  for (int p = 0; p <= d.n; ++p) {
    json row = json::array();
    for (int q = 0; q <= d.n; ++q) row.push_back(encode_int(d.at(p, q)));
    h.push_back(std::move(row));
  }
  return dump(json{{"h", h}, {"n", d.n}});
}

std::string diamond_json(const TruncatedDiamond& d) {
  json h = json::array();
  for (int p = 0; p <= d.n; ++p) {
    json row = json::array();
    for (int q = 0; q <= d.n; ++q) {
      if (p + q == d.n)
        row.push_back(nullptr);
      else
        row.push_back(encode_int(d.at(p, q)));
    }
    h.push_back(std::move(row));
  }
  return dump(json{{"h", h}, {"n", d.n}});
}

std::string diamond_json(const EvaluatedDiamond& d) {
  json h = json::array();
  for (int p = 0; p <= d.n; ++p) {
    json row = json::array();
    for (int q = 0; q <= d.n; ++q) {
      const std::optional<Int>& cell = d.at(p, q);
      if (cell.has_value())
        row.push_back(encode_int(*cell));
      else
        row.push_back(nullptr);
    }
    h.push_back(std::move(row));
  }
  return dump(json{{"h", h}, {"n", d.n}});
}

AnyDiamond parse_diamond(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"h", "n"});
  const int n = decode_small(field(j, "n"), "n");
  if (n < 0 || n > 10000) throw input_error("dimension out of range");
  const json& h = field(j, "h");
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  if (!h.is_array() || h.size() != size)
    throw input_error("h must be an (n+1) x (n+1) array");

  HodgeDiamond full = HodgeDiamond::zero(n);
  TruncatedDiamond truncated = TruncatedDiamond::zero(n);
  bool any_null = false;
  bool misplaced_null = false;
  bool middle_complete = true;
  for (int p = 0; p <= n; ++p) {
    const json& row = h[static_cast<std::size_t>(p)];
    if (!row.is_array() || row.size() != size)
      throw input_error("h must be an (n+1) x (n+1) array");
    for (int q = 0; q <= n; ++q) {
      const json& cell = row[static_cast<std::size_t>(q)];
      if (cell.is_null()) {
        any_null = true;
        if (p + q != n) misplaced_null = true;
        continue;
      }
      if (p + q == n) middle_complete = false;
      const Int value = decode_int(cell, "h entry");
      full.at(p, q) = value;
      if (p + q != n) truncated.at(p, q) = value;
    }
  }
  if (!any_null) return full;
  if (misplaced_null || !middle_complete)
    throw input_error(
        "null entries must cover exactly the middle row p + q = n");
  return truncated;
}

std::string table_json(const InvariantTable& t) {
  json dims = json::array();
  for (int p = 0; p <= t.k; ++p)
    for (int q = 0; q <= t.k; ++q)
      if (t.dims[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] !=
          0)
        dims.push_back(json::array(
            {p, q,
             encode_int(t.dims[static_cast<std::size_t>(p)]
                              [static_cast<std::size_t>(q)])}));
  return dump(json{{"dims", dims}, {"k", t.k}});
}

std::string group_json(const GroupSpec& s) { return dump(group_to_json(s)); }

GroupSpec parse_group(const std::string& text) {
  return parse_group_json(parse_text(text));
}

std::string recipe_json(const Recipe& r) { return dump(recipe_to_json(r)); }

Recipe parse_recipe(const std::string& text) {
  return parse_recipe_json(parse_text(text));
}

std::string plan_json(const PlanOutcome& p) { return dump(plan_to_json(p)); }

std::string betti_plan_json(const BettiPlan& p) {
  json j = plan_to_json(p.plan);
  j["stated_sufficient_condition"] = p.stated_sufficient_condition;
  return dump(j);
}

std::string report_json(const ValidityReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations)
    violations.push_back(
        json{{"p", v.p}, {"predicate", v.predicate}, {"q", v.q}});
  return dump(json{{"valid", r.valid}, {"violations", violations}});
}

std::string report_json(const CheckReport& r) {
  json rows = json::array();
  for (const CheckRow& row : r.rows)
    rows.push_back(json{{"lhs", encode_int(row.lhs)},
                        {"paper_anchor", row.anchor},
                        {"rhs", encode_int(row.rhs)},
                        {"rule", row.rule},
                        {"status", row.status}});
  return dump(json{{"classification", r.classification},
                   {"passed", r.passed()},
                   {"rows", rows}});
}

std::string certificate_json(const ZcCertificate& c) {
  return dump(certificate_to_json(c));
}

std::string family_json(const FamilyReport& f) {
  json witnesses = json::array();
  for (const FamilyWitness& w : f.witnesses) {
    json pair{{"h_pq", encode_int(w.h_pq)}};
    pair["h_rs"] = w.h_rs.has_value() ? encode_int(*w.h_rs) : json(nullptr);
    witnesses.push_back(std::move(pair));
  }
  json j{{"computable", f.computable},
         {"exact_bounded_side", f.exact_bounded_side},
         {"note", f.note},
         {"tag", f.tag},
         {"witnesses", witnesses}};
  if (f.bound.has_value()) j["bound"] = encode_int(*f.bound);
  if (f.certificate.has_value())
    j["certificate"] = certificate_to_json(*f.certificate);
  if (f.recipe.has_value()) j["recipe"] = recipe_to_json(*f.recipe);
  return dump(j);
}

std::string verdict_json(const DominationVerdict& v) {
  return dump(json{{"dominates", v.dominates}, {"justification", v.tag}});
}

SurfaceData parse_surface(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"h10", "h11", "h20"});
  SurfaceData d;
  d.h10 = decode_int(field(j, "h10"), "h10");
  d.h20 = decode_int(field(j, "h20"), "h20");
  d.h11 = decode_int(field(j, "h11"), "h11");
  return d;
}

ThreefoldData parse_threefold(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"c1_cubed", "c1c2", "h10", "h11", "h20", "h21", "h30"});
  ThreefoldData d;
  d.h10 = decode_int(field(j, "h10"), "h10");
  d.h20 = decode_int(field(j, "h20"), "h20");
  d.h30 = decode_int(field(j, "h30"), "h30");
  d.h11 = decode_int(field(j, "h11"), "h11");
  d.h21 = decode_int(field(j, "h21"), "h21");
  if (const json* v = optional_field(j, "c1c2"))
    d.c1c2 = decode_int(*v, "c1c2");
  if (const json* v = optional_field(j, "c1_cubed"))
    d.c1_cubed = decode_int(*v, "c1_cubed");
  return d;
}

FourfoldData parse_fourfold(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"c1_2_c2", "c1_4", "c1_c3", "c2_2", "c4", "canonical",
                 "h10", "h11", "h20", "h21", "h22", "h30", "h31", "h40"});
  FourfoldData d;
  d.h10 = decode_int(field(j, "h10"), "h10");
  d.h20 = decode_int(field(j, "h20"), "h20");
  d.h30 = decode_int(field(j, "h30"), "h30");
  d.h40 = decode_int(field(j, "h40"), "h40");
  d.h11 = decode_int(field(j, "h11"), "h11");
  d.h21 = decode_int(field(j, "h21"), "h21");
  d.h31 = decode_int(field(j, "h31"), "h31");
  d.h22 = decode_int(field(j, "h22"), "h22");
  if (const json* v = optional_field(j, "c1_4"))
    d.c1_4 = decode_int(*v, "c1_4");
  if (const json* v = optional_field(j, "c1_2_c2"))
    d.c1_2_c2 = decode_int(*v, "c1_2_c2");
  if (const json* v = optional_field(j, "c1_c3"))
    d.c1_c3 = decode_int(*v, "c1_c3");
  if (const json* v = optional_field(j, "c2_2"))
    d.c2_2 = decode_int(*v, "c2_2");
  if (const json* v = optional_field(j, "c4")) d.c4 = decode_int(*v, "c4");
  if (const json* v = optional_field(j, "canonical")) {
    if (!v->is_string()) throw input_error("canonical must be a string");
    d.canonical = v->get<std::string>();
  }
  return d;
}

BettiVector parse_betti(const std::string& text) {
  const json j = parse_text(text);
  const json* array = &j;
  if (j.is_object()) {
    check_keys(j, {"betti"});
    array = &field(j, "betti");
  }
  if (!array->is_array())
    throw input_error("Betti input must be an array of integers");
  BettiVector b;
  for (const json& v : *array) b.push_back(decode_int(v, "Betti number"));
  return b;
}

WeightPlanInput parse_weight_input(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"k", "n", "target"});
  WeightPlanInput input;
  input.k = decode_small(field(j, "k"), "k");
  input.n = decode_small(field(j, "n"), "n");
  const json& target = field(j, "target");
  if (!target.is_array())
    throw input_error("target must be an array of integers");
  for (const json& v : target)
    input.target.push_back(decode_int(v, "target entry"));
  return input;
}

MiddlePlanInput parse_middle_input(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"n", "target"});
  MiddlePlanInput input;
  input.n = decode_small(field(j, "n"), "n");
  const json& target = field(j, "target");
  if (!target.is_array())
    throw input_error("target must be an array of integers");
  for (const json& v : target)
    input.target.push_back(decode_int(v, "target entry"));
  return input;
}

}  // namespace hodgeforge
