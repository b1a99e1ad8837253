#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodgeforge/constructor.hpp"
#include "hodgeforge/diamond.hpp"
#include "hodgeforge/errors.hpp"
#include "hodgeforge/inequalities.hpp"
#include "hodgeforge/invariants.hpp"
#include "hodgeforge/json_io.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string in = "-";
  std::string format = "json";
  int jobs = 1;
  std::uint64_t max_group = 1'000'000;
  std::uint64_t max_basis = 10'000'000;
};

hodgeforge::Caps caps_of(const GlobalOptions& g) {
  hodgeforge::Caps caps;
  caps.max_group = g.max_group;
  caps.max_basis = g.max_basis;
  return caps;
}

void apply_caps_env(GlobalOptions& g, bool group_given, bool basis_given) {
  const char* env = std::getenv("HODGE_FORGE_CAPS");
  if (env == nullptr) return;
  std::string text(env);
  for (char& c : text)
    if (c == ':') c = ',';
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw hodgeforge::input_error(
        "HODGE_FORGE_CAPS must be \"max_group,max_basis\"");
  try {
    const std::uint64_t group = std::stoull(text.substr(0, comma));
    const std::uint64_t basis = std::stoull(text.substr(comma + 1));
    if (!group_given) g.max_group = group;
    if (!basis_given) g.max_basis = basis;
  } catch (const std::exception&) {
    throw hodgeforge::input_error("HODGE_FORGE_CAPS must hold two integers");
  }
}

std::string read_input(const GlobalOptions& g) {
  std::ostringstream buffer;
  if (g.in == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(g.in);
    if (!file)
      throw hodgeforge::input_error("cannot open input file " + g.in);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

std::string trimmed(const std::string& s) {
  const std::size_t first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const std::size_t last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<hodgeforge::Int> parse_int_list(const std::string& text) {
  std::vector<hodgeforge::Int> out;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const std::string value = trimmed(item);
    try {
      out.push_back(hodgeforge::Int(value));
    } catch (const std::exception&) {
      throw hodgeforge::input_error("\"" + value +
                                    "\" is not a decimal integer");
    }
  }
  if (out.empty())
    throw hodgeforge::input_error("expected a comma-separated integer list");
  return out;
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  const std::vector<hodgeforge::Int> values = parse_int_list(text);
  if (values.size() != 2 || values[0] < 0 || values[1] < 0 ||
      values[0] > 1000 || values[1] > 1000)
    throw hodgeforge::input_error(std::string(what) +
                                  " must be a pair \"p,q\" of small naturals");
  return {static_cast<int>(values[0]), static_cast<int>(values[1])};
}

hodgeforge::Int parse_genus(const std::string& text) {
  try {
    return hodgeforge::Int(trimmed(text));
  } catch (const std::exception&) {
    throw hodgeforge::input_error("--g must be a decimal integer");
  }
}

json encode_int(const hodgeforge::Int& v) {
  static const hodgeforge::Int lo = std::numeric_limits<std::int64_t>::min();
  static const hodgeforge::Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

// ---- table renderers ----------------------------------------------------

std::string grid_table(int n,
                       const std::function<std::string(int, int)>& cell) {
  std::size_t width = 1;
  std::vector<std::vector<std::string>> cells(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::string>(static_cast<std::size_t>(n) + 1));
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      std::string& slot =
          cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      slot = cell(p, q);
      width = std::max(width, slot.size());
    }
  std::ostringstream out;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const std::string& s =
          cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      out << std::string(width - s.size(), ' ') << s;
      out << (q == n ? "\n" : " ");
    }
  }
  return out.str();
}

std::string diamond_table(const hodgeforge::HodgeDiamond& d) {
  return grid_table(d.n, [&](int p, int q) { return d.at(p, q).str(); });
}

std::string diamond_table(const hodgeforge::EvaluatedDiamond& d) {
  return grid_table(d.n, [&](int p, int q) {
    const std::optional<hodgeforge::Int>& cell = d.at(p, q);
    return cell.has_value() ? cell->str() : std::string("?");
  });
}

std::string columns_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size())
        out << std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string validity_table(const hodgeforge::ValidityReport& r) {
  std::ostringstream out;
  out << "valid: " << (r.valid ? "yes" : "no") << "\n";
  for (const hodgeforge::Violation& v : r.violations)
    out << "violation: " << v.predicate << " at (" << v.p << "," << v.q
        << ")\n";
  return out.str();
}

std::string check_table(const hodgeforge::CheckReport& r) {
  std::ostringstream out;
  out << "classification: " << r.classification << "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"rule", "status", "lhs", "rhs", "basis"});
  for (const hodgeforge::CheckRow& row : r.rows)
    rows.push_back(
        {row.rule, row.status, row.lhs.str(), row.rhs.str(), row.anchor});
  out << columns_table(rows);
  out << "overall: " << (r.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string group_brief(const hodgeforge::GroupSpec& s) {
  return std::visit(
      [](const auto& spec) -> std::string {
        using T = std::decay_t<decltype(spec)>;
        std::ostringstream out;
        if constexpr (std::is_same_v<T, hodgeforge::GabgSpec>) {
          out << "Gabg(a=" << spec.a << ", b=" << spec.b
              << ", g=" << spec.g.str() << ")";
        } else if constexpr (std::is_same_v<T, hodgeforge::Weight2Spec>) {
          out << "Weight2(n1=" << spec.n1 << ", n2=" << spec.n2
              << ", g=" << spec.g.str() << ")";
        } else if constexpr (std::is_same_v<T, hodgeforge::ExplicitSpec>) {
          out << "Explicit(factors=" << spec.space.factors()
              << ", generators=" << spec.gens.size() << ")";
        } else {
          out << "Product(";
          for (std::size_t i = 0; i < spec.parts.size(); ++i) {
            if (i) out << "; ";
            out << "a=" << spec.parts[i].a << ", b=" << spec.parts[i].b
                << ", g=" << spec.parts[i].g.str();
          }
          out << ")";
        }
        return out.str();
      },
      s);
}

std::string recipe_table(const hodgeforge::Recipe& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n";
  out << "i0: " << group_brief(r.i0) << "\n";
  for (const hodgeforge::GroupSpec& b : r.blocks)
    out << "block: " << group_brief(b) << "\n";
  out << "point_blowups: " << r.point_blowups.str() << "\n";
  out << "times_p1: " << (r.times_p1 ? "yes" : "no") << "\n";
  out << "provenance: " << r.provenance << "\n";
  return out.str();
}

std::string plan_table(const hodgeforge::PlanOutcome& p) {
  std::ostringstream out;
  out << "feasible: " << (p.feasible() ? "yes" : "no") << "\n";
  if (p.feasible()) {
    out << recipe_table(*p.recipe);
  } else {
    out << "reason: " << p.reason << "\n";
    for (const hodgeforge::ThresholdDetail& d : p.details)
      out << "cell (" << d.p << "," << d.q << "): required "
          << d.required.str() << ", given " << d.given.str() << "\n";
  }
  return out.str();
}

std::string invariant_table_table(const hodgeforge::InvariantTable& t) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"p", "q", "dim"});
  for (int p = 0; p <= t.k; ++p)
    for (int q = 0; q <= t.k; ++q)
      if (t.at(p, q) != 0)
        rows.push_back(
            {std::to_string(p), std::to_string(q), t.at(p, q).str()});
  return "k: " + std::to_string(t.k) + "\n" + columns_table(rows);
}

std::string node_table(const hodgeforge::ZcNode& node, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.kind == hodgeforge::ZcNode::Kind::Leaf)
    return pad + "leaf(a=" + std::to_string(node.a) +
           ", b=" + std::to_string(node.b) + ", genus=" + node.genus.str() +
           (node.inverse_automorphism ? ", inverse" : "") + ")\n";
  return pad + "combine(a=" + std::to_string(node.a) +
         ", b=" + std::to_string(node.b) + ")\n" +
         node_table(*node.first, depth + 1) +
         node_table(*node.second, depth + 1);
}

std::string certificate_table(const hodgeforge::ZcCertificate& c) {
  std::ostringstream out;
  out << "bidegree: (" << c.a << "," << c.b << ")\n";
  out << "level: " << c.c << "\n";
  out << "dimension: " << c.n << "\n";
  out << "offdiag: " << c.offdiag.str() << "\n";
  out << "projective_factor: " << c.projective_factor << "\n";
  out << node_table(c.tree, 0);
  return out.str();
}

std::string family_table(const hodgeforge::FamilyReport& f) {
  std::ostringstream out;
  out << "tag: " << f.tag << "\n";
  out << "computable: " << (f.computable ? "yes" : "no") << "\n";
  out << "exact_bounded_side: " << (f.exact_bounded_side ? "yes" : "no")
      << "\n";
  if (f.bound.has_value()) out << "bound: " << f.bound->str() << "\n";
  if (!f.witnesses.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"h_rs", "h_pq"});
    for (const hodgeforge::FamilyWitness& w : f.witnesses)
      rows.push_back(
          {w.h_rs.has_value() ? w.h_rs->str() : "?", w.h_pq.str()});
    out << columns_table(rows);
  }
  if (f.certificate.has_value()) out << certificate_table(*f.certificate);
  if (f.recipe.has_value()) out << recipe_table(*f.recipe);
  out << "note: " << f.note << "\n";
  return out.str();
}

// ---- subcommand bodies ---------------------------------------------------

void emit(const GlobalOptions& g, const std::string& as_json,
          const std::string& as_table) {
  std::cout << (g.format == "table" ? as_table : as_json);
}

int run_validate(const GlobalOptions& g) {
  const hodgeforge::AnyDiamond input =
      hodgeforge::parse_diamond(read_input(g));
  const hodgeforge::ValidityReport report = std::visit(
      [](const auto& d) { return hodgeforge::validate(d); }, input);
  emit(g, hodgeforge::report_json(report), validity_table(report));
  return report.valid ? 0 : 1;
}

int run_evaluate(const GlobalOptions& g) {
  const hodgeforge::Recipe recipe = hodgeforge::parse_recipe(read_input(g));
  const hodgeforge::EvaluatedDiamond result =
      hodgeforge::evaluate(recipe, caps_of(g), g.jobs);
  emit(g, hodgeforge::diamond_json(result), diamond_table(result));
  return 0;
}

int plan_exit(const GlobalOptions& g, const hodgeforge::PlanOutcome& plan) {
  emit(g, hodgeforge::plan_json(plan), plan_table(plan));
  return plan.feasible() ? 0 : 1;
}

int run_plan_weight(const GlobalOptions& g, bool flags_given, int k, int n,
                    const std::string& target) {
  hodgeforge::WeightPlanInput input;
  if (flags_given) {
    input.k = k;
    input.n = n;
    input.target = parse_int_list(target);
  } else {
    input = hodgeforge::parse_weight_input(read_input(g));
  }
  return plan_exit(g,
                   hodgeforge::plan_weight_k(input.k, input.target, input.n));
}

int run_plan_truncated(const GlobalOptions& g) {
  const hodgeforge::AnyDiamond input =
      hodgeforge::parse_diamond(read_input(g));
  const hodgeforge::TruncatedDiamond target =
      std::holds_alternative<hodgeforge::TruncatedDiamond>(input)
          ? std::get<hodgeforge::TruncatedDiamond>(input)
          : hodgeforge::TruncatedDiamond::of(
                std::get<hodgeforge::HodgeDiamond>(input));
  return plan_exit(g, hodgeforge::plan_truncated(target));
}

int run_plan_middle(const GlobalOptions& g, bool flags_given, int n,
                    const std::string& target) {
  hodgeforge::MiddlePlanInput input;
  if (flags_given) {
    input.n = n;
    input.target = parse_int_list(target);
  } else {
    input = hodgeforge::parse_middle_input(read_input(g));
  }
  return plan_exit(g, hodgeforge::plan_middle_weight(input.target, input.n));
}

int run_plan_betti(const GlobalOptions& g, bool flag_given,
                   const std::string& target) {
  const hodgeforge::BettiVector betti =
      flag_given ? parse_int_list(target)
                 : hodgeforge::parse_betti(read_input(g));
  const hodgeforge::BettiPlan plan = hodgeforge::plan_betti(betti);
  std::ostringstream table;
  table << plan_table(plan.plan);
  table << "stated_sufficient_condition: "
        << (plan.stated_sufficient_condition ? "yes" : "no") << "\n";
  emit(g, hodgeforge::betti_plan_json(plan), table.str());
  return plan.plan.feasible() ? 0 : 1;
}

int run_invariants(const GlobalOptions& g, int a, int b,
                   const std::string& genus) {
  hodgeforge::GabgSpec spec;
  spec.a = a;
  spec.b = b;
  spec.g = parse_genus(genus);
  const hodgeforge::InvariantTable table =
      hodgeforge::invariant_table(spec, caps_of(g), g.jobs);
  emit(g, hodgeforge::table_json(table), invariant_table_table(table));
  return 0;
}

int run_oracle(const GlobalOptions& g, bool p_given, int p, bool q_given,
               int q) {
  const hodgeforge::GroupSpec spec = hodgeforge::parse_group(read_input(g));
  const hodgeforge::Caps caps = caps_of(g);
  const hodgeforge::ProductSpace space = hodgeforge::space_of(spec);
  const std::vector<hodgeforge::GroupElement> elements =
      hodgeforge::close(space, hodgeforge::generators(spec), caps.max_group);
  if (p_given != q_given)
    throw hodgeforge::input_error("--p and --q must be given together");
  if (p_given) {
    const hodgeforge::Int dim =
        hodgeforge::burnside_cell(space, elements, p, q, caps, g.jobs);
    const json out{{"dim", encode_int(dim)},
                   {"elements", elements.size()},
                   {"p", p},
                   {"q", q}};
    emit(g, out.dump(2) + "\n",
         "elements: " + std::to_string(elements.size()) + "\ndim(" +
             std::to_string(p) + "," + std::to_string(q) + "): " + dim.str() +
             "\n");
    return 0;
  }
  const hodgeforge::InvariantTable table =
      hodgeforge::burnside_dims(space, elements, caps, g.jobs);
  emit(g, hodgeforge::table_json(table), invariant_table_table(table));
  return 0;
}

int run_crosscheck(const GlobalOptions& g, int a, int b,
                   const std::string& genus) {
  hodgeforge::GabgSpec spec;
  spec.a = a;
  spec.b = b;
  spec.g = parse_genus(genus);
  const std::vector<hodgeforge::Discrepancy> discrepancies =
      hodgeforge::crosscheck(spec, caps_of(g), g.jobs);
  json rows = json::array();
  for (const hodgeforge::Discrepancy& d : discrepancies)
    rows.push_back(json{{"closed", encode_int(d.closed)},
                        {"oracle", encode_int(d.oracle)},
                        {"p", d.p},
                        {"q", d.q}});
  const json out{{"agrees", discrepancies.empty()}, {"discrepancies", rows}};
  std::ostringstream table;
  table << "agrees: " << (discrepancies.empty() ? "yes" : "no") << "\n";
  for (const hodgeforge::Discrepancy& d : discrepancies)
    table << "cell (" << d.p << "," << d.q << "): oracle " << d.oracle.str()
          << ", closed form " << d.closed.str() << "\n";
  emit(g, out.dump(2) + "\n", table.str());
  return discrepancies.empty() ? 0 : 1;
}

int run_zc_cert(const GlobalOptions& g, int a, int b, int c, int n) {
  const hodgeforge::ZcCertificate cert =
      hodgeforge::zc_certificate(a, b, c, n);
  emit(g, hodgeforge::certificate_json(cert), certificate_table(cert));
  return 0;
}

int run_check_surface(const GlobalOptions& g) {
  const hodgeforge::CheckReport report =
      hodgeforge::surface_check(hodgeforge::parse_surface(read_input(g)));
  emit(g, hodgeforge::report_json(report), check_table(report));
  return report.passed() ? 0 : 1;
}

int run_check_threefold(const GlobalOptions& g) {
  const hodgeforge::CheckReport report = hodgeforge::threefold_check(
      hodgeforge::parse_threefold(read_input(g)));
  emit(g, hodgeforge::report_json(report), check_table(report));
  return report.passed() ? 0 : 1;
}

int run_check_fourfold(const GlobalOptions& g) {
  const hodgeforge::CheckReport report =
      hodgeforge::fourfold_check(hodgeforge::parse_fourfold(read_input(g)));
  emit(g, hodgeforge::report_json(report), check_table(report));
  return report.passed() ? 0 : 1;
}

int run_hypersurface(const GlobalOptions& g, int n, long d, bool factor_given,
                     int factor) {
  if (factor_given) {
    const std::vector<hodgeforge::Int> primitive =
        hodgeforge::product_primitive(n, factor, d);
    json values = json::array();
    for (const hodgeforge::Int& v : primitive)
      values.push_back(encode_int(v));
    const json out{
        {"d", d}, {"factor", factor}, {"n", n}, {"primitive", values}};
    std::ostringstream table;
    for (std::size_t j = 0; j < primitive.size(); ++j)
      table << "P^" << j << ": " << primitive[j].str() << "\n";
    emit(g, out.dump(2) + "\n", table.str());
    return 0;
  }
  const hodgeforge::HodgeDiamond result =
      hodgeforge::hypersurface_hodge(n, d);
  emit(g, hodgeforge::diamond_json(result), diamond_table(result));
  return 0;
}

int run_dominates(const GlobalOptions& g, int n, const std::string& rs,
                  const std::string& pq) {
  hodgeforge::DominationQuery query;
  query.n = n;
  std::tie(query.r, query.s) = parse_pair(rs, "--rs");
  std::tie(query.p, query.q) = parse_pair(pq, "--pq");
  const hodgeforge::DominationVerdict verdict = hodgeforge::dominates(query);
  std::ostringstream table;
  table << "dominates: " << (verdict.dominates ? "true" : "false") << "\n";
  table << "justification: " << verdict.tag << "\n";
  emit(g, hodgeforge::verdict_json(verdict), table.str());
  return 0;
}

int run_family(const GlobalOptions& g, int n, const std::string& rs,
               const std::string& pq, int count) {
  hodgeforge::DominationQuery query;
  query.n = n;
  std::tie(query.r, query.s) = parse_pair(rs, "--rs");
  std::tie(query.p, query.q) = parse_pair(pq, "--pq");
  const hodgeforge::FamilyReport report =
      hodgeforge::counterexample_family(query, count);
  emit(g, hodgeforge::family_json(report), family_table(report));
  return report.computable ? 0 : 1;
}

int run_constants(const GlobalOptions& g, int n) {
  if (n < 2) throw hodgeforge::input_error("--n must be at least two");
  json rows = json::array();
  std::vector<std::vector<std::string>> table;
  table.push_back({"p", "c1_max", "c2", "c", "4c", "p(n^2-2n+5)"});
  for (int p = 1; 2 * p < n; ++p) {
    hodgeforge::Int c1_max = 0;
    for (int k0 = 1; k0 < n; ++k0)
      c1_max = std::max(c1_max, hodgeforge::planner_constant_c1(p, n, k0));
    const hodgeforge::Int c2 = hodgeforge::planner_constant_c2(p, n);
    const hodgeforge::Int c = hodgeforge::planner_constant(p, n);
    const hodgeforge::Int scale =
        hodgeforge::Int(p) * (hodgeforge::Int(n) * n - 2 * n + 5);
    rows.push_back(json{{"bound_times_4", encode_int(scale)},
                        {"c", encode_int(c)},
                        {"c1_max", encode_int(c1_max)},
                        {"c2", encode_int(c2)},
                        {"p", p},
                        {"within_bound", 4 * c <= scale}});
    table.push_back({std::to_string(p), c1_max.str(), c2.str(), c.str(),
                     hodgeforge::Int(4 * c).str(), scale.str()});
  }
  const json out{{"n", n}, {"rows", rows}};
  emit(g, out.dump(2) + "\n", columns_table(table));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction calculus for Hodge numbers"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--in", global.in, "input file (\"-\" for standard input)")
      ->capture_default_str();
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--jobs", global.jobs, "worker count for trace averaging")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  auto* group_opt = app.add_option("--max-group", global.max_group,
                                   "largest group closure the run may build")
                        ->capture_default_str();
  auto* basis_opt = app.add_option("--max-basis", global.max_basis,
                                   "largest action budget the run may spend")
                        ->capture_default_str();

  auto* validate = app.add_subcommand(
      "validate", "check the diamond symmetry and monotonicity predicates");

  auto* plan_weight = app.add_subcommand(
      "plan-weight", "plan a construction with one exact weight row");
  int pw_k = 1, pw_n = 2;
  std::string pw_target;
  auto* pw_k_opt = plan_weight->add_option("--k", pw_k, "row weight");
  auto* pw_n_opt = plan_weight->add_option("--n", pw_n, "dimension");
  auto* pw_t_opt = plan_weight->add_option(
      "--target", pw_target,
      "row entries h(k,0),...,h(0,k), comma separated");

  auto* plan_truncated = app.add_subcommand(
      "plan-truncated", "plan a construction matching all off-middle rows");

  auto* plan_middle = app.add_subcommand(
      "plan-middle", "plan a construction with an exact middle row");
  int pm_n = 1;
  std::string pm_target;
  auto* pm_n_opt = plan_middle->add_option("--n", pm_n, "dimension");
  auto* pm_t_opt = plan_middle->add_option("--target", pm_target,
                                           "middle entries h(n,0),...,h(0,n)");

  auto* plan_betti = app.add_subcommand(
      "plan-betti",
      "plan a construction matching all off-middle Betti numbers");
  std::string pb_target;
  auto* pb_t_opt =
      plan_betti->add_option("--target", pb_target, "b_0,...,b_2n");

  auto* evaluate = app.add_subcommand(
      "evaluate", "realize a recipe and report every determined cell");

  auto* invariants = app.add_subcommand(
      "invariants", "closed-form invariant dimensions of a two-block group");
  int inv_a = 1, inv_b = 0;
  std::string inv_g = "0";
  invariants->add_option("--a", inv_a, "first block size")->required();
  invariants->add_option("--b", inv_b, "second block size")->required();
  invariants->add_option("--g", inv_g, "curve genus");

  auto* oracle = app.add_subcommand(
      "oracle", "trace-average invariant dimensions by full enumeration");
  int or_p = 0, or_q = 0;
  auto* or_p_opt = oracle->add_option("--p", or_p, "bidegree p");
  auto* or_q_opt = oracle->add_option("--q", or_q, "bidegree q");

  auto* crosscheck = app.add_subcommand(
      "crosscheck", "compare the trace oracle against the closed form");
  int cc_a = 1, cc_b = 0;
  std::string cc_g = "0";
  crosscheck->add_option("--a", cc_a, "first block size")->required();
  crosscheck->add_option("--b", cc_b, "second block size")->required();
  crosscheck->add_option("--g", cc_g, "curve genus");

  auto* zc_cert = app.add_subcommand(
      "zc-cert", "certificate for a concentrated off-diagonal Hodge number");
  int zc_a = 1, zc_b = 0, zc_c = 1, zc_n = 1;
  zc_cert->add_option("--a", zc_a, "bidegree a")->required();
  zc_cert->add_option("--b", zc_b, "bidegree b")->required();
  zc_cert->add_option("--c", zc_c, "level (off-diagonal value (3^c-1)/2)")
      ->required();
  zc_cert->add_option("--n", zc_n, "dimension")->required();

  auto* check_surface = app.add_subcommand(
      "check-surface", "surface inequality rows for given Hodge numbers");
  auto* check_threefold = app.add_subcommand(
      "check-threefold",
      "threefold rows with the canonical class read off h30");
  auto* check_fourfold = app.add_subcommand(
      "check-fourfold", "fourfold identity and estimate rows");

  auto* hypersurface = app.add_subcommand(
      "hypersurface", "diamond of a smooth degree-d hypersurface");
  int hs_n = 1, hs_factor = 1;
  long hs_d = 2;
  hypersurface->add_option("--n", hs_n, "dimension")->required();
  hypersurface->add_option("--d", hs_d, "degree")->required();
  auto* hs_factor_opt = hypersurface->add_option(
      "--factor", hs_factor,
      "emit primitive dimensions of V_d x P^(n-factor) instead");

  auto* dominates = app.add_subcommand(
      "dominates", "decide nontrivial domination between two Hodge numbers");
  int do_n = 1;
  std::string do_rs, do_pq;
  dominates->add_option("--n", do_n, "dimension")->required();
  dominates->add_option("--rs", do_rs, "dominating bidegree \"r,s\"")
      ->required();
  dominates->add_option("--pq", do_pq, "dominated bidegree \"p,q\"")
      ->required();

  auto* family = app.add_subcommand(
      "family", "witness family along which a domination fails");
  int fa_n = 1, fa_count = 5;
  std::string fa_rs, fa_pq;
  family->add_option("--n", fa_n, "dimension")->required();
  family->add_option("--rs", fa_rs, "bounded bidegree \"r,s\"")->required();
  family->add_option("--pq", fa_pq, "growing bidegree \"p,q\"")->required();
  family->add_option("--count", fa_count, "witness count")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();

  auto* constants = app.add_subcommand(
      "constants", "planner thresholds C1, C2, C with their quartic bound");
  int co_n = 4;
  constants->add_option("--n", co_n, "dimension")->required();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
    apply_caps_env(global, group_opt->count() > 0, basis_opt->count() > 0);

    if (validate->parsed()) return run_validate(global);
    if (plan_weight->parsed()) {
      const bool flags = pw_t_opt->count() > 0;
      if (flags && (pw_k_opt->count() == 0 || pw_n_opt->count() == 0))
        throw hodgeforge::input_error(
            "plan-weight needs --k and --n together with --target");
      return run_plan_weight(global, flags, pw_k, pw_n, pw_target);
    }
    if (plan_truncated->parsed()) return run_plan_truncated(global);
    if (plan_middle->parsed()) {
      const bool flags = pm_t_opt->count() > 0;
      if (flags && pm_n_opt->count() == 0)
        throw hodgeforge::input_error(
            "plan-middle needs --n together with --target");
      return run_plan_middle(global, flags, pm_n, pm_target);
    }
    if (plan_betti->parsed())
      return run_plan_betti(global, pb_t_opt->count() > 0, pb_target);
    if (evaluate->parsed()) return run_evaluate(global);
    if (invariants->parsed())
      return run_invariants(global, inv_a, inv_b, inv_g);
    if (oracle->parsed())
      return run_oracle(global, or_p_opt->count() > 0, or_p,
                        or_q_opt->count() > 0, or_q);
    if (crosscheck->parsed()) return run_crosscheck(global, cc_a, cc_b, cc_g);
    if (zc_cert->parsed())
      return run_zc_cert(global, zc_a, zc_b, zc_c, zc_n);
    if (check_surface->parsed()) return run_check_surface(global);
    if (check_threefold->parsed()) return run_check_threefold(global);
    if (check_fourfold->parsed()) return run_check_fourfold(global);
    if (hypersurface->parsed())
      return run_hypersurface(global, hs_n, hs_d, hs_factor_opt->count() > 0,
                              hs_factor);
    if (dominates->parsed()) return run_dominates(global, do_n, do_rs, do_pq);
    if (family->parsed())
      return run_family(global, fa_n, fa_rs, fa_pq, fa_count);
    if (constants->parsed()) return run_constants(global, co_n);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hodgeforge::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hodgeforge::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const hodgeforge::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
