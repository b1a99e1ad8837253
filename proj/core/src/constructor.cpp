#include "hodgeforge/constructor.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hodgeforge/errors.hpp"

namespace hodgeforge {

namespace {

Int table_cell_or_zero(const InvariantTable& t, int p, int q) {
  if (p < 0 || q < 0 || p > t.k || q > t.k) return 0;
  return t.at(p, q);
}

std::string violation_text(const ValidityReport& report) {
  const Violation& v = report.violations.front();
  return v.predicate + " at (" + std::to_string(v.p) + "," +
         std::to_string(v.q) + ")";
}

/// Diagonal entry at (s,s) of the invariant table of the block attached to
/// the truncated-diamond cell (a,b), genus contribution excluded.
Int block_diag_entry(int a, int b, int s) {
  if (a == b) {
    if (s < 0 || s > 2 * (a - 1)) return 0;
    return std::min(s, 2 * (a - 1) - s) / 2 + 1;
  }
  if (s < 0 || s > a + b - 2) return 0;
  return std::min({s + 1, b, a + b - 1 - s});
}

/// Sum of the block diagonal entries at l(p,p) over every cell that carries
/// a block: (a,b) with a >= b >= 1 and 2 < a+b < n. The shift from table
/// coordinates to primitive coordinates is one step down the diagonal.
Int blocks_diag_total(int p, int n) {
  Int sum = 0;
  for (int a = 2; a <= n - 2; ++a)
    for (int b = 1; b <= a && a + b < n; ++b)
      if (a + b > 2) sum += block_diag_entry(a, b, p - 1);
  return sum;
}

}  // namespace

const std::optional<Int>& EvaluatedDiamond::at(int p, int q) const {
  if (p < 0 || q < 0 || p > n || q > n)
    throw input_error("cell index out of range");
  return h[p][q];
}

TruncatedDiamond EvaluatedDiamond::truncated() const {
  TruncatedDiamond t = TruncatedDiamond::zero(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q == n) continue;
      if (!h[p][q])
        throw internal_error("truncation of an evaluation with undetermined cells");
      t.at(p, q) = *h[p][q];
    }
  return t;
}

std::optional<HodgeDiamond> EvaluatedDiamond::full() const {
  HodgeDiamond d = HodgeDiamond::zero(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (!h[p][q]) return std::nullopt;
      d.at(p, q) = *h[p][q];
    }
  return d;
}

PrimitiveTable key_construction(const InvariantTable& i0,
                                const std::vector<InvariantTable>& blocks,
                                int n) {
  if (n < 1) throw input_error("dimension must be positive");
  PrimitiveTable t;
  t.n = n;
  t.l.assign(n + 1, std::vector<Int>(n + 1, 0));
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      if (p + q >= n) continue;
      Int value = table_cell_or_zero(i0, p, q);
      for (const InvariantTable& block : blocks)
        value += table_cell_or_zero(block, p - 1, q - 1);
      t.l[p][q] = value;
    }
  return t;
}

EvaluatedDiamond evaluate(const Recipe& recipe, const Caps& caps, int jobs) {
  if (recipe.n < 1) throw input_error("recipe dimension must be positive");
  if (recipe.point_blowups < 0)
    throw input_error("point blow-up count must be nonnegative");
  const int inner_n = recipe.times_p1 ? recipe.n - 1 : recipe.n;
  if (inner_n < 1)
    throw input_error(
        "a product with the projective line needs dimension at least two");
  if (recipe.point_blowups > 0 && inner_n < 2)
    throw input_error("point blow-ups need dimension at least two");

  InvariantTable i0 = invariant_table(recipe.i0, caps, jobs);
  std::vector<InvariantTable> blocks;
  blocks.reserve(recipe.blocks.size());
  for (const GroupSpec& spec : recipe.blocks) {
    InvariantTable table = invariant_table(spec, caps, jobs);
    if (table.k > inner_n - 2)
      throw input_error("blow-up centre of dimension " +
                        std::to_string(table.k) +
                        " leaves no room in dimension " +
                        std::to_string(inner_n));
    blocks.push_back(std::move(table));
  }

  bool pure_point = i0.k == 0;
  for (const InvariantTable& table : blocks)
    pure_point = pure_point && table.k == 0;

  EvaluatedDiamond inner;
  inner.n = inner_n;
  inner.h.assign(inner_n + 1,
                 std::vector<std::optional<Int>>(inner_n + 1));
  if (pure_point) {
    Int points = recipe.point_blowups;
    for (const InvariantTable& table : blocks) points += table.at(0, 0);
    for (int p = 0; p <= inner_n; ++p)
      for (int q = 0; q <= inner_n; ++q)
        inner.h[p][q] = Int(p == q ? 1 : 0);
    for (int s = 1; s < inner_n; ++s) *inner.h[s][s] += points;
  } else {
    PrimitiveTable l = key_construction(i0, blocks, inner_n);
    if (recipe.point_blowups > 0) l.at(1, 1) += recipe.point_blowups;
    for (int p = 0; p <= inner_n; ++p)
      for (int q = 0; q <= inner_n; ++q) {
        if (p + q == inner_n) continue;
        int pp = p;
        int qq = q;
        if (pp + qq > inner_n) {
          pp = inner_n - p;
          qq = inner_n - q;
        }
        Int value = 0;
        for (int s = 0; s <= std::min(pp, qq); ++s)
          value += l.at(pp - s, qq - s);
        inner.h[p][q] = value;
      }
  }
  if (!recipe.times_p1) return inner;

  EvaluatedDiamond out;
  out.n = recipe.n;
  out.h.assign(recipe.n + 1,
               std::vector<std::optional<Int>>(recipe.n + 1));
  auto term = [&](int p, int q) -> std::optional<Int> {
    if (p < 0 || q < 0 || p > inner_n || q > inner_n) return Int(0);
    return inner.h[p][q];
  };
  for (int p = 0; p <= recipe.n; ++p)
    for (int q = 0; q <= recipe.n; ++q) {
      std::optional<Int> base = term(p, q);
      std::optional<Int> lifted = term(p - 1, q - 1);
      if (base && lifted) out.h[p][q] = *base + *lifted;
    }
  return out;
}

Int weight_floor(int m) {
  if (m < 1) throw input_error("floor is defined for positive half-weight");
  Int half = (m + 3) / 2;
  Int quarter = m / 2;
  return Int(m) * half + quarter * quarter;
}

PlanOutcome plan_weight_k(int k, const std::vector<Int>& target, int n) {
  if (n < 2 || k < 1 || k > n - 1)
    throw input_error("weight must lie strictly between zero and the dimension");
  if (static_cast<int>(target.size()) != k + 1)
    throw input_error("target row must have length weight plus one");
  PlanOutcome out;
  for (const Int& v : target)
    if (v < 0) {
      out.reason = "target entries must be nonnegative";
      return out;
    }
  for (int i = 0; i <= k; ++i)
    if (target[i] != target[k - i]) {
      out.reason = "target row must be conjugation-symmetric";
      return out;
    }

  Recipe recipe;
  recipe.n = n;
  recipe.provenance = "plan-weight";
  recipe.i0 = GabgSpec{k, 0, target[0]};
  for (int i = 1; 2 * i <= k - 1; ++i)
    recipe.blocks.push_back(GabgSpec{k - 2 * i, 0, target[i]});
  if (k % 2 == 0) {
    const int m = k / 2;
    Int floor_value = weight_floor(m);
    if (target[m] < floor_value) {
      out.reason = "central entry is below the structural floor";
      out.details.push_back({m, m, floor_value, target[m]});
      return out;
    }
    recipe.point_blowups = target[m] - floor_value;
  }
  out.recipe = std::move(recipe);
  return out;
}

Int planner_constant_c1(int p, int n, int k0) {
  if (p < 1 || n < 2 || k0 < 1)
    throw input_error("constants are defined for positive arguments");
  return Int(p <= k0 ? 1 : 0) + blocks_diag_total(p, n);
}

Int planner_constant_c2(int p, int n) {
  if (p < 1 || n < 2)
    throw input_error("constants are defined for positive arguments");
  Int diagonal = 0;
  for (int s = 0; s <= p; ++s)
    if (s <= n - 1 && p - s <= n - 2) diagonal += 1;
  return diagonal + blocks_diag_total(p, n);
}

Int planner_constant(int p, int n) {
  return std::max(Int(1) + blocks_diag_total(p, n), planner_constant_c2(p, n));
}

PlanOutcome plan_truncated(const TruncatedDiamond& target) {
  PlanOutcome out;
  ValidityReport report = validate(target);
  if (!report.valid) {
    out.reason = "target fails validity: " + violation_text(report);
    return out;
  }
  const int n = target.n;
  if (n == 1) {
    Recipe recipe;
    recipe.n = 1;
    recipe.provenance = "plan-truncated";
    out.recipe = std::move(recipe);
    return out;
  }

  auto l = [&target](int p, int q) -> Int {
    return target.at(p, q) - target.at_or_zero(p - 1, q - 1);
  };

  std::vector<int> outers;
  for (int k = 1; k <= n - 1; ++k)
    if (l(k, 0) > 0) outers.push_back(k);

  int mode = 0;
  int k0 = 1;
  if (outers.size() == 1) {
    mode = 1;
    k0 = outers[0];
  } else if (outers.empty()) {
    if (n >= 3)
      mode = 2;
    else
      mode = 1;
  } else if (outers.size() == 2 && outers[0] == n - 2 && outers[1] == n - 1) {
    mode = 2;
  } else {
    std::string weights;
    for (int k : outers) {
      if (!weights.empty()) weights += ", ";
      weights += std::to_string(k);
    }
    out.reason =
        "outer column is nonzero at weights {" + weights +
        "}; coverable patterns are a single weight or exactly the top two";
    return out;
  }

  Recipe recipe;
  recipe.n = n;
  recipe.provenance = "plan-truncated";
  if (mode == 1)
    recipe.i0 = GabgSpec{k0, 0, l(k0, 0)};
  else
    recipe.i0 = ProductGroupSpec{
        {GabgSpec{n - 1, 0, l(n - 1, 0)}, GabgSpec{n - 2, 0, l(n - 2, 0)}}};

  for (int p = 2; p <= n - 1; ++p)
    for (int q = 1; q < p && p + q < n; ++q)
      recipe.blocks.push_back(GabgSpec{p - 1, q - 1, l(p, q)});

  bool feasible = true;
  for (int p = 1; 2 * p < n; ++p) {
    Int threshold = mode == 1 ? planner_constant_c1(p, n, k0)
                              : planner_constant_c2(p, n);
    Int given = l(p, p);
    if (given < threshold) {
      feasible = false;
      out.details.push_back({p, p, threshold, given});
      continue;
    }
    if (p == 1)
      recipe.point_blowups = given - threshold;
    else
      recipe.blocks.push_back(GabgSpec{p - 1, p - 1, given - threshold});
  }
  if (!feasible) {
    out.reason = "diagonal entries are below the planner thresholds";
    return out;
  }
  out.recipe = std::move(recipe);
  return out;
}

PlanOutcome plan_middle_weight(const std::vector<Int>& target, int n) {
  if (n < 1) throw input_error("dimension must be positive");
  if (static_cast<int>(target.size()) != n + 1)
    throw input_error("target row must have length dimension plus one");
  PlanOutcome out;
  for (const Int& v : target)
    if (v < 0) {
      out.reason = "target entries must be nonnegative";
      return out;
    }
  for (int p = 0; p <= n; ++p)
    if (target[p] != target[n - p]) {
      out.reason = "target row must be conjugation-symmetric";
      return out;
    }

  if (n == 1) {
    if (target[0] != 0) {
      out.reason =
          "dimension one only certifies the projective line, whose middle row "
          "vanishes";
      return out;
    }
    Recipe recipe;
    recipe.n = 1;
    recipe.provenance = "plan-middle";
    out.recipe = std::move(recipe);
    return out;
  }
  if (target[0] != 0) {
    out.reason = "corner middle entries are not realizable by this planner";
    return out;
  }
  if (n == 2) {
    if (target[1] < 1) {
      out.reason = "the central entry of a surface is at least one";
      out.details.push_back({1, 1, 1, target[1]});
      return out;
    }
    Recipe recipe;
    recipe.n = 2;
    recipe.provenance = "plan-middle";
    recipe.point_blowups = target[1] - 1;
    out.recipe = std::move(recipe);
    return out;
  }

  for (int p = 1; p < n; ++p)
    if (target[p] % 2 != 0) {
      out.reason = "middle entries must be even in dimension at least three";
      return out;
    }
  std::vector<Int> inner(n - 1);
  for (int i = 0; i <= n - 2; ++i) inner[i] = target[n - 1 - i] / 2;
  PlanOutcome sub = plan_weight_k(n - 2, inner, n - 1);
  if (!sub.feasible()) {
    out.reason = sub.reason;
    for (const ThresholdDetail& d : sub.details)
      out.details.push_back(
          {d.p + 1, n - d.p - 1, d.required * 2, target[d.p + 1]});
    return out;
  }
  Recipe recipe = std::move(*sub.recipe);
  recipe.n = n;
  recipe.times_p1 = true;
  recipe.provenance = "plan-middle";
  out.recipe = std::move(recipe);
  return out;
}

BettiPlan plan_betti(const BettiVector& target) {
  BettiPlan result;
  ValidityReport report = validate_betti(target);
  if (!report.valid) {
    result.plan.reason = "target fails validity: " + violation_text(report);
    result.stated_sufficient_condition = false;
    return result;
  }
  const int n = (static_cast<int>(target.size()) - 1) / 2;

  TruncatedDiamond t = TruncatedDiamond::zero(n);
  for (int k = 0; k < n; ++k) {
    if (k % 2 == 0)
      t.at(k / 2, k / 2) = target[k];
    else {
      t.at((k + 1) / 2, k / 2) = target[k] / 2;
      t.at(k / 2, (k + 1) / 2) = target[k] / 2;
    }
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if (p + q > n) t.at(p, q) = t.at(n - p, n - q);

  result.plan = plan_truncated(t);
  if (result.plan.feasible()) result.plan.recipe->provenance = "plan-betti";

  const Int scale = Int(n) * n - 2 * n + 5;
  for (int k = 1; 2 * k < n; ++k)
    if (8 * (target[2 * k] - target[2 * k - 2]) < Int(k) * scale) {
      result.stated_sufficient_condition = false;
      break;
    }
  return result;
}

namespace {

ZcNode zc_leaf(const Int& genus, bool inverse) {
  ZcNode node;
  node.kind = ZcNode::Kind::Leaf;
  node.genus = genus;
  node.inverse_automorphism = inverse;
  node.a = inverse ? 0 : 1;
  node.b = inverse ? 1 : 0;
  return node;
}

ZcNode zc_combine(ZcNode first, ZcNode second) {
  ZcNode node;
  node.kind = ZcNode::Kind::Combine;
  node.a = first.a + second.a;
  node.b = first.b + second.b;
  node.first = std::make_unique<ZcNode>(std::move(first));
  node.second = std::make_unique<ZcNode>(std::move(second));
  return node;
}

ZcNode zc_build(int a, int b, const Int& genus) {
  if (a == 1 && b == 0) return zc_leaf(genus, false);
  if (a == 0 && b == 1) return zc_leaf(genus, true);
  if (b == 0) return zc_combine(zc_leaf(genus, false), zc_build(a - 1, 0, genus));
  return zc_combine(zc_leaf(genus, true), zc_build(a, b - 1, genus));
}

}  // namespace

ZcCertificate zc_certificate(int a, int b, int c, int n) {
  if (b < 0 || a <= b)
    throw input_error("certificate bidegree needs a > b >= 0");
  if (c < 1) throw input_error("certificate level must be positive");
  if (n < a + b)
    throw input_error("dimension must be at least the certified weight");
  ZcCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.c = c;
  cert.n = n;
  Int order = 1;
  for (int i = 0; i < c; ++i) order *= 3;
  cert.offdiag = (order - 1) / 2;
  cert.projective_factor = n - a - b;
  cert.tree = zc_build(a, b, cert.offdiag);
  return cert;
}

std::optional<Int> zc_hodge(const ZcCertificate& cert, int p, int q) {
  if (p < 0 || q < 0 || p > cert.n || q > cert.n)
    throw input_error("cell index out of range");
  if (p == q) return std::nullopt;
  if (p < q) std::swap(p, q);
  const int a = cert.a;
  const int b = cert.b;
  if (p - q == a - b && p >= a && p - a <= cert.projective_factor)
    return cert.offdiag;
  return Int(0);
}

}  // namespace hodgeforge
