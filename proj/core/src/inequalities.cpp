#include "hodgeforge/inequalities.hpp"

#include <algorithm>
#include <utility>

#include "hodgeforge/errors.hpp"

namespace hodgeforge {

namespace {

CheckRow make_row(std::string rule, std::string anchor, bool applicable,
                  bool ok, Int lhs, Int rhs) {
  CheckRow row;
  row.rule = std::move(rule);
  row.anchor = std::move(anchor);
  row.status = applicable ? (ok ? "pass" : "fail") : "n/a";
  row.lhs = std::move(lhs);
  row.rhs = std::move(rhs);
  return row;
}

void require_natural(const Int& value, const char* name) {
  if (value < 0)
    throw input_error(std::string("Hodge numbers must be nonnegative: ") +
                      name);
}

}  // namespace

bool CheckReport::passed() const {
  for (const CheckRow& row : rows)
    if (row.status == "fail") return false;
  return true;
}

CheckReport surface_check(const SurfaceData& d) {
  require_natural(d.h10, "h10");
  require_natural(d.h20, "h20");
  require_natural(d.h11, "h11");

  const Int b1 = 2 * d.h10;
  const Int b2 = 2 * d.h20 + d.h11;
  const Int c2 = 2 - 2 * b1 + b2;
  const Int c1_sq = 10 - 4 * b1 + 10 * d.h20 - d.h11;

  CheckReport report;
  report.classification = "general-type-surface";
  report.rows.push_back(make_row("bmy-hodge-form", "bogomolov-miyaoka-yau",
                                 true, 1 + d.h10 + d.h20 <= d.h11,
                                 1 + d.h10 + d.h20, d.h11));
  report.rows.push_back(make_row("middle-strict-domination",
                                 "bogomolov-miyaoka-yau", true,
                                 d.h20 < d.h11, d.h20, d.h11));
  report.rows.push_back(make_row("bmy-chern-form", "noether-gauss-bonnet",
                                 true, c1_sq <= 3 * c2, c1_sq, 3 * c2));
  return report;
}

const std::vector<Int>& fano_h21_values() {
  static const std::vector<Int> values = {0,  2,  3,  5,  7, 10,
                                          14, 20, 21, 30, 52};
  return values;
}

CheckReport threefold_check(const ThreefoldData& d) {
  require_natural(d.h10, "h10");
  require_natural(d.h20, "h20");
  require_natural(d.h30, "h30");
  require_natural(d.h11, "h11");
  require_natural(d.h21, "h21");

  const bool rank_one = d.h11 == 1;
  const Int chi_o = 1 - d.h10 + d.h20 - d.h30;
  const Int b1 = 2 * d.h10;
  const Int b2 = 2 * d.h20 + d.h11;
  const Int b3 = 2 * d.h30 + 2 * d.h21;
  const Int euler = 2 - 2 * b1 + 2 * b2 - b3;
  const Int c1c2_derived = 24 * chi_o;

  const bool anti_ample = rank_one && d.h30 == 0;
  const bool trivial = rank_one && d.h30 == 1;
  const bool ample = rank_one && d.h30 > 1;

  CheckReport report;
  report.classification = !rank_one      ? "unclassified"
                          : anti_ample   ? "anti-ample-canonical"
                          : trivial      ? "trivial-canonical"
                                         : "ample-canonical";

  report.rows.push_back(make_row("odd-betti-vanishing", "first-betti-lemma",
                                 rank_one, d.h10 == 0, d.h10, 0));
  const Int genus_cap = std::max(d.h30, Int(1));
  report.rows.push_back(make_row("geometric-genus-bound",
                                 "middle-column-estimate", rank_one,
                                 d.h20 < genus_cap, d.h20, genus_cap));

  const std::vector<Int>& fano = fano_h21_values();
  const bool fano_member =
      std::find(fano.begin(), fano.end(), d.h21) != fano.end();
  report.rows.push_back(make_row("fano-curve-count", "fano-classification",
                                 anti_ample, fano_member, d.h21,
                                 fano.back()));

  report.rows.push_back(make_row("negative-holomorphic-euler",
                                 "ample-euler-sign", ample,
                                 1 + d.h20 < d.h30, 1 + d.h20, d.h30));

  // Canonical-degree estimate, first through Chern numbers derived from the
  // diamond, then in the printed Hodge-number translation.
  report.rows.push_back(make_row(
      "canonical-degree-bound", "canonical-degree-estimate", ample,
      1748588 * c1c2_derived <= 3 * euler, 1748588 * c1c2_derived,
      3 * euler));
  const Int hodge_lhs = 6994346 * (1 + d.h20) + 3 * d.h21;
  const Int hodge_rhs = 6994349 * d.h30;
  report.rows.push_back(make_row("hodge-degree-bound",
                                 "canonical-degree-estimate", ample,
                                 hodge_lhs <= hodge_rhs, hodge_lhs,
                                 hodge_rhs));
  const Int coarse_rhs = 2985984 * d.h30;
  report.rows.push_back(make_row("coarse-middle-growth",
                                 "coarse-degree-bound", ample,
                                 d.h21 < coarse_rhs, d.h21, coarse_rhs));

  const Int c1c2_used = d.c1c2.value_or(c1c2_derived);
  report.rows.push_back(make_row("chern-euler-consistency",
                                 "riemann-roch-threefold",
                                 d.c1c2.has_value(), c1c2_used == c1c2_derived,
                                 c1c2_used, c1c2_derived));
  const Int c1_cubed = d.c1_cubed.value_or(0);
  report.rows.push_back(make_row(
      "yau-chern-inequality", "yau-inequality", ample && d.c1_cubed.has_value(),
      8 * c1c2_used <= 3 * c1_cubed, 8 * c1c2_used, 3 * c1_cubed));
  return report;
}

CheckReport fourfold_check(const FourfoldData& d) {
  require_natural(d.h10, "h10");
  require_natural(d.h20, "h20");
  require_natural(d.h30, "h30");
  require_natural(d.h40, "h40");
  require_natural(d.h11, "h11");
  require_natural(d.h21, "h21");
  require_natural(d.h31, "h31");
  require_natural(d.h22, "h22");
  if (d.canonical != "" && d.canonical != "ample" &&
      d.canonical != "anti_ample" && d.canonical != "trivial")
    throw input_error(
        "canonical type must be \"ample\", \"anti_ample\", \"trivial\", or "
        "empty");

  const bool rank_one = d.h11 == 1;
  const Int b1 = 2 * d.h10;
  const Int b2 = 2 * d.h20 + d.h11;
  const Int b3 = 2 * d.h30 + 2 * d.h21;
  const Int b4 = 2 * d.h40 + 2 * d.h31 + d.h22;
  const Int euler = 2 - 2 * b1 + 2 * b2 - 2 * b3 + b4;
  const Int chi2 = 2 * d.h20 - 2 * d.h21 + d.h22;
  const Int chi3 = d.h30 - d.h31 + d.h21 - d.h11 + d.h10;
  const Int chi4 = 1 - d.h10 + d.h20 - d.h30 + d.h40;

  CheckReport report;
  report.classification = d.canonical.empty() ? "unspecified" : d.canonical;

  report.rows.push_back(make_row("odd-betti-vanishing", "first-betti-lemma",
                                 rank_one, d.h10 == 0, d.h10, 0));

  const Int estimate =
      224 + 228 * d.h20 - 224 * d.h30 + d.h22 - 2 * d.h31 + 226 * d.h40;
  const bool chern_pair =
      d.c1_4.has_value() && d.c1_2_c2.has_value();
  const Int lemma_rhs =
      4 * d.c1_2_c2.value_or(0) - d.c1_4.value_or(0);
  report.rows.push_back(make_row("chern-hodge-estimate",
                                 "picard-rank-one-estimate",
                                 rank_one && chern_pair,
                                 3 * estimate >= lemma_rhs, 3 * estimate,
                                 lemma_rhs));

  const Int lw_rhs = 12 * chi2 - 36 * chi3 + 72 * chi4 - 14 * euler;
  report.rows.push_back(make_row(
      "libgober-wood-identity", "libgober-wood", d.c1_c3.has_value(),
      d.c1_c3.value_or(lw_rhs) == lw_rhs, d.c1_c3.value_or(lw_rhs), lw_rhs));

  report.rows.push_back(make_row("euler-consistency", "gauss-bonnet",
                                 d.c4.has_value(),
                                 d.c4.value_or(euler) == euler,
                                 d.c4.value_or(euler), euler));

  const bool stated_trivial = d.canonical == "trivial";
  const bool vanishing_c1 = d.c1_4.has_value() && d.c1_2_c2.has_value() &&
                            d.c1_c3.has_value() && *d.c1_4 == 0 &&
                            *d.c1_2_c2 == 0 && *d.c1_c3 == 0;
  const Int residual = 52 + 40 * d.h20 - 4 * d.h21 - 2 * d.h22 -
                       52 * d.h30 + 8 * d.h31 + 44 * d.h40;
  report.rows.push_back(make_row("k-trivial-identity",
                                 "trivial-canonical-specialization",
                                 stated_trivial || vanishing_c1,
                                 residual == 0, residual, 0));

  const bool stated_ample = d.canonical == "ample";
  report.rows.push_back(make_row(
      "yau-ample-inequality", "yau-inequality", stated_ample && chern_pair,
      5 * d.c1_2_c2.value_or(0) >= 2 * d.c1_4.value_or(0),
      5 * d.c1_2_c2.value_or(0), 2 * d.c1_4.value_or(0)));
  report.rows.push_back(make_row("ample-estimate-chain",
                                 "picard-rank-one-estimate",
                                 stated_ample && rank_one &&
                                     d.c1_4.has_value(),
                                 5 * estimate >= d.c1_4.value_or(0),
                                 5 * estimate, d.c1_4.value_or(0)));

  const bool all_chern = d.c1_4.has_value() && d.c1_2_c2.has_value() &&
                         d.c1_c3.has_value() && d.c2_2.has_value() &&
                         d.c4.has_value();
  const Int rr_rhs = -d.c4.value_or(0) + d.c1_c3.value_or(0) +
                     3 * d.c2_2.value_or(0) + 4 * d.c1_2_c2.value_or(0) -
                     d.c1_4.value_or(0);
  report.rows.push_back(make_row("chi4-riemann-roch", "riemann-roch-fourfold",
                                 all_chern, 720 * chi4 == rr_rhs, 720 * chi4,
                                 rr_rhs));
  return report;
}

HodgeDiamond hypersurface_hodge(int n, long d) {
  if (n < 1) throw input_error("hypersurface dimension must be at least one");
  if (d < 2) throw input_error("hypersurface degree must be at least two");

  HodgeDiamond out = HodgeDiamond::zero(n);
  for (int p = 0; 2 * p < n; ++p) {
    out.at(p, p) = 1;
    out.at(n - p, n - p) = 1;
  }
  for (int q = 0; q <= n; ++q) {
    const long target = static_cast<long>(q + 1) * d - (n + 2);
    Int prim = 0;
    for (int j = 0; j <= n + 2; ++j) {
      const long rem = target - static_cast<long>(j) * (d - 1);
      if (rem < 0) break;
      const Int term = binomial(rem + n + 1, n + 1) * binomial(n + 2, j);
      if (j % 2 == 0)
        prim += term;
      else
        prim -= term;
    }
    out.at(n - q, q) = prim;
    if (n % 2 == 0 && 2 * q == n) out.at(q, q) += 1;
  }
  return out;
}

std::vector<Int> product_primitive(int n, int k, long d) {
  if (k < 1 || k > n)
    throw input_error("hypersurface factor dimension must lie in 1..n");
  const HodgeDiamond slice = hypersurface_hodge(k, d);
  const HodgeDiamond product =
      k == n ? slice : kunneth(slice, HodgeDiamond::projective_space(n - k));
  const BettiVector betti = betti_of(product);
  std::vector<Int> out(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    out[static_cast<std::size_t>(j)] =
        betti[static_cast<std::size_t>(j)] -
        (j >= 2 ? betti[static_cast<std::size_t>(j) - 2] : Int(0));
  return out;
}

namespace {

void normalize_cell(int n, int& x, int& y) {
  if (x + y > n) {
    x = n - x;
    y = n - y;
  }
  if (x < y) std::swap(x, y);
}

struct NormalizedQuery {
  int n;
  int r, s;
  int p, q;
};

NormalizedQuery normalize(const DominationQuery& query) {
  if (query.n < 1) throw input_error("dimension must be at least one");
  auto in_range = [&](int v) { return v >= 0 && v <= query.n; };
  if (!in_range(query.r) || !in_range(query.s) || !in_range(query.p) ||
      !in_range(query.q))
    throw input_error("bidegree indices must lie in 0..n");
  NormalizedQuery out{query.n, query.r, query.s, query.p, query.q};
  normalize_cell(out.n, out.r, out.s);
  normalize_cell(out.n, out.p, out.q);
  return out;
}

}  // namespace

DominationVerdict dominates(const DominationQuery& query) {
  const NormalizedQuery c = normalize(query);
  const int n = c.n;

  if (n == 2 && c.r == 1 && c.s == 1 && c.p == 2 && c.q == 0)
    return {true, "surface-bmy-inequality"};
  if (c.p == 0 && c.q == 0) return {false, "trivial-constant-cell"};
  if (c.r - c.p == c.s - c.q && c.r >= c.p)
    return {false, "lefschetz-shift"};

  if (c.r + c.s < n) {
    if (c.p + c.q == n) return {false, "hypersurface-family"};
    return {false, "truncated-planner-family"};
  }
  if (c.r != c.s) {
    if (c.p == c.q) return {false, "point-blowup-family"};
    return {false, "certificate-family"};
  }
  if (c.p + c.q == n) {
    if (c.q == 0) return {false, "certificate-times-curve-family"};
    return {false, "middle-weight-family"};
  }
  if (c.p == 1 && c.q == 0) return {false, "curve-times-projective-family"};
  return {false, "hyperplane-section-family"};
}

namespace {

Recipe concentrated_recipe(int n, int p, int q, const Int& genus) {
  Recipe recipe;
  recipe.n = n;
  recipe.provenance = "counterexample-family";
  if (q == 0) {
    recipe.i0 = GabgSpec{p, 0, genus};
  } else if (p == 1 && q == 1) {
    recipe.point_blowups = genus;
  } else {
    recipe.blocks.push_back(GabgSpec{p - 1, q - 1, genus});
  }
  return recipe;
}

}  // namespace

FamilyReport counterexample_family(const DominationQuery& query, int count) {
  if (count < 1) throw input_error("witness count must be positive");
  const DominationVerdict verdict = dominates(query);
  const NormalizedQuery c = normalize(query);
  const int n = c.n;

  FamilyReport report;
  report.tag = verdict.tag;

  if (verdict.dominates || verdict.tag == "trivial-constant-cell" ||
      verdict.tag == "lefschetz-shift") {
    report.computable = false;
    report.exact_bounded_side = false;
    report.note = "the relation holds universally; no counterexample exists";
    return report;
  }

  const Caps caps;

  if (verdict.tag == "hypersurface-family") {
    for (int j = 1; j <= count; ++j) {
      const HodgeDiamond x = hypersurface_hodge(n, n + 2 + j);
      report.witnesses.push_back({x.at(c.r, c.s), x.at(c.p, c.q)});
    }
    report.bound = 1;
    report.note = "smooth hypersurfaces of degree n+3 and up";
    return report;
  }

  if (verdict.tag == "truncated-planner-family") {
    for (int j = 1; j <= count; ++j) {
      Recipe recipe = concentrated_recipe(n, c.p, c.q, Int(j));
      const EvaluatedDiamond x = evaluate(recipe, caps);
      report.witnesses.push_back({*x.at(c.r, c.s), *x.at(c.p, c.q)});
      if (j == count) report.recipe = std::move(recipe);
    }
    report.bound = report.witnesses.front().h_rs;
    report.note = "covering constructions concentrating mass at one cell";
    return report;
  }

  if (verdict.tag == "point-blowup-family") {
    for (int j = 1; j <= count; ++j) {
      Recipe recipe;
      recipe.n = n;
      recipe.point_blowups = j;
      recipe.provenance = "counterexample-family";
      const EvaluatedDiamond x = evaluate(recipe, caps);
      report.witnesses.push_back({*x.at(c.r, c.s), *x.at(c.p, c.q)});
      if (j == count) report.recipe = std::move(recipe);
    }
    report.bound = report.witnesses.front().h_rs;
    report.note = "projective space blown up in j points";
    return report;
  }

  if (verdict.tag == "certificate-family") {
    for (int j = 1; j <= count; ++j) {
      ZcCertificate cert = zc_certificate(c.p, c.q, j, n);
      report.witnesses.push_back(
          {*zc_hodge(cert, c.r, c.s), cert.offdiag});
      if (j == count) report.certificate = std::move(cert);
    }
    report.bound = report.witnesses.front().h_rs;
    report.note = "certified quotient models of growing level";
    return report;
  }

  if (verdict.tag == "middle-weight-family") {
    const int m = n / 2;
    for (int j = 1; j <= count; ++j) {
      std::vector<Int> target(static_cast<std::size_t>(n) + 1, Int(0));
      target[static_cast<std::size_t>(c.p)] = 2 * Int(j);
      target[static_cast<std::size_t>(c.q)] = 2 * Int(j);
      target[static_cast<std::size_t>(m)] = 2 * weight_floor(m - 1);
      PlanOutcome plan = plan_middle_weight(target, n);
      if (!plan.feasible())
        throw internal_error("middle-weight family target must be plannable");
      const EvaluatedDiamond x = evaluate(*plan.recipe, caps);
      report.witnesses.push_back({*x.at(c.r, c.s), *x.at(c.p, c.q)});
      if (j == count) report.recipe = std::move(*plan.recipe);
    }
    report.bound = report.witnesses.front().h_rs;
    report.note = "middle rows with growing off-center mass";
    return report;
  }

  if (verdict.tag == "certificate-times-curve-family") {
    ZcCertificate cert = zc_certificate(n - 1, 0, 1, n - 1);
    for (int j = 1; j <= count; ++j)
      report.witnesses.push_back({std::nullopt, cert.offdiag * j});
    report.exact_bounded_side = false;
    report.certificate = std::move(cert);
    report.note =
        "products of one certified model with curves of growing genus; the "
        "bounded side is a fixed sum of two uncertified diagonal values and "
        "is constant along the family";
    return report;
  }

  if (verdict.tag == "curve-times-projective-family") {
    for (int j = 1; j <= count; ++j) {
      const HodgeDiamond x =
          kunneth(HodgeDiamond::curve(j),
                  HodgeDiamond::projective_space(n - 1));
      report.witnesses.push_back({x.at(c.r, c.s), x.at(c.p, c.q)});
    }
    report.bound = report.witnesses.front().h_rs;
    report.note = "products of curves of growing genus with projective space";
    return report;
  }

  report.computable = false;
  report.exact_bounded_side = false;
  report.recipe = concentrated_recipe(n, c.p, c.q, Int(count));
  report.note =
      "hyperplane sections of the emitted ambient construction; the bounded "
      "side is certified but not computed";
  return report;
}

}  // namespace hodgeforge
