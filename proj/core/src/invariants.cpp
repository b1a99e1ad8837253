#include "hodgeforge/invariants.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace hodgeforge {

InvariantTable InvariantTable::zero(int k) {
  if (k < 0) throw input_error("table size must be nonnegative");
  return InvariantTable{
      k, std::vector<std::vector<Int>>(k + 1, std::vector<Int>(k + 1, Int(0)))};
}

const Int& InvariantTable::at(int p, int q) const {
  if (p < 0 || q < 0 || p > k || q > k)
    throw input_error("invariant table index out of range");
  return dims[p][q];
}

Int& InvariantTable::at(int p, int q) {
  if (p < 0 || q < 0 || p > k || q > k)
    throw input_error("invariant table index out of range");
  return dims[p][q];
}

namespace {

struct ActionBudget {
  Int remaining;

  void charge(const Int& amount) {
    if (amount > remaining)
      throw resource_limit_error(
          "monomial-action budget exhausted; raise the basis cap to proceed");
    remaining -= amount;
  }
};

Int average_over(const std::vector<GroupElement>& elements,
                 const ProductSpace& space, const std::vector<Monomial>& cell,
                 int jobs) {
  const int m = space.scalar_modulus();
  const std::size_t count = elements.size();
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::size_t>(
                                          count, 64))));
  std::vector<CycSum> partial(workers, CycSum(m));
  auto run = [&](int w) {
    CycSum& acc = partial[w];
    for (std::size_t i = w; i < count; i += workers) {
      const GroupElement& e = elements[i];
      for (const Monomial& mono : cell) {
        auto [image, scalar] = act(space, e, mono);
        if (image == mono) acc.add(scalar);
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (std::thread& t : pool) t.join();
  }
  CycSum total(m);
  for (const CycSum& p : partial) total.add(p);
  const Int trace_sum = reduce_to_integer(total);
  const Int order = static_cast<long long>(count);
  if (trace_sum < 0 || trace_sum % order != 0)
    throw internal_error(
        "orbit-average trace sum is not a nonnegative multiple of the group order");
  return trace_sum / order;
}

Int cell_with_budget(const ProductSpace& space,
                     const std::vector<GroupElement>& elements, int p, int q,
                     ActionBudget& budget, int jobs) {
  if (elements.empty()) throw input_error("element list must not be empty");
  const Int size = basis_count(space, p, q);
  if (size == 0) return 0;
  budget.charge(Int(static_cast<long long>(elements.size())) * size);
  const std::vector<Monomial> cell = basis(space, p, q);
  return average_over(elements, space, cell, jobs);
}

}  // namespace

Int burnside_cell(const ProductSpace& space,
                  const std::vector<GroupElement>& elements, int p, int q,
                  const Caps& caps, int jobs) {
  ActionBudget budget{Int(caps.max_basis)};
  return cell_with_budget(space, elements, p, q, budget, jobs);
}

InvariantTable burnside_dims(const ProductSpace& space,
                             const std::vector<GroupElement>& elements,
                             const Caps& caps, int jobs) {
  const int k = space.factors();
  InvariantTable table = InvariantTable::zero(k);
  ActionBudget budget{Int(caps.max_basis)};
  for (int p = 0; p <= k; ++p)
    for (int q = 0; q <= k; ++q)
      table.dims[p][q] = cell_with_budget(space, elements, p, q, budget, jobs);
  return table;
}

InvariantTable closed_form_ab(int a, int b, const Int& g) {
  if (!(a > b && b >= 0)) throw input_error("closed form needs a > b >= 0");
  if (g < 0) throw input_error("genus must be nonnegative");
  const int k = a + b;
  InvariantTable table = InvariantTable::zero(k);
  for (int p = 0; p <= k; ++p)
    table.dims[p][p] = std::min({p + 1, b + 1, k - p + 1});
  table.dims[a][b] = g;
  table.dims[b][a] = g;
  return table;
}

AaForms closed_form_aa(int a, const Int& g) {
  if (a < 1) throw input_error("equal-block closed form needs a >= 1");
  if (g < 0) throw input_error("genus must be nonnegative");
  const int k = 2 * a;
  AaForms forms{InvariantTable::zero(k), InvariantTable::zero(k)};
  for (int p = 0; p <= k; ++p) {
    const int base = std::min(p, k - p) / 2;
    forms.printed.dims[p][p] = base;
    forms.corrected.dims[p][p] = base + 1;
    if (p == a) {
      forms.printed.dims[p][p] += g;
      forms.corrected.dims[p][p] += g;
    }
  }
  return forms;
}

namespace {

InvariantTable point_table() {
  InvariantTable t = InvariantTable::zero(0);
  t.dims[0][0] = 1;
  return t;
}

InvariantTable convolve(const InvariantTable& x, const InvariantTable& y) {
  InvariantTable r = InvariantTable::zero(x.k + y.k);
  for (int p1 = 0; p1 <= x.k; ++p1)
    for (int q1 = 0; q1 <= x.k; ++q1) {
      if (x.dims[p1][q1] == 0) continue;
      for (int p2 = 0; p2 <= y.k; ++p2)
        for (int q2 = 0; q2 <= y.k; ++q2)
          if (y.dims[p2][q2] != 0)
            r.dims[p1 + p2][q1 + q2] += x.dims[p1][q1] * y.dims[p2][q2];
    }
  return r;
}

InvariantTable gabg_table(const GabgSpec& s) {
  if (s.a < 0 || s.b < 0) throw input_error("block sizes must be nonnegative");
  if (s.a + s.b == 0) return point_table();
  if (s.a < s.b) throw input_error("two-block spec must satisfy a >= b");
  if (s.a == s.b) return closed_form_aa(s.a, s.g).corrected;
  return closed_form_ab(s.a, s.b, s.g);
}

}  // namespace

InvariantTable invariant_table(const GroupSpec& spec, const Caps& caps,
                               int jobs) {
  return std::visit(
      [&](const auto& s) -> InvariantTable {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GabgSpec>) {
          return gabg_table(s);
        } else if constexpr (std::is_same_v<T, ProductGroupSpec>) {
          InvariantTable acc = point_table();
          for (const GabgSpec& part : s.parts)
            acc = convolve(acc, gabg_table(part));
          return acc;
        } else {
          const ProductSpace space = space_of(spec);
          const std::vector<GroupElement> elements =
              close(space, generators(spec), caps.max_group);
          return burnside_dims(space, elements, caps, jobs);
        }
      },
      spec);
}

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (int f = 0; f < static_cast<int>(perm.size()); ++f) {
    if (seen[f]) continue;
    std::vector<int> cycle;
    int cur = f;
    while (!seen[cur]) {
      seen[cur] = true;
      cycle.push_back(cur);
      cur = perm[cur];
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

int sign_bits(const GroupElement& e) {
  int s = 0;
  for (const Twist& t : e.twist) s += t.s;
  return s;
}

int inversion_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2;
}

}  // namespace

Int gabg_cell_factored(const GabgSpec& spec, int p, int q, const Caps& caps) {
  const int a = spec.a, b = spec.b, k = a + b;
  if (a < 0 || b < 0) throw input_error("block sizes must be nonnegative");
  if (spec.g < 0) throw input_error("genus must be nonnegative");
  if (p < 0 || q < 0 || p > k || q > k) return 0;
  if (k == 0) return p == 0 && q == 0 ? 1 : 0;

  // Signed block permutations (and the block swap) on the genus-0 skeleton;
  // the rotation lattice is never enumerated. Its character sum vanishes
  // unless the monomial's rotation weights are a multiple of the balance
  // functional, which forces either a pure One/Top monomial or a one-form at
  // every factor with uniformly matched indices.
  const GabgSpec skeleton{a, b, Int(0)};
  const std::vector<GroupElement> k2 = kind2_elements(skeleton);
  const std::vector<GroupElement> k3 = kind3_elements(skeleton);
  const std::uint64_t rho_count =
      static_cast<std::uint64_t>(k2.size()) * k3.size();
  if (rho_count > caps.max_group)
    throw resource_limit_error(
        "signed-permutation enumeration exceeds the group cap");
  const ProductSpace skeleton_space{std::vector<int>(k, 0)};

  Int acc = 0;
  for (const GroupElement& e2 : k2)
    for (const GroupElement& e3 : k3) {
      const GroupElement rho = compose(skeleton_space, e3, e2);
      const auto cycles = cycles_of(rho.perm);
      if (p == q) {
        // Pure top-class monomials constant on cycles: subset sums.
        std::vector<Int> ways(p + 1, Int(0));
        ways[0] = 1;
        for (const auto& cycle : cycles) {
          const int len = static_cast<int>(cycle.size());
          for (int t = p; t >= len; --t) ways[t] += ways[t - len];
        }
        acc += ways[p];
      }
      if (p + q == k) {
        bool crossing = false;
        for (const auto& cycle : cycles) {
          bool in1 = false, in2 = false;
          for (int f : cycle) (f < a ? in1 : in2) = true;
          if (in1 && in2) crossing = true;
        }
        if (!crossing) {
          const int sign =
              (sign_bits(rho) + inversion_parity(rho.perm)) % 2 ? -1 : 1;
          if (p == a && q == b) acc += sign * spec.g;
          if (p == b && q == a) acc += sign * spec.g;
        }
      }
    }
  const Int order = static_cast<long long>(rho_count);
  if (acc % order != 0 || acc < 0)
    throw internal_error(
        "factored orbit average is not a nonnegative multiple of the order");
  return acc / order;
}

std::vector<Discrepancy> crosscheck(const GabgSpec& spec, const Caps& caps,
                                    int jobs) {
  const ProductSpace space = space_of(GroupSpec{spec});
  const std::vector<GroupElement> elements =
      close(space, generators(GroupSpec{spec}), caps.max_group);
  const InvariantTable oracle = burnside_dims(space, elements, caps, jobs);
  const InvariantTable closed = gabg_table(spec);
  std::vector<Discrepancy> diffs;
  for (int p = 0; p <= oracle.k; ++p)
    for (int q = 0; q <= oracle.k; ++q)
      if (oracle.dims[p][q] != closed.dims[p][q])
        diffs.push_back({p, q, oracle.dims[p][q], closed.dims[p][q]});
  return diffs;
}

}  // namespace hodgeforge
