#include "hodgeforge/groups.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace hodgeforge {

namespace {

int small_genus(const Int& g, const char* what) {
  if (g < 0) throw input_error(std::string(what) + ": genus must be nonnegative");
  if (g > 1'000'000)
    throw resource_limit_error(std::string(what) +
                               ": genus too large for explicit enumeration");
  return static_cast<int>(g);
}

int modulus_of(int genus) { return 2 * genus + 1; }

int norm_mod(long long v, int m) {
  v %= m;
  if (v < 0) v += m;
  return static_cast<int>(v);
}

}  // namespace

GroupElement identity_element(const ProductSpace& space) {
  GroupElement e;
  e.perm.resize(space.factors());
  std::iota(e.perm.begin(), e.perm.end(), 0);
  e.twist.assign(space.factors(), Twist{});
  return e;
}

void check_element(const ProductSpace& space, const GroupElement& e) {
  const int k = space.factors();
  if (static_cast<int>(e.perm.size()) != k ||
      static_cast<int>(e.twist.size()) != k)
    throw input_error("group element size does not match the space");
  std::vector<bool> seen(k, false);
  for (int f = 0; f < k; ++f) {
    const int d = e.perm[f];
    if (d < 0 || d >= k || seen[d])
      throw input_error("group element permutation is not a bijection");
    seen[d] = true;
    if (space.genera[f] != space.genera[d])
      throw input_error("permutation moves a factor onto a different genus");
    const int m = modulus_of(space.genera[f]);
    if (e.twist[f].j < 0 || e.twist[f].j >= m || e.twist[f].s > 1)
      throw input_error("twist is not normalized for its factor");
  }
}

GroupElement compose(const ProductSpace& space, const GroupElement& second,
                     const GroupElement& first) {
  const int k = space.factors();
  GroupElement r;
  r.perm.resize(k);
  r.twist.resize(k);
  for (int f = 0; f < k; ++f) {
    const int mid = first.perm[f];
    r.perm[f] = second.perm[mid];
    const int m = modulus_of(space.genera[f]);
    r.twist[f].j = norm_mod(static_cast<long long>(first.twist[f].j) +
                                second.twist[mid].j,
                            m);
    r.twist[f].s = first.twist[f].s ^ second.twist[mid].s;
  }
  return r;
}

GroupElement inverse(const ProductSpace& space, const GroupElement& e) {
  const int k = space.factors();
  GroupElement r;
  r.perm.resize(k);
  r.twist.resize(k);
  for (int f = 0; f < k; ++f) {
    const int d = e.perm[f];
    r.perm[d] = f;
    const int m = modulus_of(space.genera[f]);
    r.twist[d].j = norm_mod(-static_cast<long long>(e.twist[f].j), m);
    r.twist[d].s = e.twist[f].s;
  }
  return r;
}

std::pair<Monomial, Scalar> act(const ProductSpace& space,
                                const GroupElement& e, const Monomial& mono) {
  const int k = space.factors();
  const int m = space.scalar_modulus();
  Monomial out;
  out.letters.resize(k);
  long long exp = 0;
  std::vector<int> odd_destinations;
  for (int f = 0; f < k; ++f) {
    const Letter& l = mono.letters[f];
    out.letters[e.perm[f]] = l;
    if (l.kind == Letter::Kind::Hol || l.kind == Letter::Kind::AntiHol) {
      const int step = m / modulus_of(space.genera[f]);
      const long long rot =
          static_cast<long long>(e.twist[f].j) * l.index * step;
      exp += l.kind == Letter::Kind::Hol ? rot : -rot;
      if (e.twist[f].s) exp += m / 2;
      odd_destinations.push_back(e.perm[f]);
    }
  }
  // Reordering sign of the odd-degree letters: parity of inversions among
  // their destination positions, taken in source order.
  int inversions = 0;
  for (std::size_t i = 0; i < odd_destinations.size(); ++i)
    for (std::size_t j = i + 1; j < odd_destinations.size(); ++j)
      if (odd_destinations[i] > odd_destinations[j]) ++inversions;
  if (inversions % 2) exp += m / 2;
  return {std::move(out), Scalar::power(norm_mod(exp, m), m)};
}

namespace {

GroupElement rotation_element(const ProductSpace& space,
                              const std::vector<int>& j) {
  GroupElement e = identity_element(space);
  for (int f = 0; f < space.factors(); ++f)
    e.twist[f].j = norm_mod(j[f], modulus_of(space.genera[f]));
  return e;
}

/// The element sending the content of source sigma(i) to position i, with a
/// sign on that content iff flip[sigma(i)] is set. Indices are block-local;
/// offset places the block inside the whole space.
GroupElement signed_permutation(const ProductSpace& space, int offset,
                                const std::vector<int>& sigma,
                                const std::vector<std::uint8_t>& flip) {
  GroupElement e = identity_element(space);
  for (int i = 0; i < static_cast<int>(sigma.size()); ++i) {
    e.perm[offset + sigma[i]] = offset + i;
    e.twist[offset + sigma[i]].s = flip[sigma[i]];
  }
  return e;
}

int permutation_parity(const std::vector<int>& sigma) {
  int inv = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return inv % 2;
}

void append_block_kind2_generators(const ProductSpace& space, int offset,
                                   int size, std::vector<GroupElement>& out) {
  for (int t = 0; t + 1 < size; ++t) {
    std::vector<int> sigma(size);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[t], sigma[t + 1]);
    std::vector<std::uint8_t> flip(size, 0);
    flip[sigma[0]] = 1;
    out.push_back(signed_permutation(space, offset, sigma, flip));
  }
}

std::vector<GroupElement> gabg_generators(const GabgSpec& spec) {
  const int a = spec.a, b = spec.b;
  if (a < 0 || b < 0) throw input_error("block sizes must be nonnegative");
  const int g = small_genus(spec.g, "group generators");
  ProductSpace space{std::vector<int>(a + b, g)};
  std::vector<GroupElement> gens;
  if (g > 0) {
    std::vector<int> j(a + b, 0);
    for (int i = 0; i + 1 < a; ++i) {
      j.assign(a + b, 0);
      j[i] = 1;
      j[i + 1] = -1;
      gens.push_back(rotation_element(space, j));
    }
    if (a >= 1 && b >= 1) {
      j.assign(a + b, 0);
      j[a - 1] = 1;
      j[a] = 1;
      gens.push_back(rotation_element(space, j));
    }
    for (int i = a; i + 1 < a + b; ++i) {
      j.assign(a + b, 0);
      j[i] = 1;
      j[i + 1] = -1;
      gens.push_back(rotation_element(space, j));
    }
  }
  append_block_kind2_generators(space, 0, a, gens);
  append_block_kind2_generators(space, a, b, gens);
  if (a == b && a > 0) {
    GroupElement swap = identity_element(space);
    for (int i = 0; i < a; ++i) {
      swap.perm[i] = i + a;
      swap.perm[i + a] = i;
    }
    gens.push_back(swap);
  }
  return gens;
}

std::vector<GroupElement> weight2_generators(const Weight2Spec& spec) {
  const int n1 = spec.n1, n2 = spec.n2;
  if (n1 < 1 || n2 < 1) throw input_error("weight-two shape needs n1,n2 >= 1");
  const int g = small_genus(spec.g, "group generators");
  ProductSpace space{std::vector<int>(2 * n1 * n2, g)};
  auto idx = [n2](int block, int slot, int curve) {
    return (block * n2 + slot) * 2 + curve;
  };
  std::vector<GroupElement> gens;
  if (g > 0) {
    // Balanced rotations, once per block (diagonal over slots) and once per
    // slot (diagonal over blocks).
    for (int block = 0; block < n1; ++block) {
      std::vector<int> j(space.factors(), 0);
      for (int slot = 0; slot < n2; ++slot) {
        j[idx(block, slot, 0)] = 1;
        j[idx(block, slot, 1)] = -1;
      }
      gens.push_back(rotation_element(space, j));
    }
    for (int slot = 0; slot < n2; ++slot) {
      std::vector<int> j(space.factors(), 0);
      for (int block = 0; block < n1; ++block) {
        j[idx(block, slot, 0)] = 1;
        j[idx(block, slot, 1)] = -1;
      }
      gens.push_back(rotation_element(space, j));
    }
  }
  // Signed swap of the two curves of every copy, applied diagonally.
  {
    GroupElement e = identity_element(space);
    for (int block = 0; block < n1; ++block)
      for (int slot = 0; slot < n2; ++slot) {
        const int c0 = idx(block, slot, 0), c1 = idx(block, slot, 1);
        e.perm[c0] = c1;
        e.perm[c1] = c0;
        e.twist[c1].s = 1;
      }
    gens.push_back(e);
  }
  // Adjacent block transpositions and adjacent slot transpositions.
  for (int block = 0; block + 1 < n1; ++block) {
    GroupElement e = identity_element(space);
    for (int slot = 0; slot < n2; ++slot)
      for (int curve = 0; curve < 2; ++curve) {
        const int f0 = idx(block, slot, curve), f1 = idx(block + 1, slot, curve);
        e.perm[f0] = f1;
        e.perm[f1] = f0;
      }
    gens.push_back(e);
  }
  for (int slot = 0; slot + 1 < n2; ++slot) {
    GroupElement e = identity_element(space);
    for (int block = 0; block < n1; ++block)
      for (int curve = 0; curve < 2; ++curve) {
        const int f0 = idx(block, slot, curve), f1 = idx(block, slot + 1, curve);
        e.perm[f0] = f1;
        e.perm[f1] = f0;
      }
    gens.push_back(e);
  }
  return gens;
}

GroupElement embed(const ProductSpace& whole, int offset,
                   const GroupElement& part) {
  GroupElement e = identity_element(whole);
  for (int f = 0; f < static_cast<int>(part.perm.size()); ++f) {
    e.perm[offset + f] = offset + part.perm[f];
    e.twist[offset + f] = part.twist[f];
  }
  return e;
}

}  // namespace

ProductSpace space_of(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> ProductSpace {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GabgSpec>) {
          const int g = small_genus(s.g, "space");
          return ProductSpace{std::vector<int>(s.a + s.b, g)};
        } else if constexpr (std::is_same_v<T, Weight2Spec>) {
          const int g = small_genus(s.g, "space");
          return ProductSpace{std::vector<int>(2 * s.n1 * s.n2, g)};
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          return s.space;
        } else {
          ProductSpace space;
          for (const GabgSpec& part : s.parts) {
            const int g = small_genus(part.g, "space");
            space.genera.insert(space.genera.end(), part.a + part.b, g);
          }
          return space;
        }
      },
      spec);
}

std::vector<GroupElement> generators(const GroupSpec& spec) {
  return std::visit(
      [&spec](const auto& s) -> std::vector<GroupElement> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GabgSpec>) {
          return gabg_generators(s);
        } else if constexpr (std::is_same_v<T, Weight2Spec>) {
          return weight2_generators(s);
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          for (const GroupElement& e : s.gens) check_element(s.space, e);
          return s.gens;
        } else {
          const ProductSpace whole = space_of(spec);
          std::vector<GroupElement> gens;
          int offset = 0;
          for (const GabgSpec& part : s.parts) {
            for (const GroupElement& e : gabg_generators(part))
              gens.push_back(embed(whole, offset, e));
            offset += part.a + part.b;
          }
          return gens;
        }
      },
      spec);
}

std::vector<GroupElement> close(const ProductSpace& space,
                                const std::vector<GroupElement>& gens,
                                std::uint64_t max_group) {
  for (const GroupElement& e : gens) check_element(space, e);
  std::set<GroupElement> seen;
  std::deque<const GroupElement*> work;
  auto insert = [&](GroupElement e) {
    auto [it, fresh] = seen.insert(std::move(e));
    if (fresh) {
      if (seen.size() > max_group)
        throw resource_limit_error(
            "group closure exceeds the configured cap of " +
            std::to_string(max_group) + " elements");
      work.push_back(&*it);
    }
  };
  insert(identity_element(space));
  for (const GroupElement& e : gens) insert(e);
  while (!work.empty()) {
    const GroupElement* e = work.front();
    work.pop_front();
    for (const GroupElement& g : gens) insert(compose(space, *e, g));
  }
  return {seen.begin(), seen.end()};
}

std::vector<GroupElement> kind1_elements(const GabgSpec& spec) {
  const int a = spec.a, b = spec.b, k = a + b;
  const int g = small_genus(spec.g, "rotation enumeration");
  const int N = modulus_of(g);
  ProductSpace space{std::vector<int>(k, g)};
  std::vector<GroupElement> out;
  if (k == 0) {
    out.push_back(identity_element(space));
    return out;
  }
  std::vector<int> j(k, 0);
  // Free coordinates 0..k-2; the last solves the balance condition
  // sum(first block) - sum(second block) = 0 mod N.
  std::uint64_t total = 1;
  for (int i = 0; i + 1 < k; ++i) {
    total *= N;
    if (total > 100'000'000ULL)
      throw resource_limit_error("rotation lattice too large to enumerate");
  }
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    long long first = 0, second = 0;
    for (int i = 0; i + 1 < k; ++i) {
      j[i] = static_cast<int>(c % N);
      c /= N;
      (i < a ? first : second) += j[i];
    }
    j[k - 1] = k - 1 < a ? norm_mod(second - first, N)
                         : norm_mod(first - second, N);
    out.push_back(rotation_element(space, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void append_block_kind2_elements(const ProductSpace& space, int offset,
                                 int size, std::vector<GroupElement>& out) {
  std::vector<GroupElement> block;
  if (size == 0) {
    block.push_back(identity_element(space));
  } else {
    std::vector<int> sigma(size);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      const int parity = permutation_parity(sigma);
      std::vector<std::uint8_t> flip(size, 0);
      for (std::uint64_t mask = 0; mask < (1ULL << size); ++mask) {
        if (std::popcount(mask) % 2 != parity) continue;
        for (int i = 0; i < size; ++i) flip[i] = (mask >> i) & 1;
        block.push_back(signed_permutation(space, offset, sigma, flip));
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  if (out.empty()) {
    out = std::move(block);
    return;
  }
  std::vector<GroupElement> combined;
  combined.reserve(out.size() * block.size());
  for (const GroupElement& x : out)
    for (const GroupElement& y : block) combined.push_back(compose(space, x, y));
  out = std::move(combined);
}

}  // namespace

std::vector<GroupElement> kind2_elements(const GabgSpec& spec) {
  const int g = small_genus(spec.g, "signed permutation enumeration");
  ProductSpace space{std::vector<int>(spec.a + spec.b, g)};
  std::vector<GroupElement> out;
  append_block_kind2_elements(space, 0, spec.a, out);
  append_block_kind2_elements(space, spec.a, spec.b, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> kind3_elements(const GabgSpec& spec) {
  const int g = small_genus(spec.g, "block swap enumeration");
  ProductSpace space{std::vector<int>(spec.a + spec.b, g)};
  std::vector<GroupElement> out;
  out.push_back(identity_element(space));
  if (spec.a == spec.b && spec.a > 0) {
    GroupElement swap = identity_element(space);
    for (int i = 0; i < spec.a; ++i) {
      swap.perm[i] = i + spec.a;
      swap.perm[i + spec.a] = i;
    }
    out.push_back(swap);
  }
  return out;
}

}  // namespace hodgeforge
