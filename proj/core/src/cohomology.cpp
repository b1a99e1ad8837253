#include "hodgeforge/cohomology.hpp"

#include <numeric>

#include "hodgeforge/errors.hpp"

namespace hodgeforge {

int ProductSpace::scalar_modulus() const {
  long long m = 2;
  for (int g : genera) {
    if (g < 0) throw input_error("factor genus must be nonnegative");
    m = std::lcm(m, 2LL * (2LL * g + 1));
    if (m > (1LL << 30))
      throw resource_limit_error("scalar modulus exceeds enumeration range");
  }
  return static_cast<int>(m);
}

std::pair<int, int> Monomial::bidegree() const {
  int p = 0, q = 0;
  for (const Letter& l : letters) {
    p += l.p();
    q += l.q();
  }
  return {p, q};
}

namespace {

void enumerate(const ProductSpace& space, int f, int p, int q,
               Monomial& partial, std::vector<Monomial>& out) {
  const int rem = space.factors() - f;
  if (p < 0 || q < 0 || p > rem || q > rem) return;
  if (f == space.factors()) {
    out.push_back(partial);
    return;
  }
  const int g = space.genera[f];
  partial.letters[f] = {Letter::Kind::One, 0};
  enumerate(space, f + 1, p, q, partial, out);
  for (int l = 1; l <= g; ++l) {
    partial.letters[f] = {Letter::Kind::Hol, l};
    enumerate(space, f + 1, p - 1, q, partial, out);
  }
  for (int l = 1; l <= g; ++l) {
    partial.letters[f] = {Letter::Kind::AntiHol, l};
    enumerate(space, f + 1, p, q - 1, partial, out);
  }
  partial.letters[f] = {Letter::Kind::Top, 0};
  enumerate(space, f + 1, p - 1, q - 1, partial, out);
}

}  // namespace

std::vector<Monomial> basis(const ProductSpace& space, int p, int q) {
  std::vector<Monomial> out;
  Monomial partial;
  partial.letters.resize(space.factors());
  enumerate(space, 0, p, q, partial, out);
  return out;
}

Int basis_count(const ProductSpace& space, int p, int q) {
  if (p < 0 || q < 0) return 0;
  // Convolution of the per-factor letter counts, one factor at a time.
  std::vector<std::vector<Int>> acc(p + 1, std::vector<Int>(q + 1, Int(0)));
  acc[0][0] = 1;
  for (int g : space.genera) {
    std::vector<std::vector<Int>> next(p + 1, std::vector<Int>(q + 1, Int(0)));
    for (int i = 0; i <= p; ++i)
      for (int j = 0; j <= q; ++j) {
        if (acc[i][j] == 0) continue;
        next[i][j] += acc[i][j];
        if (i < p) next[i + 1][j] += acc[i][j] * g;
        if (j < q) next[i][j + 1] += acc[i][j] * g;
        if (i < p && j < q) next[i + 1][j + 1] += acc[i][j];
      }
    acc = std::move(next);
  }
  return acc[p][q];
}

HodgeDiamond hodge_numbers(const ProductSpace& space) {
  HodgeDiamond d = HodgeDiamond::point();
  for (int g : space.genera) d = kunneth(d, HodgeDiamond::curve(g));
  return d;
}

}  // namespace hodgeforge
