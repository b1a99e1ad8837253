#include "hodgeforge/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "hodgeforge/errors.hpp"

namespace hodgeforge {

Scalar Scalar::times(const Scalar& other) const {
  if (m != other.m) throw internal_error("scalar moduli differ");
  return Scalar::power(e + other.e, m);
}

void CycSum::add(const Scalar& s, const Int& count) {
  if (s.m != m) throw internal_error("scalar modulus does not match sum");
  c[s.e] += count;
}

void CycSum::add(const CycSum& other) {
  if (other.m != m) throw internal_error("cyclotomic sum moduli differ");
  for (int e = 0; e < m; ++e) c[e] += other.c[e];
}

namespace {

/// Exact division of integer polynomials, used only where divisibility holds.
std::vector<Int> poly_divide(std::vector<Int> num, const std::vector<Int>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dd < 0 || den[dd] == 0) throw internal_error("polynomial division by zero");
  std::vector<Int> quot(dn - dd + 1, Int(0));
  for (int i = dn - dd; i >= 0; --i) {
    Int q = num[i + dd] / den[dd];
    if (q * den[dd] != num[i + dd])
      throw internal_error("polynomial division not exact");
    quot[i] = q;
    for (int j = 0; j <= dd; ++j) num[i + j] -= q * den[j];
  }
  for (const Int& r : num)
    if (r != 0) throw internal_error("polynomial division left a remainder");
  return quot;
}

std::vector<Int> cyclotomic_uncached(int m,
                                     std::map<int, std::vector<Int>>& cache);

const std::vector<Int>& cyclotomic_locked(int m,
                                          std::map<int, std::vector<Int>>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  return cache.emplace(m, cyclotomic_uncached(m, cache)).first->second;
}

std::vector<Int> cyclotomic_uncached(int m,
                                     std::map<int, std::vector<Int>>& cache) {
  std::vector<Int> num(m + 1, Int(0));
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = poly_divide(std::move(num), cyclotomic_locked(d, cache));
  return num;
}

std::vector<Int> cyclotomic_cached(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<Int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(m, cache);
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int m) {
  if (m < 1) throw input_error("cyclotomic index must be positive");
  return cyclotomic_cached(m);
}

Int reduce_to_integer(const CycSum& s) {
  if (s.m < 1) throw internal_error("cyclotomic sum has invalid modulus");
  std::vector<Int> r = s.c;
  const std::vector<Int> phi = cyclotomic_cached(s.m);
  const int dd = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    if (r[i] == 0) continue;
    Int q = r[i];
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= q * phi[j];
  }
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0)
      throw internal_error("group-average trace is not a rational integer");
  return r.empty() ? Int(0) : r[0];
}

}  // namespace hodgeforge
