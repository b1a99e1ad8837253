#ifndef HODGEFORGE_ERRORS_HPP
#define HODGEFORGE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hodgeforge {

/// Malformed or out-of-contract input (bad JSON shape, negative entry where a
/// natural is required, index out of range). CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap (group closure size, monomial action budget) was
/// exceeded. Computations never return partial results past a cap; CLI maps
/// this to exit code 3.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Violation of an internal invariant that valid inputs can never trigger
/// (e.g. a group-average that is not a nonnegative integer). Always a bug.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Resource budgets threaded through closure and orbit-average computations.
struct Caps {
  /// Maximum number of distinct group elements a closure may reach.
  std::uint64_t max_group = 10'000'000;
  /// Maximum number of monomial-action applications an orbit average may use.
  std::uint64_t max_basis = 10'000'000;
};

}  // namespace hodgeforge

#endif
