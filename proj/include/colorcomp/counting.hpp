#pragma once

#include <cstdint>
#include <vector>

#include "colorcomp/sequences.hpp"

namespace colorcomp {

/// Memoized triangular table of C(n, k) for one color family.
///
/// cells[n][k] holds the number of generalized compositions of n with exactly
/// k parts (0 <= k <= n <= n_max), filled iteratively from the part-peeling
/// recursion C(n,k) = sum_i b_i C(n-i, k-1). totals[n] holds C(n), computed
/// independently through C(n) = sum_i b_i C(n-i); the two must agree and are
/// compared in tests.
struct CountTable {
  ColorFamily family;
  std::size_t n_max = 0;
  std::vector<std::vector<BigCount>> cells;  // cells[n][k], k <= n
  std::vector<BigCount> totals;              // totals[n], n <= n_max

  /// C(n, k); zero for k > n.
  BigCount cell(std::size_t n, std::size_t k) const;
  const BigCount& total(std::size_t n) const { return totals.at(n); }

  bool operator==(const CountTable& other) const;
};

/// DP table-size cap; default 10000, overridable via COLORCOMP_MAX_N.
std::size_t max_table_size();

/// Builds the full table for n = 0..n_max. Throws CapExceededError when
/// n_max exceeds max_table_size().
CountTable build_table(const ColorFamily& family, std::size_t n_max);

/// Number of generalized compositions of n with exactly k parts.
BigCount count_nk(const ColorFamily& family, std::uint64_t n, std::uint64_t k);

/// Number of all generalized compositions of n; count_total(f, 0) = 1.
BigCount count_total(const ColorFamily& family, std::uint64_t n);

}  // namespace colorcomp
