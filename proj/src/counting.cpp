#include "colorcomp/counting.hpp"

#include <cstdlib>
#include <string>

#include "colorcomp/errors.hpp"

namespace colorcomp {

BigCount CountTable::cell(std::size_t n, std::size_t k) const {
  if (k > n) return 0;
  return cells.at(n).at(k);
}

bool CountTable::operator==(const CountTable& other) const {
  return family == other.family && n_max == other.n_max &&
         cells == other.cells && totals == other.totals;
}

std::size_t max_table_size() {
  if (const char* env = std::getenv("COLORCOMP_MAX_N")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

CountTable build_table(const ColorFamily& family, std::size_t n_max) {
  const std::size_t cap = max_table_size();
  if (n_max > cap)
    throw CapExceededError("table size " + std::to_string(n_max) +
                               " exceeds cap " + std::to_string(cap) +
                               " (set COLORCOMP_MAX_N to raise)",
                           std::to_string(n_max));

  CountTable table;
  table.family = family;
  table.n_max = n_max;

  // b_1..b_n_max, fetched once; zero entries are skipped in both recursions.
  std::vector<BigCount> b(n_max + 1);
  for (std::size_t i = 1; i <= n_max; ++i) b[i] = family.color_count(i);

  table.cells.resize(n_max + 1);
  table.cells[0] = {BigCount(1)};  // C(0,0) = 1
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto& row = table.cells[n];
    row.assign(n + 1, BigCount(0));  // C(n,0) = 0 for n > 0
    for (std::size_t k = 1; k <= n; ++k) {
      BigCount sum = 0;
      // i <= n-k+1 keeps n-i >= k-1, so the (k-1)-column always exists.
      for (std::size_t i = 1; i <= n - k + 1; ++i) {
        if (b[i].is_zero()) continue;
        const BigCount& prev = table.cells[n - i][k - 1];
        if (!prev.is_zero()) sum += b[i] * prev;
      }
      row[k] = std::move(sum);
    }
  }

  table.totals.resize(n_max + 1);
  table.totals[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigCount sum = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (b[i].is_zero()) continue;
      sum += b[i] * table.totals[n - i];
    }
    table.totals[n] = std::move(sum);
  }
  return table;
}

BigCount count_nk(const ColorFamily& family, std::uint64_t n, std::uint64_t k) {
  if (n == 0 && k == 0) return 1;
  if (k > n || k == 0) return 0;
  return build_table(family, n).cells[n][k];
}

BigCount count_total(const ColorFamily& family, std::uint64_t n) {
  if (n == 0) return 1;
  return build_table(family, n).totals[n];
}

}  // namespace colorcomp
