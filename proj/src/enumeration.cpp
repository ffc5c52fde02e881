#include "colorcomp/enumeration.hpp"

#include <cstdlib>
#include <string>

#include "colorcomp/counting.hpp"
#include "colorcomp/errors.hpp"

namespace colorcomp {

EnumLimits default_enum_limits() {
  EnumLimits limits;
  if (const char* env = std::getenv("COLORCOMP_ENUM_CAP")) {
    const std::string text(env);
    const auto colon = text.find(':');
    try {
      if (colon == std::string::npos) {
        limits.max_items = std::stoull(text);
      } else {
        limits.max_n = std::stoull(text.substr(0, colon));
        limits.max_items = std::stoull(text.substr(colon + 1));
      }
    } catch (const std::exception&) {
      // malformed override: keep defaults
    }
  }
  return limits;
}

namespace {

void check_colored_caps(const ColorFamily& family, std::uint64_t n,
                        std::optional<std::uint64_t> k, const EnumLimits& limits,
                        bool item_guard) {
  if (n > limits.max_n) {
    // Estimating the output size is itself a DP; skip it when n is large
    // enough that the estimate would be the expensive part.
    std::string estimate;
    if (n <= 2000 && n <= max_table_size())
      estimate = (k ? count_nk(family, n, *k) : count_total(family, n)).str();
    throw CapExceededError(
        "enumeration n=" + std::to_string(n) + " exceeds cap " +
            std::to_string(limits.max_n) +
            (estimate.empty() ? std::string() : " (estimated items: " + estimate + ")") +
            "; set COLORCOMP_ENUM_CAP to raise",
        estimate);
  }
  if (!item_guard) return;
  const BigCount estimate = k ? count_nk(family, n, *k) : count_total(family, n);
  if (estimate > limits.max_items)
    throw CapExceededError("estimated " + estimate.str() + " items exceeds cap " +
                               std::to_string(limits.max_items) +
                               " (set COLORCOMP_ENUM_CAP to raise)",
                           estimate.str());
}

// Odometer over the color labels of a fixed parts tuple, colors in
// lexicographic order. Returns false when the sink stops the stream.
bool emit_colorings(const std::vector<std::uint64_t>& parts,
                    const std::vector<BigCount>& b,
                    const std::function<bool(const ColoredComposition&)>& sink) {
  ColoredComposition item;
  item.parts.reserve(parts.size());
  std::vector<std::uint64_t> limits_per_pos(parts.size());
  for (std::size_t j = 0; j < parts.size(); ++j) {
    limits_per_pos[j] = b[parts[j]].convert_to<std::uint64_t>();
    item.parts.push_back({parts[j], 1});
  }
  for (;;) {
    if (!sink(item)) return false;
    std::size_t pos = parts.size();
    while (pos > 0) {
      --pos;
      if (item.parts[pos].color < limits_per_pos[pos]) {
        ++item.parts[pos].color;
        for (std::size_t j = pos + 1; j < parts.size(); ++j) item.parts[j].color = 1;
        break;
      }
      if (pos == 0) return true;
    }
    if (parts.empty()) return true;
  }
}

bool colored_rec(std::uint64_t remaining, std::optional<std::uint64_t> k_left,
                 std::vector<std::uint64_t>& parts, const std::vector<BigCount>& b,
                 const std::function<bool(const ColoredComposition&)>& sink) {
  if (remaining == 0) {
    if (k_left && *k_left != 0) return true;
    return emit_colorings(parts, b, sink);
  }
  if (k_left && *k_left == 0) return true;
  std::uint64_t hi = remaining;
  if (k_left) hi = remaining - (*k_left - 1);
  for (std::uint64_t i = 1; i <= hi; ++i) {
    if (b[i].is_zero()) continue;
    parts.push_back(i);
    const bool keep_going =
        colored_rec(remaining - i,
                    k_left ? std::optional<std::uint64_t>(*k_left - 1) : std::nullopt,
                    parts, b, sink);
    parts.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

void count_colored_rec(std::uint64_t remaining, std::optional<std::uint64_t> k_left,
                       const BigCount& prod, const std::vector<BigCount>& b,
                       BigCount& acc) {
  if (remaining == 0) {
    if (!k_left || *k_left == 0) acc += prod;
    return;
  }
  if (k_left && *k_left == 0) return;
  std::uint64_t hi = remaining;
  if (k_left) hi = remaining - (*k_left - 1);
  for (std::uint64_t i = 1; i <= hi; ++i) {
    if (b[i].is_zero()) continue;
    count_colored_rec(remaining - i,
                      k_left ? std::optional<std::uint64_t>(*k_left - 1) : std::nullopt,
                      prod * b[i], b, acc);
  }
}

std::vector<BigCount> fetch_b(const ColorFamily& family, std::uint64_t n) {
  std::vector<BigCount> b(n + 1);
  for (std::uint64_t i = 1; i <= n; ++i) b[i] = family.color_count(i);
  return b;
}

}  // namespace

void enumerate_colored(const ColorFamily& family, std::uint64_t n,
                       std::optional<std::uint64_t> k,
                       const std::function<bool(const ColoredComposition&)>& sink,
                       const EnumLimits& limits) {
  check_colored_caps(family, n, k, limits, /*item_guard=*/true);
  const auto b = fetch_b(family, n);
  std::vector<std::uint64_t> parts;
  colored_rec(n, k, parts, b, sink);
}

BigCount count_colored(const ColorFamily& family, std::uint64_t n,
                       std::optional<std::uint64_t> k, const EnumLimits& limits) {
  check_colored_caps(family, n, k, limits, /*item_guard=*/false);
  const auto b = fetch_b(family, n);
  BigCount acc = 0;
  count_colored_rec(n, k, 1, b, acc);
  return acc;
}

namespace {

// Candidate columns in lexicographic order: every nonzero vector of `rows`
// nonnegative entries with sum in [1, budget].
bool column_rec(std::vector<std::uint64_t>& column, std::size_t idx,
                std::uint64_t budget, std::uint64_t used,
                const std::function<bool(std::uint64_t)>& on_column) {
  if (idx == column.size()) {
    if (used == 0) return true;  // all-zero column is not allowed
    return on_column(used);
  }
  for (std::uint64_t v = 0; v + used <= budget; ++v) {
    column[idx] = v;
    if (!column_rec(column, idx + 1, budget, used + v, on_column)) return false;
  }
  column[idx] = 0;
  return true;
}

bool matrix_rec(std::uint64_t remaining, MatrixComposition& current,
                const std::function<bool(const MatrixComposition&)>& sink) {
  if (remaining == 0) return sink(current);
  std::vector<std::uint64_t> column(current.rows, 0);
  return column_rec(column, 0, remaining, 0, [&](std::uint64_t used) {
    current.columns.push_back(column);
    const bool keep_going = matrix_rec(remaining - used, current, sink);
    current.columns.pop_back();
    return keep_going;
  });
}

}  // namespace

void enumerate_matrix(std::size_t k_rows, std::uint64_t n,
                      const std::function<bool(const MatrixComposition&)>& sink,
                      const EnumLimits& limits) {
  if (k_rows < 1) throw std::invalid_argument("enumerate_matrix requires k_rows >= 1");
  const ColorFamily family = ColorFamily::matrix(static_cast<std::uint32_t>(k_rows));
  check_colored_caps(family, n, std::nullopt, limits, /*item_guard=*/true);
  MatrixComposition current;
  current.rows = k_rows;
  matrix_rec(n, current, sink);
}

BigCount count_matrix(std::size_t k_rows, std::uint64_t n, const EnumLimits& limits) {
  BigCount count = 0;
  enumerate_matrix(k_rows, n, [&](const MatrixComposition&) {
    ++count;
    return true;
  }, limits);
  return count;
}

}  // namespace colorcomp
