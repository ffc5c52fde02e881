#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "colorcomp/sequences.hpp"

namespace colorcomp {

/// One generalized composition: ordered parts, each carrying a 1-based color
/// label in [1, b_part].
struct ColoredPart {
  std::uint64_t part = 0;
  std::uint64_t color = 1;
  bool operator==(const ColoredPart&) const = default;
};

struct ColoredComposition {
  std::vector<ColoredPart> parts;
  bool operator==(const ColoredComposition&) const = default;
};

/// Matrix composition: fixed number of rows, ordered nonzero columns, entries
/// summing to n. n = 0 is the empty matrix.
struct MatrixComposition {
  std::size_t rows = 0;
  std::vector<std::vector<std::uint64_t>> columns;
  bool operator==(const MatrixComposition&) const = default;
};

/// Enumeration guards. The item guard protects materializing streams; counts
/// are estimated via the DP before any item is produced.
struct EnumLimits {
  std::uint64_t max_n = 25;
  std::uint64_t max_items = 10'000'000;
};

/// Defaults, with COLORCOMP_ENUM_CAP applied when set ("<items>" or
/// "<n>:<items>").
EnumLimits default_enum_limits();

/// Streams every colored composition of n (restricted to k parts when given)
/// exactly once, in lexicographic order by (parts, colors). The sink returns
/// false to stop early. Throws CapExceededError when n or the estimated
/// output size exceeds the limits.
void enumerate_colored(const ColorFamily& family, std::uint64_t n,
                       std::optional<std::uint64_t> k,
                       const std::function<bool(const ColoredComposition&)>& sink,
                       const EnumLimits& limits = default_enum_limits());

/// Oracle count: sums prod(b_part) over all part compositions of n, without
/// materializing colored items. Only the n cap applies.
BigCount count_colored(const ColorFamily& family, std::uint64_t n,
                       std::optional<std::uint64_t> k = std::nullopt,
                       const EnumLimits& limits = default_enum_limits());

/// Streams every k_rows-row matrix composition of n exactly once, columns in
/// lexicographic order. n = 0 yields the single empty matrix.
void enumerate_matrix(std::size_t k_rows, std::uint64_t n,
                      const std::function<bool(const MatrixComposition&)>& sink,
                      const EnumLimits& limits = default_enum_limits());

/// Cardinality of enumerate_matrix by exhaustive generation.
BigCount count_matrix(std::size_t k_rows, std::uint64_t n,
                      const EnumLimits& limits = default_enum_limits());

}  // namespace colorcomp
