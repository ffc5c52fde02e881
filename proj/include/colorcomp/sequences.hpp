#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colorcomp/bigint.hpp"

namespace colorcomp {

/// Exact binomial coefficient C(n, r).
///
/// Out-of-range convention: returns 0 when r < 0, r > n, or n < 0, so every
/// closed formula evaluates on its full domain without case splits.
/// C(n, 0) = 1 for n >= 0. Results for moderate n are memoized per process.
BigCount binomial(std::int64_t n, std::int64_t r);

/// i-th Catalan number, catalan_number(0) = 1. Memoized per process.
BigCount catalan_number(std::uint64_t i);

/// Catalan triangle (ballot) number B(n, k) = (k/n) * C(2n, n+k).
/// The division is exact. Throws std::domain_error unless 1 <= k <= n.
BigCount catalan_triangle(std::uint64_t n, std::uint64_t k);

enum class FamilyKind {
  constant,         // b_i = p
  constant_shifted, // b_i = 0 for i < m, p for i >= m
  exponential,      // b_i = p^(i-1)
  linear0,          // b_i = m*(i-1)
  linear,           // b_i = m*i
  binom_row,        // b_i = C(p, i-1)
  figured,          // b_i = C(p+i-1, p)
  binom_col,        // b_i = C(i, q)
  binom_general,    // b_i = C(i+p-1, q)
  matrix,           // b_i = C(i+k_rows-1, i)
  catalan,          // b_i = c_i
  catalan_shifted,  // b_i = c_(i-1)
  custom,           // explicit finite list, zero-extended
};

std::string family_kind_name(FamilyKind kind);

/// A color sequence b = (b_1, b_2, ...): the number of types of each part
/// size. The single input selector for every counting operation.
class ColorFamily {
 public:
  /// Defaults to constant(1): ordinary (uncolored) compositions.
  ColorFamily() = default;

  static ColorFamily constant(std::uint32_t p);
  static ColorFamily constant_shifted(std::uint32_t p, std::uint32_t m);
  static ColorFamily exponential(std::uint32_t p);
  static ColorFamily linear0(std::uint32_t m);
  static ColorFamily linear(std::uint32_t m);
  static ColorFamily binom_row(std::uint32_t p);
  static ColorFamily figured(std::uint32_t p);
  static ColorFamily binom_col(std::uint32_t q);
  static ColorFamily binom_general(std::uint32_t p, std::uint32_t q);
  static ColorFamily matrix(std::uint32_t k_rows);
  static ColorFamily catalan();
  static ColorFamily catalan_shifted();
  static ColorFamily custom(std::vector<BigCount> values);

  FamilyKind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t k_rows() const { return k_rows_; }
  const std::vector<BigCount>& custom_values() const { return custom_; }

  /// b_i for i >= 1. Pure; deterministic; always >= 0.
  BigCount color_count(std::uint64_t i) const;

  /// Display name, e.g. "constant(p=2)" or "custom[2,1,1]".
  std::string name() const;

  bool operator==(const ColorFamily& other) const;
  bool operator!=(const ColorFamily& other) const { return !(*this == other); }

 private:
  FamilyKind kind_ = FamilyKind::constant;
  std::uint32_t p_ = 1;
  std::uint32_t q_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t k_rows_ = 0;
  std::vector<BigCount> custom_;
};

/// b_i of the family; free-function form of ColorFamily::color_count.
inline BigCount color_count(const ColorFamily& family, std::uint64_t i) {
  return family.color_count(i);
}

}  // namespace colorcomp
