#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colorcomp/sequences.hpp"

namespace colorcomp {

/// Pascal-like signed triangle c(i, j) for b_i = C(i+p-1, q), rows
/// j = 0..q+1 with entries i = 0..j+1. Row j+1 follows from row j by
///   c(0, j+1)   = -c(0, j) - C(p+1, q-j)
///   c(i, j+1)   =  c(i-1, j) - c(i, j)      (1 <= i <= j+1)
///   c(j+2, j+1) =  c(j+1, j)
/// seeded with c(0,0) = -C(p, q), c(1,0) = 1. The order-(q+1) recurrence
/// coefficients are read off the last row.
class CoeffTriangle {
 public:
  /// q = 0 is accepted and yields the order-1 recurrence.
  CoeffTriangle(std::uint32_t p, std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }
  /// Number of rows, q+2 (rows j = 0..q+1).
  std::size_t rows() const { return rows_.size(); }

  /// c(i, j); throws std::out_of_range outside 0 <= j <= q+1, 0 <= i <= j+1.
  const BigInt& c(std::size_t i, std::size_t j) const;

  const std::vector<std::vector<BigInt>>& row_data() const { return rows_; }

 private:
  std::uint32_t p_;
  std::uint32_t q_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[j][i]
};

/// Order-(q+1) constant-coefficient linear recurrence
/// C(n + order) = sum_{i=0..order-1} coeffs[i] * C(n + i), asserted for
/// n >= start_index.
struct RecurrenceSpec {
  std::size_t order = 1;
  std::vector<BigInt> coeffs;  // m_0..m_q
  std::uint64_t start_index = 2;

  bool operator==(const RecurrenceSpec&) const = default;
};

inline CoeffTriangle build_triangle(std::uint32_t p, std::uint32_t q) {
  return CoeffTriangle(p, q);
}

/// Reads m_i = -c(i+1, q+1) off the triangle. Also evaluates the equivalent
/// form m_i = c(i+1, q) - c(i, q) and throws std::logic_error if the two
/// disagree (they are forced equal by the row recurrence).
RecurrenceSpec extract_coeffs(std::uint32_t p, std::uint32_t q);

/// Explicit p = 1 coefficients: m_i = (-1)^(i+q) C(q+1, i), plus 1 folded
/// into the i = 1 coefficient. Equals extract_coeffs(1, q). Requires q >= 1.
RecurrenceSpec explicit_coeffs_p1(std::uint32_t q);

struct RecurrenceCheck {
  std::uint64_t n = 0;
  bool holds = false;
  bool operator==(const RecurrenceCheck&) const = default;
};

struct RecurrenceReport {
  RecurrenceSpec spec;
  std::vector<RecurrenceCheck> checks;  // one per n in [n_lo, n_hi]
  /// Smallest n in range from which the recurrence holds through n_hi.
  std::optional<std::uint64_t> earliest_valid;

  /// True when every n >= spec.start_index in the checked range holds.
  bool passes_from_start() const;
  bool operator==(const RecurrenceReport&) const = default;
};

/// Checks C(n + order) = sum coeffs[i] C(n + i) against DP totals of the
/// family for every n in [n_lo, n_hi].
RecurrenceReport verify_recurrence(const ColorFamily& family, const RecurrenceSpec& spec,
                                   std::uint64_t n_lo, std::uint64_t n_hi);

}  // namespace colorcomp
