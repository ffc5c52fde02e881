#pragma once

#include <cstdint>
#include <vector>

#include "colorcomp/sequences.hpp"

namespace colorcomp {

/// Formal power series modulo x^(N+1), exact integer coefficients.
///
/// The independent series oracle: C(n, k) is the x^n coefficient of B(x)^k
/// with B(x) = sum_{i>=1} b_i x^i, computed by convolution rather than the
/// counting recursion.
class TruncatedSeries {
 public:
  /// Zero series with the given degree bound.
  explicit TruncatedSeries(std::size_t degree_bound)
      : coeffs_(degree_bound + 1, BigCount(0)) {}

  /// The multiplicative identity 1.
  static TruncatedSeries one(std::size_t degree_bound);

  /// B(x): coeff(0) = 0, coeff(i) = b_i for 1 <= i <= N.
  static TruncatedSeries from_family(const ColorFamily& family, std::size_t degree_bound);

  std::size_t degree_bound() const { return coeffs_.size() - 1; }
  const BigCount& coeff(std::size_t i) const { return coeffs_.at(i); }
  void set_coeff(std::size_t i, BigCount value) { coeffs_.at(i) = std::move(value); }

  /// Truncated Cauchy product. Throws std::invalid_argument on mismatched
  /// degree bounds.
  TruncatedSeries operator*(const TruncatedSeries& other) const;

  /// k-th power by repeated squaring, truncated at the degree bound.
  TruncatedSeries pow(std::uint64_t k) const;

  bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

 private:
  std::vector<BigCount> coeffs_;
};

inline TruncatedSeries series_from_family(const ColorFamily& family, std::size_t N) {
  return TruncatedSeries::from_family(family, N);
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b;
}

/// [x^n] B(x)^k, the series-oracle value of C(n, k).
BigCount coeff_of_power(const ColorFamily& family, std::uint64_t n, std::uint64_t k);

/// Sum over k = 0..n of [x^n] B(x)^k, the series-oracle value of C(n).
/// Accumulates the powers incrementally rather than re-exponentiating.
BigCount series_total(const ColorFamily& family, std::uint64_t n);

}  // namespace colorcomp
