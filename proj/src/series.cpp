#include "colorcomp/series.hpp"

#include <stdexcept>

namespace colorcomp {

TruncatedSeries TruncatedSeries::one(std::size_t degree_bound) {
  TruncatedSeries s(degree_bound);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_family(const ColorFamily& family,
                                             std::size_t degree_bound) {
  TruncatedSeries s(degree_bound);
  for (std::size_t i = 1; i <= degree_bound; ++i) s.coeffs_[i] = family.color_count(i);
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  if (degree_bound() != other.degree_bound())
    throw std::invalid_argument("series degree bounds differ: " +
                                std::to_string(degree_bound()) + " vs " +
                                std::to_string(other.degree_bound()));
  TruncatedSeries result(degree_bound());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
      if (other.coeffs_[j].is_zero()) continue;
      result.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return result;
}

TruncatedSeries TruncatedSeries::pow(std::uint64_t k) const {
  TruncatedSeries result = one(degree_bound());
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

BigCount coeff_of_power(const ColorFamily& family, std::uint64_t n, std::uint64_t k) {
  // B has valuation >= 1, so [x^n] B^k = 0 whenever k > n.
  if (k > n) return 0;
  if (k == 0) return n == 0 ? 1 : 0;
  const auto bound = static_cast<std::size_t>(n);
  return TruncatedSeries::from_family(family, bound).pow(k).coeff(bound);
}

BigCount series_total(const ColorFamily& family, std::uint64_t n) {
  const auto bound = static_cast<std::size_t>(n);
  const TruncatedSeries base = TruncatedSeries::from_family(family, bound);
  TruncatedSeries power = TruncatedSeries::one(bound);
  BigCount total = power.coeff(bound);  // the k = 0 term: [x^n] 1
  for (std::uint64_t k = 1; k <= n; ++k) {
    power = power * base;
    total += power.coeff(bound);
  }
  return total;
}

}  // namespace colorcomp
