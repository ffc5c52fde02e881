#include "colorcomp/closed_forms.hpp"

#include <stdexcept>

#include "colorcomp/counting.hpp"

namespace colorcomp {

namespace {

BigCount pow_big(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

// B(n, k) extended by zero outside 1 <= k <= n; the formulas' sums run over
// index ranges where the triangle is only partially defined.
BigCount ballot_ext(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return catalan_triangle(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

}  // namespace

std::optional<BigCount> closed_nk(const ColorFamily& family, std::uint64_t n,
                                  std::uint64_t k) {
  if (n < 1 || k < 1 || k > n) return std::nullopt;
  const auto sn = static_cast<std::int64_t>(n);
  const auto sk = static_cast<std::int64_t>(k);
  switch (family.kind()) {
    case FamilyKind::constant:
      return pow_big(family.p(), k) * binomial(sn - 1, sk - 1);
    case FamilyKind::constant_shifted: {
      const std::int64_t m = family.m();
      return pow_big(family.p(), k) * binomial(sn - (m - 1) * sk - 1, sk - 1);
    }
    case FamilyKind::exponential:
      return pow_big(family.p(), n - k) * binomial(sn - 1, sk - 1);
    case FamilyKind::linear0:
      return pow_big(family.m(), k) * binomial(sn - 1, 2 * sk - 1);
    case FamilyKind::linear:
      return pow_big(family.m(), k) * binomial(sn + sk - 1, 2 * sk - 1);
    case FamilyKind::binom_row:
      return binomial(static_cast<std::int64_t>(family.p()) * sk, sn - sk);
    case FamilyKind::figured: {
      const std::int64_t p = family.p();
      return binomial(sn + p * sk - 1, p * sk + sk - 1);
    }
    case FamilyKind::binom_col: {
      const std::int64_t q = family.q();
      return binomial(sn + sk - 1, q * sk + sk - 1);
    }
    case FamilyKind::catalan:
      return catalan_triangle(n, k);
    case FamilyKind::catalan_shifted: {
      if (n == k) return std::nullopt;  // boundary case, see header
      BigCount sum = 0;
      for (std::int64_t i = 0; i <= sk - 1; ++i)
        sum += binomial(sk, i) * ballot_ext(sn - sk, sk - i);
      return sum;
    }
    case FamilyKind::binom_general:
    case FamilyKind::matrix:
    case FamilyKind::custom:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<BigCount> closed_total(const ColorFamily& family, std::uint64_t n) {
  if (n < 1) return std::nullopt;
  const auto sn = static_cast<std::int64_t>(n);
  switch (family.kind()) {
    case FamilyKind::constant:
      return BigCount(family.p()) * pow_big(1 + family.p(), n - 1);
    case FamilyKind::constant_shifted: {
      const std::int64_t m = family.m();
      BigCount sum = 0;
      for (std::int64_t k = 1; k <= sn; ++k)
        sum += binomial(sn - (m - 1) * k - 1, k - 1) * pow_big(family.p(), k);
      return sum;
    }
    case FamilyKind::exponential:
      return pow_big(1 + family.p(), n - 1);
    case FamilyKind::linear0: {
      BigCount sum = 0;
      for (std::int64_t k = 1; k <= sn; ++k)
        sum += binomial(sn - 1, 2 * k - 1) * pow_big(family.m(), k);
      return sum;
    }
    case FamilyKind::linear: {
      BigCount sum = 0;
      for (std::int64_t k = 1; k <= sn; ++k)
        sum += binomial(sn + k - 1, 2 * k - 1) * pow_big(family.m(), k);
      return sum;
    }
    case FamilyKind::binom_row: {
      const std::int64_t p = family.p();
      BigCount sum = 0;
      for (std::int64_t k = 1; k <= sn; ++k) sum += binomial(p * k, sn - k);
      return sum;
    }
    case FamilyKind::binom_col: {
      const std::int64_t q = family.q();
      BigCount sum = 0;
      for (std::int64_t k = 1; k <= sn; ++k) sum += binomial(sn + k - 1, q * k + k - 1);
      return sum;
    }
    case FamilyKind::catalan:
      return binomial(2 * sn - 1, sn);
    case FamilyKind::catalan_shifted:
      return catalan_number(n);
    case FamilyKind::figured:
    case FamilyKind::binom_general:
    case FamilyKind::matrix:
    case FamilyKind::custom:
      return std::nullopt;
  }
  return std::nullopt;
}

BigCount catalan_convolution(std::uint64_t n, ConvolutionBound bound) {
  // n = 0 gives the bare leading 1, matching c_0.
  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t i_lo = bound == ConvolutionBound::corrected ? 0 : 1;
  BigCount sum = 1;
  for (std::int64_t k = 1; k <= sn - 1; ++k)
    for (std::int64_t i = i_lo; i <= k - 1; ++i)
      sum += binomial(k, i) * ballot_ext(sn - k, k - i);
  return sum;
}

BigCount weak_composition_count(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || n < k)
    throw std::invalid_argument("weak_composition_count requires n >= k >= 1");
  return count_nk(ColorFamily::catalan_shifted(), n, k);
}

}  // namespace colorcomp
