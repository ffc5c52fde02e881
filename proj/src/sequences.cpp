#include "colorcomp/sequences.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace colorcomp {

BigInt bigint_from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bare '-' is not an integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("invalid integer literal: " + text);
  }
  return BigInt(text);
}

namespace {

// Memo caches. Binomials up to this n are kept as Pascal rows; larger n fall
// back to the uncached multiplicative product.
constexpr std::int64_t kPascalCacheMaxN = 2048;

std::mutex g_pascal_mutex;
std::vector<std::vector<BigCount>> g_pascal_rows;  // row n holds C(n, 0..n)

std::mutex g_catalan_mutex;
std::vector<BigCount> g_catalan;

// Exact product form: C(n, r) = prod_{i=1..r} (n-r+i)/i, each division exact.
BigCount binomial_product(std::int64_t n, std::int64_t r) {
  BigCount result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

}  // namespace

BigCount binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  if (r == 0) return 1;
  if (n > kPascalCacheMaxN) return binomial_product(n, r);

  std::lock_guard<std::mutex> lock(g_pascal_mutex);
  if (g_pascal_rows.empty()) g_pascal_rows.push_back({BigCount(1)});
  while (static_cast<std::int64_t>(g_pascal_rows.size()) <= n) {
    const auto& prev = g_pascal_rows.back();
    std::vector<BigCount> row(prev.size() + 1, BigCount(1));
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    g_pascal_rows.push_back(std::move(row));
  }
  return g_pascal_rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

BigCount catalan_number(std::uint64_t i) {
  std::lock_guard<std::mutex> lock(g_catalan_mutex);
  while (g_catalan.size() <= i) {
    const auto n = static_cast<std::int64_t>(g_catalan.size());
    // c_n = C(2n, n) - C(2n, n+1)
    g_catalan.push_back(binomial(2 * n, n) - binomial(2 * n, n + 1));
  }
  return g_catalan[i];
}

BigCount catalan_triangle(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k > n)
    throw std::domain_error("catalan_triangle requires 1 <= k <= n, got n=" +
                            std::to_string(n) + " k=" + std::to_string(k));
  const auto sn = static_cast<std::int64_t>(n);
  const auto sk = static_cast<std::int64_t>(k);
  BigCount numerator = sk * binomial(2 * sn, sn + sk);
  BigCount quotient = numerator / sn;
  if (quotient * sn != numerator)
    throw std::logic_error("catalan_triangle: inexact division at n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
  return quotient;
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::constant: return "constant";
    case FamilyKind::constant_shifted: return "constant_shifted";
    case FamilyKind::exponential: return "exponential";
    case FamilyKind::linear0: return "linear0";
    case FamilyKind::linear: return "linear";
    case FamilyKind::binom_row: return "binom_row";
    case FamilyKind::figured: return "figured";
    case FamilyKind::binom_col: return "binom_col";
    case FamilyKind::binom_general: return "binom_general";
    case FamilyKind::matrix: return "matrix";
    case FamilyKind::catalan: return "catalan";
    case FamilyKind::catalan_shifted: return "catalan_shifted";
    case FamilyKind::custom: return "custom";
  }
  throw std::logic_error("unknown family kind");
}

namespace {

void require_positive(std::uint32_t value, const char* name, const char* family) {
  if (value < 1)
    throw std::invalid_argument(std::string(family) + " requires " + name + " >= 1");
}

}  // namespace

ColorFamily ColorFamily::constant(std::uint32_t p) {
  require_positive(p, "p", "constant");
  ColorFamily f;
  f.kind_ = FamilyKind::constant;
  f.p_ = p;
  return f;
}

ColorFamily ColorFamily::constant_shifted(std::uint32_t p, std::uint32_t m) {
  require_positive(p, "p", "constant_shifted");
  require_positive(m, "m", "constant_shifted");
  ColorFamily f;
  f.kind_ = FamilyKind::constant_shifted;
  f.p_ = p;
  f.m_ = m;
  return f;
}

ColorFamily ColorFamily::exponential(std::uint32_t p) {
  require_positive(p, "p", "exponential");
  ColorFamily f;
  f.kind_ = FamilyKind::exponential;
  f.p_ = p;
  return f;
}

ColorFamily ColorFamily::linear0(std::uint32_t m) {
  require_positive(m, "m", "linear0");
  ColorFamily f;
  f.kind_ = FamilyKind::linear0;
  f.m_ = m;
  return f;
}

ColorFamily ColorFamily::linear(std::uint32_t m) {
  require_positive(m, "m", "linear");
  ColorFamily f;
  f.kind_ = FamilyKind::linear;
  f.m_ = m;
  return f;
}

ColorFamily ColorFamily::binom_row(std::uint32_t p) {
  require_positive(p, "p", "binom_row");
  ColorFamily f;
  f.kind_ = FamilyKind::binom_row;
  f.p_ = p;
  return f;
}

ColorFamily ColorFamily::figured(std::uint32_t p) {
  require_positive(p, "p", "figured");
  ColorFamily f;
  f.kind_ = FamilyKind::figured;
  f.p_ = p;
  return f;
}

ColorFamily ColorFamily::binom_col(std::uint32_t q) {
  require_positive(q, "q", "binom_col");
  ColorFamily f;
  f.kind_ = FamilyKind::binom_col;
  f.q_ = q;
  return f;
}

// q = 0 is accepted (b_i = 1 for every i), matching the recurrence
// machinery's order-1 case.
ColorFamily ColorFamily::binom_general(std::uint32_t p, std::uint32_t q) {
  require_positive(p, "p", "binom_general");
  ColorFamily f;
  f.kind_ = FamilyKind::binom_general;
  f.p_ = p;
  f.q_ = q;
  return f;
}

ColorFamily ColorFamily::matrix(std::uint32_t k_rows) {
  require_positive(k_rows, "k_rows", "matrix");
  ColorFamily f;
  f.kind_ = FamilyKind::matrix;
  f.k_rows_ = k_rows;
  return f;
}

ColorFamily ColorFamily::catalan() {
  ColorFamily f;
  f.kind_ = FamilyKind::catalan;
  return f;
}

ColorFamily ColorFamily::catalan_shifted() {
  ColorFamily f;
  f.kind_ = FamilyKind::catalan_shifted;
  return f;
}

ColorFamily ColorFamily::custom(std::vector<BigCount> values) {
  for (const auto& v : values) {
    if (v < 0) throw std::invalid_argument("custom sequence values must be >= 0");
  }
  ColorFamily f;
  f.kind_ = FamilyKind::custom;
  f.custom_ = std::move(values);
  return f;
}

BigCount ColorFamily::color_count(std::uint64_t i) const {
  if (i < 1) throw std::invalid_argument("color_count requires i >= 1");
  const auto si = static_cast<std::int64_t>(i);
  switch (kind_) {
    case FamilyKind::constant:
      return p_;
    case FamilyKind::constant_shifted:
      return i >= m_ ? BigCount(p_) : BigCount(0);
    case FamilyKind::exponential:
      return boost::multiprecision::pow(BigCount(p_), static_cast<unsigned>(i - 1));
    case FamilyKind::linear0:
      return BigCount(m_) * (si - 1);
    case FamilyKind::linear:
      return BigCount(m_) * si;
    case FamilyKind::binom_row:
      return binomial(p_, si - 1);
    case FamilyKind::figured:
      return binomial(p_ + si - 1, p_);
    case FamilyKind::binom_col:
      return binomial(si, q_);
    case FamilyKind::binom_general:
      return binomial(si + p_ - 1, q_);
    case FamilyKind::matrix:
      return binomial(si + k_rows_ - 1, si);
    case FamilyKind::catalan:
      return catalan_number(i);
    case FamilyKind::catalan_shifted:
      return catalan_number(i - 1);
    case FamilyKind::custom:
      return i <= custom_.size() ? custom_[i - 1] : BigCount(0);
  }
  throw std::logic_error("unknown family kind");
}

std::string ColorFamily::name() const {
  std::ostringstream out;
  out << family_kind_name(kind_);
  switch (kind_) {
    case FamilyKind::constant:
    case FamilyKind::exponential:
    case FamilyKind::binom_row:
    case FamilyKind::figured:
      out << "(p=" << p_ << ")";
      break;
    case FamilyKind::constant_shifted:
      out << "(p=" << p_ << ",m=" << m_ << ")";
      break;
    case FamilyKind::linear0:
    case FamilyKind::linear:
      out << "(m=" << m_ << ")";
      break;
    case FamilyKind::binom_col:
      out << "(q=" << q_ << ")";
      break;
    case FamilyKind::binom_general:
      out << "(p=" << p_ << ",q=" << q_ << ")";
      break;
    case FamilyKind::matrix:
      out << "(k_rows=" << k_rows_ << ")";
      break;
    case FamilyKind::catalan:
    case FamilyKind::catalan_shifted:
      break;
    case FamilyKind::custom: {
      out << "[";
      for (std::size_t i = 0; i < custom_.size(); ++i) {
        if (i) out << ",";
        out << custom_[i].str();
      }
      out << "]";
      break;
    }
  }
  return out.str();
}

bool ColorFamily::operator==(const ColorFamily& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && q_ == other.q_ &&
         m_ == other.m_ && k_rows_ == other.k_rows_ && custom_ == other.custom_;
}

}  // namespace colorcomp
