#include "colorcomp/recurrence.hpp"

#include <stdexcept>
#include <string>

#include "colorcomp/counting.hpp"

namespace colorcomp {

CoeffTriangle::CoeffTriangle(std::uint32_t p, std::uint32_t q) : p_(p), q_(q) {
  if (p < 1) throw std::invalid_argument("triangle requires p >= 1");
  const auto sp = static_cast<std::int64_t>(p);
  const auto sq = static_cast<std::int64_t>(q);

  rows_.resize(q + 2);
  rows_[0] = {-BigInt(binomial(sp, sq)), BigInt(1)};
  for (std::size_t j = 0; j <= q; ++j) {
    const auto& prev = rows_[j];
    auto& next = rows_[j + 1];
    next.resize(j + 3);
    next[0] = -prev[0] - binomial(sp + 1, sq - static_cast<std::int64_t>(j));
    for (std::size_t i = 1; i <= j + 1; ++i) next[i] = prev[i - 1] - prev[i];
    next[j + 2] = prev[j + 1];
  }
}

const BigInt& CoeffTriangle::c(std::size_t i, std::size_t j) const {
  if (j >= rows_.size() || i >= rows_[j].size())
    throw std::out_of_range("triangle index (i=" + std::to_string(i) +
                            ", j=" + std::to_string(j) + ") out of range");
  return rows_[j][i];
}

RecurrenceSpec extract_coeffs(std::uint32_t p, std::uint32_t q) {
  const CoeffTriangle triangle(p, q);
  RecurrenceSpec spec;
  spec.order = q + 1;
  spec.start_index = 2;
  spec.coeffs.resize(q + 1);
  for (std::size_t i = 0; i <= q; ++i) {
    spec.coeffs[i] = -triangle.c(i + 1, q + 1);
    const BigInt alt = triangle.c(i + 1, q) - triangle.c(i, q);
    if (spec.coeffs[i] != alt)
      throw std::logic_error("coefficient self-check failed at i=" + std::to_string(i) +
                             " (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                             "): " + spec.coeffs[i].str() + " vs " + alt.str());
  }
  return spec;
}

RecurrenceSpec explicit_coeffs_p1(std::uint32_t q) {
  if (q < 1) throw std::invalid_argument("explicit_coeffs_p1 requires q >= 1");
  RecurrenceSpec spec;
  spec.order = q + 1;
  spec.start_index = 2;
  spec.coeffs.resize(q + 1);
  const auto sq = static_cast<std::int64_t>(q);
  for (std::int64_t i = 0; i <= sq; ++i) {
    BigInt m = binomial(sq + 1, i);
    if ((i + sq) % 2 != 0) m = -m;
    if (i == 1) m += 1;
    spec.coeffs[static_cast<std::size_t>(i)] = std::move(m);
  }
  return spec;
}

bool RecurrenceReport::passes_from_start() const {
  for (const auto& check : checks)
    if (check.n >= spec.start_index && !check.holds) return false;
  return true;
}

RecurrenceReport verify_recurrence(const ColorFamily& family, const RecurrenceSpec& spec,
                                   std::uint64_t n_lo, std::uint64_t n_hi) {
  if (n_hi < n_lo) throw std::invalid_argument("verify_recurrence requires n_hi >= n_lo");
  if (spec.coeffs.size() != spec.order)
    throw std::invalid_argument("recurrence spec has " + std::to_string(spec.coeffs.size()) +
                                " coefficients for order " + std::to_string(spec.order));

  RecurrenceReport report;
  report.spec = spec;
  const auto table = build_table(family, n_hi + spec.order);
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    BigInt rhs = 0;
    for (std::size_t i = 0; i < spec.order; ++i)
      rhs += spec.coeffs[i] * BigInt(table.total(n + i));
    report.checks.push_back({n, rhs == BigInt(table.total(n + spec.order))});
  }
  for (auto it = report.checks.rbegin(); it != report.checks.rend(); ++it) {
    if (!it->holds) break;
    report.earliest_valid = it->n;
  }
  return report;
}

}  // namespace colorcomp
