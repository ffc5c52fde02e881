// Acceptance harness: one PASS/FAIL line per criterion, exit 0 iff all pass.
//
// Criteria 1-8 drive the library directly, re-deriving every expected value
// here (binomials, product formulas, ballot numbers) so agreement is between
// genuinely independent computations. Criterion 9 shells out to the CLI
// binary given as argv[1] and checks exit codes, JSON round-trips, and
// byte-for-byte determinism.

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "colorcomp/closed_forms.hpp"
#include "colorcomp/counting.hpp"
#include "colorcomp/enumeration.hpp"
#include "colorcomp/json_io.hpp"
#include "colorcomp/recurrence.hpp"
#include "colorcomp/sequences.hpp"
#include "colorcomp/series.hpp"
#include "colorcomp/verify.hpp"

using namespace colorcomp;

namespace {

BigCount ipow(const BigCount& base, std::uint64_t e) {
  BigCount r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Ballot number B(m, j) = (j/m) C(2m, m+j), zero outside 1 <= j <= m.
BigCount ballot(std::uint64_t m, std::uint64_t j) {
  if (j < 1 || j > m) return 0;
  const BigCount numer = BigCount(j) * binomial(static_cast<std::int64_t>(2 * m),
                                                static_cast<std::int64_t>(m + j));
  if (numer % BigCount(m) != 0) throw std::logic_error("ballot division not exact");
  return numer / BigCount(m);
}

// ---------------------------------------------------------------------------
// criterion 1: DP table, brute-force enumeration, power-series coefficients,
// and closed formulas (where defined) give identical values over the roster.
bool criterion1() {
  for (const ColorFamily& family : verification_roster()) {
    const CountTable table = build_table(family, 12);
    for (std::uint64_t n = 0; n <= 12; ++n) {
      BigCount row_sum = 0;
      for (std::uint64_t k = 0; k <= n; ++k) {
        const BigCount dp = table.cell(n, k);
        row_sum += dp;
        if (count_colored(family, n, k) != dp) return false;
        if (coeff_of_power(family, n, k) != dp) return false;
        if (n >= 1 && k >= 1) {
          const auto closed = closed_nk(family, n, k);
          if (closed && *closed != dp) return false;
        }
      }
      const BigCount& total = table.total(n);
      if (row_sum != total) return false;
      if (count_colored(family, n) != total) return false;
      if (series_total(family, n) != total) return false;
      if (n >= 1) {
        const auto closed = closed_total(family, n);
        if (closed && *closed != total) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 2: the one-part column is the color sequence itself, the diagonal
// is b_1^n, and counts vanish for k > n, for every roster family.
bool criterion2() {
  for (const ColorFamily& family : verification_roster()) {
    const CountTable table = build_table(family, 20);
    for (std::uint64_t i = 1; i <= 20; ++i)
      if (table.cell(i, 1) != family.color_count(i)) return false;
    const BigCount b1 = family.color_count(1);
    BigCount power = 1;
    for (std::uint64_t n = 1; n <= 12; ++n) {
      power *= b1;
      if (table.cell(n, n) != power) return false;
    }
    for (std::uint64_t n = 0; n <= 12; ++n)
      for (std::uint64_t k = n + 1; k <= n + 3; ++k)
        if (count_nk(family, n, k) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 3: totals product formulas, p <= 4, n <= 20:
// constant p gives p (1+p)^(n-1); exponential p gives (1+p)^(n-1).
bool criterion3() {
  for (std::uint32_t p = 1; p <= 4; ++p) {
    const ColorFamily constant = ColorFamily::constant(p);
    const ColorFamily exponential = ColorFamily::exponential(p);
    for (std::uint64_t n = 1; n <= 20; ++n) {
      const BigCount growth = ipow(BigCount(1 + p), n - 1);
      if (count_total(constant, n) != BigCount(p) * growth) return false;
      if (count_total(exponential, n) != growth) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 4: exhaustive matrix generation matches the DP for the matrix
// families, k_rows <= 3, n <= 8, with the 2x2 spot value 7.
bool criterion4() {
  for (std::size_t rows = 1; rows <= 3; ++rows) {
    const ColorFamily family = ColorFamily::matrix(static_cast<std::uint32_t>(rows));
    for (std::uint64_t n = 0; n <= 8; ++n)
      if (count_matrix(rows, n) != count_total(family, n)) return false;
  }
  return count_matrix(2, 2) == 7;
}

// ---------------------------------------------------------------------------
// criterion 5: for 1 <= p <= 5, 0 <= q <= 5, the extracted order-(q+1)
// recurrence holds for the DP totals of b_i = C(i+p-1, q) for n in [2, 40];
// extraction self-checks its two coefficient forms, and the triangle's first
// column and anchor satisfy c(0, j) = -C(p, q-j) and c(q+1, q) = 1.
bool criterion5() {
  for (std::uint32_t p = 1; p <= 5; ++p) {
    for (std::uint32_t q = 0; q <= 5; ++q) {
      RecurrenceSpec spec;
      try {
        spec = extract_coeffs(p, q);  // throws if the two forms disagree
      } catch (const std::exception&) {
        return false;
      }
      const CoeffTriangle triangle(p, q);
      for (std::uint32_t j = 0; j <= q + 1; ++j) {
        const auto r = static_cast<std::int64_t>(q) - static_cast<std::int64_t>(j);
        if (triangle.c(0, j) != -binomial(p, r)) return false;
      }
      if (triangle.c(q + 1, q) != 1) return false;
      const RecurrenceReport report =
          verify_recurrence(ColorFamily::binom_general(p, q), spec, 2, 40);
      for (const RecurrenceCheck& check : report.checks)
        if (!check.holds) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 6: the explicit p = 1 coefficient formula agrees with triangle
// extraction for q <= 6, and the q = 1 instance is the order-2 recurrence
// C(n+2) = 3 C(n+1) - C(n) governing the totals 1, 1, 3, 8, 21, 55, 144.
bool criterion6() {
  for (std::uint32_t q = 1; q <= 6; ++q)
    if (!(explicit_coeffs_p1(q) == extract_coeffs(1, q))) return false;
  const RecurrenceSpec spec = extract_coeffs(1, 1);
  if (spec.order != 2) return false;
  if (spec.coeffs != std::vector<BigInt>{BigInt(-1), BigInt(3)}) return false;
  const ColorFamily family = ColorFamily::binom_general(1, 1);  // b_i = i
  const std::vector<BigCount> expected = {1, 1, 3, 8, 21, 55, 144};
  for (std::uint64_t n = 0; n < expected.size(); ++n)
    if (count_total(family, n) != expected[n]) return false;
  return verify_recurrence(family, spec, 1, 30).passes_from_start();
}

// ---------------------------------------------------------------------------
// criterion 7: Catalan-colored counts equal (k/n) C(2n, n+k) and totals equal
// C(2n-1, n) for n <= 12; shifted-Catalan counts match the ballot-sum formula
// for 1 <= k < n <= 12, and at n = k the formula is absent while the DP
// correctly gives 1.
bool criterion7() {
  const CountTable table = build_table(ColorFamily::catalan(), 12);
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k)
      if (table.cell(n, k) != ballot(n, k)) return false;
    if (table.total(n) != binomial(static_cast<std::int64_t>(2 * n - 1),
                                   static_cast<std::int64_t>(n)))
      return false;
  }
  const ColorFamily shifted = ColorFamily::catalan_shifted();
  const CountTable shifted_table = build_table(shifted, 12);
  for (std::uint64_t n = 2; n <= 12; ++n) {
    for (std::uint64_t k = 1; k < n; ++k) {
      BigCount sum = 0;
      for (std::uint64_t i = 0; i < k; ++i)
        sum += binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(i)) *
               ballot(n - k, k - i);
      const auto closed = closed_nk(shifted, n, k);
      if (!closed || *closed != sum) return false;
      if (shifted_table.cell(n, k) != sum) return false;
    }
  }
  for (std::uint64_t n = 1; n <= 12; ++n) {
    if (closed_nk(shifted, n, n).has_value()) return false;  // boundary: absent
    if (shifted_table.cell(n, n) != 1) return false;         // the true value
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 8: the convolution identity with the corrected inner bound
// reproduces the Catalan numbers for n <= 15; with the bound as printed it
// gives 3 instead of 5 at n = 3, the documented discrepancy.
bool criterion8() {
  for (std::uint64_t n = 0; n <= 15; ++n)
    if (catalan_convolution(n, ConvolutionBound::corrected) != catalan_number(n))
      return false;
  const BigCount literal = catalan_convolution(3, ConvolutionBound::paper_literal);
  return literal == 3 && catalan_number(3) == 5;
}

// ---------------------------------------------------------------------------
// criterion 9: the CLI binary verifies cleanly (exit 0, zero failures), its
// JSON outputs parse and round-trip byte-identically, and repeated runs are
// byte-for-byte deterministic.

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_binary(const std::string& binary, const std::string& args) {
  const std::string command = "'" + binary + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {};
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
  return result;
}

bool criterion9(const std::string& binary) {
  // Full verification suite: exit 0, parseable report, zero failures,
  // byte-identical on rerun.
  const RunResult verify_first = run_binary(binary, "verify");
  if (verify_first.code != 0) return false;
  const Json report_json = Json::parse(verify_first.out, nullptr, false);
  if (report_json.is_discarded()) return false;
  if (report_json.at("failures").get<std::uint64_t>() != 0) return false;
  if (!verify_report_from_json(report_json).ok()) return false;
  const RunResult verify_second = run_binary(binary, "verify");
  if (verify_second.code != 0 || verify_second.out != verify_first.out) return false;

  // Table JSON round-trips through the typed representation byte-for-byte.
  const RunResult table_run =
      run_binary(binary, "table --family catalan --n-max 6 --format json");
  if (table_run.code != 0) return false;
  const CountTable table = table_from_json(Json::parse(table_run.out));
  if (table_to_json(table).dump(2) + "\n" != table_run.out) return false;
  if (table.total(6) != binomial(11, 6)) return false;

  // Recurrence verification report round-trips and passes.
  const RunResult rec_run =
      run_binary(binary, "recurrence --p 2 --q 2 --show verify --format json");
  if (rec_run.code != 0) return false;
  const RecurrenceReport rec = recurrence_report_from_json(Json::parse(rec_run.out));
  if (!rec.passes_from_start()) return false;
  if (recurrence_report_to_json(rec).dump(2) + "\n" != rec_run.out) return false;

  // Enumeration is deterministic and sized by the count.
  const RunResult enum_first = run_binary(binary, "enumerate --family catalan --n 3");
  const RunResult enum_second = run_binary(binary, "enumerate --family catalan --n 3");
  if (enum_first.code != 0 || enum_first.out != enum_second.out) return false;
  std::size_t lines = 0;
  for (const char c : enum_first.out)
    if (c == '\n') ++lines;
  return lines == 10;  // C(3) for the Catalan family
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_tests <path-to-colorcomp-cli>\n";
    return 2;
  }
  const std::string binary = argv[1];

  int failures = 0;
  const auto report = [&failures](int index, const std::string& description, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": "
              << description << "\n";
    if (!ok) ++failures;
  };
  const auto guard = [](auto&& fn) -> bool {
    try {
      return fn();
    } catch (const std::exception& error) {
      std::cerr << "  unexpected exception: " << error.what() << "\n";
      return false;
    }
  };

  report(1, "DP, enumeration, series, and closed formulas agree on the roster (n <= 12)",
         guard(criterion1));
  report(2, "k=1 column, diagonal powers, and k > n vanishing hold on the roster",
         guard(criterion2));
  report(3, "constant and exponential totals match their product formulas (p <= 4, n <= 20)",
         guard(criterion3));
  report(4, "exhaustive matrix generation matches the DP (k_rows <= 3, n <= 8; 2x2 gives 7)",
         guard(criterion4));
  report(5, "extracted recurrences hold for binomial-family totals (p <= 5, q <= 5, n <= 40)",
         guard(criterion5));
  report(6, "explicit p=1 coefficients match extraction (q <= 6); q=1 gives the order-2 law",
         guard(criterion6));
  report(7, "ballot-number formulas match the DP for both Catalan families (n <= 12)",
         guard(criterion7));
  report(8, "corrected convolution yields Catalan numbers (n <= 15); literal bound gives 3 at n=3",
         guard(criterion8));
  report(9, "CLI verifies cleanly with deterministic, round-trippable JSON output",
         guard([&] { return criterion9(binary); }));

  if (failures == 0) {
    std::cout << "ACCEPTANCE: all 9 criteria passed\n";
    return 0;
  }
  std::cout << "ACCEPTANCE: " << failures << " criterion(s) failed\n";
  return 1;
}
