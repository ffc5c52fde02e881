#include "colorcomp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "colorcomp/closed_forms.hpp"
#include "colorcomp/counting.hpp"
#include "colorcomp/enumeration.hpp"
#include "colorcomp/errors.hpp"
#include "colorcomp/json_io.hpp"
#include "colorcomp/recurrence.hpp"
#include "colorcomp/series.hpp"
#include "colorcomp/verify.hpp"

namespace colorcomp {

namespace {

std::vector<BigCount> parse_b_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open --b-file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first])))
    ++first;

  std::vector<BigCount> values;
  if (first < text.size() && text[first] == '[') {
    Json array = Json::parse(text);
    if (!array.is_array())
      throw std::invalid_argument("--b-file JSON must be an array: " + path);
    for (const auto& element : array) {
      if (element.is_number_unsigned())
        values.emplace_back(element.get<std::uint64_t>());
      else if (element.is_number_integer())
        values.emplace_back(element.get<std::int64_t>());
      else if (element.is_string())
        values.push_back(bigint_from_decimal(element.get<std::string>()));
      else
        throw std::invalid_argument("--b-file entries must be integers or decimal "
                                    "strings: " + element.dump());
    }
  } else {
    // Plain text: whitespace-separated decimal integers, '#' starts a comment.
    std::string stripped;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      const auto hash = line.find('#');
      stripped += line.substr(0, hash);
      stripped += '\n';
    }
    std::istringstream tokens(stripped);
    for (std::string token; tokens >> token;)
      values.push_back(bigint_from_decimal(token));
  }
  return values;
}

/// The shared `--family ... --p ... --b-file ...` flag group. Resolution is
/// strict: a flag the named family does not use is a diagnosed error, not
/// silently ignored.
struct FamilyFlags {
  std::string family;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> k_rows;
  std::string b_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "color family: constant, constant_shifted, exponential, linear0, "
                    "linear, binom_row, figured, binom_col, binom_general, matrix, "
                    "catalan, catalan_shifted, custom")
        ->required();
    cmd->add_option("--p", p, "family parameter p");
    cmd->add_option("--q", q, "family parameter q");
    cmd->add_option("--m", m, "family parameter m");
    cmd->add_option("--k-rows", k_rows, "number of matrix rows");
    cmd->add_option("--b-file", b_file,
                    "color sequence file for --family custom: a JSON array or "
                    "whitespace-separated decimal integers ('#' comments), first "
                    "value is b_1");
  }

  std::uint32_t need(const std::optional<std::int64_t>& value, const char* flag) const {
    if (!value)
      throw std::invalid_argument("family " + family + " requires " + flag);
    if (*value < 0 || *value > std::numeric_limits<std::uint32_t>::max())
      throw std::invalid_argument(std::string(flag) + " is out of range: " +
                                  std::to_string(*value));
    return static_cast<std::uint32_t>(*value);
  }

  void reject(const std::optional<std::int64_t>& value, const char* flag) const {
    if (value)
      throw std::invalid_argument("family " + family + " does not take " + flag);
  }

  ColorFamily resolve() const {
    if (!b_file.empty() && family != "custom")
      throw std::invalid_argument("family " + family + " does not take --b-file");
    if (family == "constant") {
      reject(q, "--q"), reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::constant(need(p, "--p"));
    }
    if (family == "constant_shifted") {
      reject(q, "--q"), reject(k_rows, "--k-rows");
      return ColorFamily::constant_shifted(need(p, "--p"), need(m, "--m"));
    }
    if (family == "exponential") {
      reject(q, "--q"), reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::exponential(need(p, "--p"));
    }
    if (family == "linear0") {
      reject(p, "--p"), reject(q, "--q"), reject(k_rows, "--k-rows");
      return ColorFamily::linear0(need(m, "--m"));
    }
    if (family == "linear") {
      reject(p, "--p"), reject(q, "--q"), reject(k_rows, "--k-rows");
      return ColorFamily::linear(need(m, "--m"));
    }
    if (family == "binom_row") {
      reject(q, "--q"), reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::binom_row(need(p, "--p"));
    }
    if (family == "figured") {
      reject(q, "--q"), reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::figured(need(p, "--p"));
    }
    if (family == "binom_col") {
      reject(p, "--p"), reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::binom_col(need(q, "--q"));
    }
    if (family == "binom_general") {
      reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::binom_general(need(p, "--p"), need(q, "--q"));
    }
    if (family == "matrix") {
      reject(p, "--p"), reject(q, "--q"), reject(m, "--m");
      return ColorFamily::matrix(need(k_rows, "--k-rows"));
    }
    if (family == "catalan") {
      reject(p, "--p"), reject(q, "--q"), reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::catalan();
    }
    if (family == "catalan_shifted") {
      reject(p, "--p"), reject(q, "--q"), reject(m, "--m"), reject(k_rows, "--k-rows");
      return ColorFamily::catalan_shifted();
    }
    if (family == "custom") {
      reject(p, "--p"), reject(q, "--q"), reject(m, "--m"), reject(k_rows, "--k-rows");
      if (b_file.empty())
        throw std::invalid_argument("family custom requires --b-file");
      return ColorFamily::custom(parse_b_file(b_file));
    }
    throw std::invalid_argument("unknown family: " + family);
  }
};

std::string json_line(const Json& j) { return j.dump(); }

void dump_json(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

BigCount oracle_value(const ColorFamily& family, std::uint64_t n,
                      std::optional<std::uint64_t> k, const std::string& oracle) {
  if (oracle == "dp") return k ? count_nk(family, n, *k) : count_total(family, n);
  if (oracle == "enum") return count_colored(family, n, k);
  if (oracle == "series") {
    // The series convolution has no cap of its own; mirror the DP cap so a
    // huge --n fails loudly instead of allocating O(n^2) big integers.
    if (n > max_table_size())
      throw CapExceededError("series degree " + std::to_string(n) + " exceeds cap " +
                             std::to_string(max_table_size()) +
                             " (set COLORCOMP_MAX_N to raise)");
    return k ? coeff_of_power(family, n, *k) : series_total(family, n);
  }
  // closed
  const auto value = k ? closed_nk(family, n, *k) : closed_total(family, n);
  if (!value)
    throw std::invalid_argument("no closed formula for " + family.name() +
                                (k ? " at n=" + std::to_string(n) + ", k=" + std::to_string(*k)
                                   : " totals at n=" + std::to_string(n)));
  return *value;
}

int cmd_count(const FamilyFlags& flags, std::int64_t n, std::optional<std::int64_t> k,
              const std::string& oracle, std::ostream& out) {
  const ColorFamily family = flags.resolve();
  std::optional<std::uint64_t> uk;
  if (k) uk = static_cast<std::uint64_t>(*k);
  out << to_decimal(oracle_value(family, static_cast<std::uint64_t>(n), uk, oracle))
      << "\n";
  return 0;
}

void print_text_table(const CountTable& table, std::ostream& out) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"n"};
  for (std::size_t k = 1; k <= table.n_max; ++k)
    header.push_back("k=" + std::to_string(k));
  header.push_back("total");
  grid.push_back(std::move(header));
  for (std::size_t n = 1; n <= table.n_max; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t k = 1; k <= table.n_max; ++k)
      row.push_back(k <= n ? to_decimal(table.cells[n][k]) : std::string());
    row.push_back(to_decimal(table.totals[n]));
    grid.push_back(std::move(row));
  }

  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << "\n";
  }
}

void print_csv_table(const CountTable& table, std::ostream& out) {
  out << "n";
  for (std::size_t k = 1; k <= table.n_max; ++k) out << ",k=" << k;
  out << ",total\n";
  for (std::size_t n = 1; n <= table.n_max; ++n) {
    out << n;
    for (std::size_t k = 1; k <= table.n_max; ++k)
      out << "," << (k <= n ? to_decimal(table.cells[n][k]) : std::string());
    out << "," << to_decimal(table.totals[n]) << "\n";
  }
}

int cmd_table(const FamilyFlags& flags, std::int64_t n_max, const std::string& format,
              std::ostream& out) {
  const CountTable table = build_table(flags.resolve(), static_cast<std::size_t>(n_max));
  if (format == "json")
    dump_json(table_to_json(table), out);
  else if (format == "csv")
    print_csv_table(table, out);
  else
    print_text_table(table, out);
  return 0;
}

int cmd_enumerate(const FamilyFlags& flags, std::int64_t n, std::optional<std::int64_t> k,
                  std::optional<std::uint64_t> limit, std::ostream& out) {
  const ColorFamily family = flags.resolve();
  const auto un = static_cast<std::uint64_t>(n);
  std::optional<std::uint64_t> uk;
  if (k) uk = static_cast<std::uint64_t>(*k);

  EnumLimits limits = default_enum_limits();
  // With an explicit --limit at or under the item cap, the output is bounded
  // by the limit itself, so the full-stream size estimate no longer applies.
  if (limit && *limit <= limits.max_items)
    limits.max_items = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t remaining = limit.value_or(std::numeric_limits<std::uint64_t>::max());
  if (remaining == 0) return 0;

  if (family.kind() == FamilyKind::matrix) {
    enumerate_matrix(family.k_rows(), un, [&](const MatrixComposition& item) {
      if (uk && item.columns.size() != *uk) return true;
      out << json_line(matrix_to_json(item)) << "\n";
      return --remaining != 0;
    }, limits);
  } else {
    enumerate_colored(family, un, uk, [&](const ColoredComposition& item) {
      out << json_line(colored_to_json(item)) << "\n";
      return --remaining != 0;
    }, limits);
  }
  return 0;
}

int cmd_closed(const FamilyFlags& flags, std::int64_t n, std::optional<std::int64_t> k,
               const std::string& format, std::ostream& out) {
  const ColorFamily family = flags.resolve();
  const auto un = static_cast<std::uint64_t>(n);
  const auto value = k ? closed_nk(family, un, static_cast<std::uint64_t>(*k))
                       : closed_total(family, un);
  if (format == "json") {
    Json j;
    j["family"] = family_to_json(family);
    j["n"] = un;
    if (k) j["k"] = static_cast<std::uint64_t>(*k);
    j["value"] = value ? Json(to_decimal(*value)) : Json(nullptr);
    dump_json(j, out);
  } else {
    out << (value ? to_decimal(*value) : std::string("absent")) << "\n";
  }
  return 0;
}

void print_coeff_list(const RecurrenceSpec& spec, std::ostream& out) {
  out << "[";
  for (std::size_t i = 0; i < spec.coeffs.size(); ++i) {
    if (i) out << ", ";
    out << to_decimal(spec.coeffs[i]);
  }
  out << "]\n";
}

int cmd_recurrence(std::int64_t p, std::int64_t q, const std::string& show,
                   std::int64_t n_lo, std::int64_t n_hi, const std::string& format,
                   std::ostream& out) {
  const auto up = static_cast<std::uint32_t>(p);
  const auto uq = static_cast<std::uint32_t>(q);
  if (show == "triangle") {
    const CoeffTriangle triangle(up, uq);
    if (format == "json") {
      dump_json(triangle_to_json(triangle), out);
    } else {
      for (const auto& row : triangle.row_data()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << " ";
          out << to_decimal(row[i]);
        }
        out << "\n";
      }
    }
    return 0;
  }
  if (show == "coeffs") {
    const RecurrenceSpec spec = extract_coeffs(up, uq);
    if (format == "json") {
      dump_json(recurrence_spec_to_json(spec), out);
    } else {
      print_coeff_list(spec, out);
      out << "order " << spec.order << "\n";
    }
    return 0;
  }
  // show == "verify"
  if (n_hi < n_lo) throw std::invalid_argument("--n-hi must be >= --n-lo");
  const RecurrenceSpec spec = extract_coeffs(up, uq);
  const RecurrenceReport report =
      verify_recurrence(ColorFamily::binom_general(up, uq), spec,
                        static_cast<std::uint64_t>(n_lo), static_cast<std::uint64_t>(n_hi));
  const bool passed = report.passes_from_start();
  if (format == "json") {
    dump_json(recurrence_report_to_json(report), out);
  } else {
    out << "coefficients ";
    print_coeff_list(spec, out);
    out << "order " << spec.order << "\n";
    std::vector<std::uint64_t> failing;
    for (const auto& check : report.checks)
      if (!check.holds) failing.push_back(check.n);
    if (failing.empty()) {
      out << "holds for all n in [" << n_lo << ", " << n_hi << "]\n";
    } else {
      out << "fails at n =";
      for (const auto n : failing) out << " " << n;
      out << "\n";
    }
    if (report.earliest_valid)
      out << "earliest valid n in range: " << *report.earliest_valid << "\n";
  }
  return passed ? 0 : 1;
}

int cmd_verify(const std::optional<std::string>& only,
               std::optional<std::int64_t> n_max, const std::string& bound,
               const std::string& format, std::ostream& out) {
  VerifyOptions options;
  options.only = only;
  if (n_max) options.n_max = static_cast<std::uint64_t>(*n_max);
  options.bound = bound == "corrected" ? ConvolutionBound::corrected
                                       : ConvolutionBound::paper_literal;
  const VerifyReport report = run_verification(options);
  if (format == "text") {
    for (const auto& check : report.checks)
      out << check.status << "  " << check.name << "  " << check.detail << "\n";
    out << report.checks.size() << " checks, " << report.failures() << " failures\n";
  } else {
    dump_json(verify_report_to_json(report), out);
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact counting, enumeration, and cross-validation of generalized "
               "(colored) integer compositions with a fixed number of parts"};
  app.name("colorcomp");
  app.require_subcommand(1);

  int exit_code = 0;

  // count / total
  auto* count_cmd =
      app.add_subcommand("count", "number of compositions of n (with --k: exactly k parts)");
  FamilyFlags count_family;
  count_family.attach(count_cmd);
  std::int64_t count_n = 0;
  std::optional<std::int64_t> count_k;
  std::string count_oracle = "dp";
  count_cmd->add_option("--n", count_n, "target sum")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--k", count_k, "number of parts")->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--oracle", count_oracle, "computation path (default dp)")
      ->check(CLI::IsMember({"dp", "enum", "series", "closed"}));
  count_cmd->callback(
      [&] { exit_code = cmd_count(count_family, count_n, count_k, count_oracle, out); });

  auto* total_cmd = app.add_subcommand("total", "number of compositions of n over all k");
  FamilyFlags total_family;
  total_family.attach(total_cmd);
  std::int64_t total_n = 0;
  std::string total_oracle = "dp";
  total_cmd->add_option("--n", total_n, "target sum")
      ->required()
      ->check(CLI::NonNegativeNumber);
  total_cmd->add_option("--oracle", total_oracle, "computation path (default dp)")
      ->check(CLI::IsMember({"dp", "enum", "series", "closed"}));
  total_cmd->callback([&] {
    exit_code = cmd_count(total_family, total_n, std::nullopt, total_oracle, out);
  });

  // table
  auto* table_cmd = app.add_subcommand("table", "triangle of C(n,k) with a totals column");
  FamilyFlags table_family;
  table_family.attach(table_cmd);
  std::int64_t table_n_max = 0;
  std::string table_format = "text";
  table_cmd->add_option("--n-max", table_n_max, "largest n")
      ->required()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--format", table_format, "text, json, or csv (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  table_cmd->callback(
      [&] { exit_code = cmd_table(table_family, table_n_max, table_format, out); });

  // enumerate
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "stream compositions as JSON lines, lexicographic order");
  FamilyFlags enum_family;
  enum_family.attach(enum_cmd);
  std::int64_t enum_n = 0;
  std::optional<std::int64_t> enum_k;
  std::optional<std::uint64_t> enum_limit;
  enum_cmd->add_option("--n", enum_n, "target sum")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--k", enum_k, "number of parts (columns for matrix)")
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--limit", enum_limit, "stop after this many items");
  enum_cmd->callback(
      [&] { exit_code = cmd_enumerate(enum_family, enum_n, enum_k, enum_limit, out); });

  // closed
  auto* closed_cmd = app.add_subcommand(
      "closed", "closed-formula value; prints 'absent' when the family has none");
  FamilyFlags closed_family;
  closed_family.attach(closed_cmd);
  std::int64_t closed_n = 0;
  std::optional<std::int64_t> closed_k;
  std::string closed_format = "text";
  closed_cmd->add_option("--n", closed_n, "target sum")
      ->required()
      ->check(CLI::NonNegativeNumber);
  closed_cmd->add_option("--k", closed_k, "number of parts")->check(CLI::NonNegativeNumber);
  closed_cmd->add_option("--format", closed_format, "text or json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  closed_cmd->callback([&] {
    exit_code = cmd_closed(closed_family, closed_n, closed_k, closed_format, out);
  });

  // recurrence
  auto* rec_cmd = app.add_subcommand(
      "recurrence", "coefficient triangle and linear recurrence for b_i = C(i+p-1, q)");
  std::int64_t rec_p = 0;
  std::int64_t rec_q = 0;
  std::string rec_show = "coeffs";
  std::int64_t rec_n_lo = 2;
  std::int64_t rec_n_hi = 40;
  std::string rec_format = "text";
  rec_cmd->add_option("--p", rec_p, "parameter p")->required()->check(CLI::PositiveNumber);
  rec_cmd->add_option("--q", rec_q, "parameter q (order q+1)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  rec_cmd->add_option("--show", rec_show, "triangle, coeffs, or verify (default coeffs)")
      ->check(CLI::IsMember({"triangle", "coeffs", "verify"}));
  rec_cmd->add_option("--n-lo", rec_n_lo, "verify range start (default 2)")
      ->check(CLI::NonNegativeNumber);
  rec_cmd->add_option("--n-hi", rec_n_hi, "verify range end (default 40)")
      ->check(CLI::NonNegativeNumber);
  rec_cmd->add_option("--format", rec_format, "text or json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  rec_cmd->callback([&] {
    exit_code = cmd_recurrence(rec_p, rec_q, rec_show, rec_n_lo, rec_n_hi, rec_format, out);
  });

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the identity and oracle-agreement suites");
  std::optional<std::string> verify_only;
  std::optional<std::int64_t> verify_n_max;
  std::string verify_bound = "corrected";
  std::string verify_format = "json";
  verify_cmd->add_option("--only", verify_only, "run a single scope")
      ->check(CLI::IsMember(verification_scopes()));
  verify_cmd->add_option("--n-max", verify_n_max,
                         "override the default n <= 12 bound of the agreement, "
                         "catalan, and kb scopes")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--bound", verify_bound,
                         "inner bound of the Catalan convolution: corrected or "
                         "paper (default corrected)")
      ->check(CLI::IsMember({"corrected", "paper"}));
  verify_cmd->add_option("--format", verify_format, "json or text (default json)")
      ->check(CLI::IsMember({"json", "text"}));
  verify_cmd->callback([&] {
    exit_code = cmd_verify(verify_only, verify_n_max, verify_bound, verify_format, out);
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? 0 : 2;
  } catch (const CapExceededError& error) {
    err << "error: " << error.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::domain_error& error) {
    err << "error: " << error.what() << "\n";
    return 2;
  }
  return exit_code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc) - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace colorcomp
