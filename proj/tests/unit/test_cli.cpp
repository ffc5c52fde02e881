#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "colorcomp/cli.hpp"
#include "colorcomp/json_io.hpp"

using namespace colorcomp;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& text) {
  std::size_t lines = 0;
  for (const char c : text)
    if (c == '\n') ++lines;
  return lines;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream file(path);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("count: spot values per family") {
  const auto catalan = run({"count", "--family", "catalan", "--n", "3"});
  CHECK(catalan.code == 0);
  CHECK(catalan.out == "10\n");

  const auto trivial = run({"count", "--family", "constant", "--p", "1", "--n", "0"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "1\n");

  const auto matrix = run({"count", "--family", "matrix", "--k-rows", "2", "--n", "2"});
  CHECK(matrix.code == 0);
  CHECK(matrix.out == "7\n");
}

TEST_CASE("count: every oracle gives the same value") {
  for (const std::string oracle : {"dp", "enum", "series", "closed"}) {
    const auto result = run({"count", "--family", "constant", "--p", "2", "--n", "3",
                             "--k", "2", "--oracle", oracle});
    CHECK(result.code == 0);
    CHECK(result.out == "8\n");
  }
  for (const std::string oracle : {"dp", "enum", "series"}) {
    const auto result = run({"count", "--family", "matrix", "--k-rows", "2", "--n", "2",
                             "--oracle", oracle});
    CHECK(result.out == "7\n");
  }
}

TEST_CASE("total equals count without --k") {
  const auto total = run({"total", "--family", "exponential", "--p", "2", "--n", "4"});
  CHECK(total.code == 0);
  CHECK(total.out == "27\n");
  const auto count = run({"count", "--family", "exponential", "--p", "2", "--n", "4"});
  CHECK(count.out == total.out);
}

TEST_CASE("table: csv layout is pinned") {
  const auto result =
      run({"table", "--family", "catalan", "--n-max", "4", "--format", "csv"});
  CHECK(result.code == 0);
  CHECK(result.out ==
        "n,k=1,k=2,k=3,k=4,total\n"
        "1,1,,,,1\n"
        "2,2,1,,,3\n"
        "3,5,4,1,,10\n"
        "4,14,14,6,1,35\n");
}

TEST_CASE("table: text layout holds the same numbers") {
  const auto result = run({"table", "--family", "constant", "--p", "1", "--n-max", "3"});
  CHECK(result.code == 0);
  CHECK(line_count(result.out) == 4);  // header + three rows
  std::istringstream tokens(result.out);
  std::vector<std::string> seen;
  for (std::string token; tokens >> token;) seen.push_back(token);
  const std::vector<std::string> expected = {
      "n", "k=1", "k=2", "k=3", "total",  // header
      "1", "1", "1",                      // n = 1
      "2", "1", "1", "2",                 // n = 2
      "3", "1", "2", "1", "4",            // n = 3: Pascal row, total 4
  };
  CHECK(seen == expected);
}

TEST_CASE("table: json output round-trips") {
  const auto result = run({"table", "--family", "binom_general", "--p", "2", "--q", "2",
                           "--n-max", "6", "--format", "json"});
  CHECK(result.code == 0);
  const Json j = Json::parse(result.out);
  const CountTable table = table_from_json(j);
  CHECK(table.n_max == 6);
  CHECK(table_to_json(table).dump(2) + "\n" == result.out);
}

TEST_CASE("enumerate: witnesses stream as JSON lines") {
  const auto plain = run({"enumerate", "--family", "constant", "--p", "1", "--n", "3"});
  CHECK(plain.code == 0);
  CHECK(plain.out ==
        R"({"parts":[[1,1],[1,1],[1,1]]})" "\n"
        R"({"parts":[[1,1],[2,1]]})" "\n"
        R"({"parts":[[2,1],[1,1]]})" "\n"
        R"({"parts":[[3,1]]})" "\n");

  const auto empty = run({"enumerate", "--family", "catalan", "--n", "0"});
  CHECK(empty.out == "{\"parts\":[]}\n");

  const auto catalan = run({"enumerate", "--family", "catalan", "--n", "2"});
  CHECK(line_count(catalan.out) == 3);

  const auto limited =
      run({"enumerate", "--family", "constant", "--p", "1", "--n", "5", "--limit", "3"});
  CHECK(line_count(limited.out) == 3);
}

TEST_CASE("enumerate: matrix families stream matrices") {
  const auto all = run({"enumerate", "--family", "matrix", "--k-rows", "2", "--n", "2"});
  CHECK(all.code == 0);
  CHECK(line_count(all.out) == 7);
  CHECK(all.out.rfind(R"({"columns":[[0,1],[0,1]]})" "\n", 0) == 0);

  const auto single_column =
      run({"enumerate", "--family", "matrix", "--k-rows", "2", "--n", "2", "--k", "1"});
  CHECK(single_column.out ==
        R"({"columns":[[0,2]]})" "\n"
        R"({"columns":[[1,1]]})" "\n"
        R"({"columns":[[2,0]]})" "\n");
}

TEST_CASE("closed: value when defined, 'absent' otherwise, always exit 0") {
  const auto present =
      run({"closed", "--family", "constant", "--p", "2", "--n", "3", "--k", "2"});
  CHECK(present.code == 0);
  CHECK(present.out == "8\n");

  const auto absent = run({"closed", "--family", "figured", "--p", "2", "--n", "4"});
  CHECK(absent.code == 0);
  CHECK(absent.out == "absent\n");

  const auto diagonal =
      run({"closed", "--family", "catalan_shifted", "--n", "4", "--k", "4"});
  CHECK(diagonal.out == "absent\n");

  const auto as_json = run({"closed", "--family", "figured", "--p", "2", "--n", "4",
                            "--format", "json"});
  CHECK(as_json.code == 0);
  const Json j = Json::parse(as_json.out);
  CHECK(j.at("value").is_null());
}

TEST_CASE("count with --oracle closed errors when no formula exists") {
  const auto result = run({"count", "--family", "matrix", "--k-rows", "2", "--n", "4",
                           "--oracle", "closed"});
  CHECK(result.code == 2);
  CHECK(result.out.empty());
  CHECK(result.err.find("no closed formula") != std::string::npos);
}

TEST_CASE("recurrence: coefficient output is pinned") {
  const auto q1 = run({"recurrence", "--p", "1", "--q", "1", "--show", "coeffs"});
  CHECK(q1.code == 0);
  CHECK(q1.out == "[-1, 3]\norder 2\n");

  const auto q0 = run({"recurrence", "--p", "1", "--q", "0", "--show", "coeffs"});
  CHECK(q0.out == "[2]\norder 1\n");
}

TEST_CASE("recurrence: triangle rows print plainly") {
  const auto result = run({"recurrence", "--p", "1", "--q", "1", "--show", "triangle"});
  CHECK(result.code == 0);
  CHECK(result.out == "-1 1\n-1 -2 1\n0 1 -3 1\n");
}

TEST_CASE("recurrence: verification passes and reports as JSON") {
  const auto result = run({"recurrence", "--p", "2", "--q", "3", "--show", "verify",
                           "--n-hi", "40", "--format", "json"});
  CHECK(result.code == 0);
  const Json j = Json::parse(result.out);
  const RecurrenceReport report = recurrence_report_from_json(j);
  CHECK(report.passes_from_start());
  CHECK(report.spec.order == 4);
  CHECK(recurrence_report_to_json(report).dump(2) + "\n" == result.out);
}

TEST_CASE("verify: single scopes run clean") {
  const auto kt1 = run({"verify", "--only", "kt1"});
  CHECK(kt1.code == 0);
  const Json j = Json::parse(kt1.out);
  CHECK(j.at("failures") == 0);
  CHECK(verify_report_from_json(j).ok());

  const auto text = run({"verify", "--only", "matrix", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("pass  matrix/spot-2-rows-n-2") != std::string::npos);
  CHECK(text.out.find("0 failures") != std::string::npos);
}

TEST_CASE("verify: --bound paper reports the documented discrepancy, exit 0") {
  const auto result = run({"verify", "--only", "final-corollary", "--bound", "paper"});
  CHECK(result.code == 0);
  CHECK(result.out.find("expected-discrepancy") != std::string::npos);
  CHECK(result.out.find("documented witness n=3") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> args = {"verify", "--only", "kb", "--n-max", "9"};
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  const auto table_a = run({"table", "--family", "catalan", "--n-max", "8"});
  const auto table_b = run({"table", "--family", "catalan", "--n-max", "8"});
  CHECK(table_a.out == table_b.out);
}

TEST_CASE("custom families load from both b-file formats") {
  const auto text_path =
      write_temp("colorcomp_b_text.txt", "2 1 1  # two kinds of 1\n1 1\n");
  const auto from_text =
      run({"count", "--family", "custom", "--b-file", text_path.string(), "--n", "3"});
  CHECK(from_text.code == 0);
  CHECK(from_text.out == "13\n");

  const auto json_path = write_temp("colorcomp_b_json.json", R"([2, 1, "1"])");
  const auto from_json =
      run({"count", "--family", "custom", "--b-file", json_path.string(), "--n", "3"});
  CHECK(from_json.out == "13\n");

  const auto missing =
      run({"count", "--family", "custom", "--b-file", "/no/such/file", "--n", "3"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2 and a diagnostic") {
  const auto no_sub = run({});
  CHECK(no_sub.code == 2);

  const auto bad_flag = run({"count", "--family", "catalan", "--n", "3", "--wat"});
  CHECK(bad_flag.code == 2);

  const auto unknown_family = run({"count", "--family", "nope", "--n", "3"});
  CHECK(unknown_family.code == 2);
  CHECK(unknown_family.err.find("unknown family") != std::string::npos);

  const auto missing_param = run({"count", "--family", "constant", "--n", "3"});
  CHECK(missing_param.code == 2);
  CHECK(missing_param.err.find("requires --p") != std::string::npos);

  const auto stray_param =
      run({"count", "--family", "constant", "--p", "2", "--m", "1", "--n", "3"});
  CHECK(stray_param.code == 2);
  CHECK(stray_param.err.find("does not take --m") != std::string::npos);

  const auto bad_scope = run({"verify", "--only", "bogus"});
  CHECK(bad_scope.code == 2);
}

TEST_CASE("resource caps exit with code 3") {
  const auto result = run({"count", "--family", "constant", "--p", "1", "--n", "30",
                           "--oracle", "enum"});
  CHECK(result.code == 3);
  CHECK(result.err.find("exceeds cap") != std::string::npos);
}

TEST_CASE("--help prints usage and exits 0") {
  const auto result = run({"--help"});
  CHECK(result.code == 0);
  CHECK(result.out.find("colorcomp") != std::string::npos);
  CHECK(result.out.find("verify") != std::string::npos);
}
