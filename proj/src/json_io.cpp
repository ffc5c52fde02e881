#include "colorcomp/json_io.hpp"

#include <stdexcept>

namespace colorcomp {

namespace {

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return bigint_from_decimal(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw std::invalid_argument("expected integer or decimal string, got: " + j.dump());
}

}  // namespace

Json family_to_json(const ColorFamily& family) {
  Json j;
  j["kind"] = family_kind_name(family.kind());
  switch (family.kind()) {
    case FamilyKind::constant:
    case FamilyKind::exponential:
    case FamilyKind::binom_row:
    case FamilyKind::figured:
      j["p"] = family.p();
      break;
    case FamilyKind::constant_shifted:
      j["p"] = family.p();
      j["m"] = family.m();
      break;
    case FamilyKind::linear0:
    case FamilyKind::linear:
      j["m"] = family.m();
      break;
    case FamilyKind::binom_col:
      j["q"] = family.q();
      break;
    case FamilyKind::binom_general:
      j["p"] = family.p();
      j["q"] = family.q();
      break;
    case FamilyKind::matrix:
      j["k_rows"] = family.k_rows();
      break;
    case FamilyKind::catalan:
    case FamilyKind::catalan_shifted:
      break;
    case FamilyKind::custom: {
      Json values = Json::array();
      for (const auto& v : family.custom_values()) values.push_back(to_decimal(v));
      j["values"] = std::move(values);
      break;
    }
  }
  return j;
}

ColorFamily family_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "constant") return ColorFamily::constant(j.at("p").get<std::uint32_t>());
  if (kind == "constant_shifted")
    return ColorFamily::constant_shifted(j.at("p").get<std::uint32_t>(),
                                         j.at("m").get<std::uint32_t>());
  if (kind == "exponential") return ColorFamily::exponential(j.at("p").get<std::uint32_t>());
  if (kind == "linear0") return ColorFamily::linear0(j.at("m").get<std::uint32_t>());
  if (kind == "linear") return ColorFamily::linear(j.at("m").get<std::uint32_t>());
  if (kind == "binom_row") return ColorFamily::binom_row(j.at("p").get<std::uint32_t>());
  if (kind == "figured") return ColorFamily::figured(j.at("p").get<std::uint32_t>());
  if (kind == "binom_col") return ColorFamily::binom_col(j.at("q").get<std::uint32_t>());
  if (kind == "binom_general")
    return ColorFamily::binom_general(j.at("p").get<std::uint32_t>(),
                                      j.at("q").get<std::uint32_t>());
  if (kind == "matrix") return ColorFamily::matrix(j.at("k_rows").get<std::uint32_t>());
  if (kind == "catalan") return ColorFamily::catalan();
  if (kind == "catalan_shifted") return ColorFamily::catalan_shifted();
  if (kind == "custom") {
    std::vector<BigCount> values;
    for (const auto& v : j.at("values")) values.push_back(big_from_json(v));
    return ColorFamily::custom(std::move(values));
  }
  throw std::invalid_argument("unknown family kind: " + kind);
}

Json table_to_json(const CountTable& table) {
  Json j;
  j["family"] = family_to_json(table.family);
  j["n_max"] = table.n_max;
  Json cells = Json::array();
  for (const auto& row : table.cells) {
    Json jrow = Json::array();
    for (const auto& v : row) jrow.push_back(to_decimal(v));
    cells.push_back(std::move(jrow));
  }
  j["cells"] = std::move(cells);
  Json totals = Json::array();
  for (const auto& v : table.totals) totals.push_back(to_decimal(v));
  j["totals"] = std::move(totals);
  return j;
}

CountTable table_from_json(const Json& j) {
  CountTable table;
  table.family = family_from_json(j.at("family"));
  table.n_max = j.at("n_max").get<std::size_t>();
  for (const auto& jrow : j.at("cells")) {
    std::vector<BigCount> row;
    for (const auto& v : jrow) row.push_back(big_from_json(v));
    table.cells.push_back(std::move(row));
  }
  for (const auto& v : j.at("totals")) table.totals.push_back(big_from_json(v));
  return table;
}

Json recurrence_spec_to_json(const RecurrenceSpec& spec) {
  Json j;
  j["order"] = spec.order;
  Json coeffs = Json::array();
  for (const auto& c : spec.coeffs) coeffs.push_back(to_decimal(c));
  j["coeffs"] = std::move(coeffs);
  j["start_index"] = spec.start_index;
  return j;
}

RecurrenceSpec recurrence_spec_from_json(const Json& j) {
  RecurrenceSpec spec;
  spec.order = j.at("order").get<std::size_t>();
  for (const auto& c : j.at("coeffs")) spec.coeffs.push_back(big_from_json(c));
  spec.start_index = j.at("start_index").get<std::uint64_t>();
  return spec;
}

Json recurrence_report_to_json(const RecurrenceReport& report) {
  Json j;
  j["spec"] = recurrence_spec_to_json(report.spec);
  Json checks = Json::array();
  for (const auto& check : report.checks)
    checks.push_back(Json{{"n", check.n}, {"holds", check.holds}});
  j["checks"] = std::move(checks);
  if (report.earliest_valid)
    j["earliest_valid"] = *report.earliest_valid;
  else
    j["earliest_valid"] = nullptr;
  return j;
}

RecurrenceReport recurrence_report_from_json(const Json& j) {
  RecurrenceReport report;
  report.spec = recurrence_spec_from_json(j.at("spec"));
  for (const auto& check : j.at("checks"))
    report.checks.push_back(
        {check.at("n").get<std::uint64_t>(), check.at("holds").get<bool>()});
  if (!j.at("earliest_valid").is_null())
    report.earliest_valid = j.at("earliest_valid").get<std::uint64_t>();
  return report;
}

Json triangle_to_json(const CoeffTriangle& triangle) {
  Json j;
  j["p"] = triangle.p();
  j["q"] = triangle.q();
  Json rows = Json::array();
  for (const auto& row : triangle.row_data()) {
    Json jrow = Json::array();
    for (const auto& v : row) jrow.push_back(to_decimal(v));
    rows.push_back(std::move(jrow));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json verify_report_to_json(const VerifyReport& report) {
  Json j;
  Json checks = Json::array();
  for (const auto& check : report.checks)
    checks.push_back(Json{{"name", check.name},
                          {"status", check.status},
                          {"detail", check.detail}});
  j["checks"] = std::move(checks);
  j["failures"] = report.failures();
  return j;
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport report;
  for (const auto& check : j.at("checks"))
    report.checks.push_back({check.at("name").get<std::string>(),
                             check.at("status").get<std::string>(),
                             check.at("detail").get<std::string>()});
  return report;
}

Json colored_to_json(const ColoredComposition& item) {
  Json parts = Json::array();
  for (const auto& part : item.parts) parts.push_back(Json::array({part.part, part.color}));
  return Json{{"parts", std::move(parts)}};
}

Json matrix_to_json(const MatrixComposition& item) {
  Json columns = Json::array();
  for (const auto& column : item.columns) columns.push_back(column);
  return Json{{"columns", std::move(columns)}};
}

}  // namespace colorcomp
