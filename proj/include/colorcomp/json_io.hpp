#pragma once

#include <json.hpp>

#include "colorcomp/counting.hpp"
#include "colorcomp/enumeration.hpp"
#include "colorcomp/recurrence.hpp"
#include "colorcomp/verify.hpp"

namespace colorcomp {

// Insertion-ordered JSON keeps emitted documents byte-stable across runs.
using Json = nlohmann::ordered_json;

// Big integers serialize as decimal strings; they outgrow 64-bit JSON
// numbers quickly.

Json family_to_json(const ColorFamily& family);
ColorFamily family_from_json(const Json& j);

Json table_to_json(const CountTable& table);
CountTable table_from_json(const Json& j);

Json recurrence_spec_to_json(const RecurrenceSpec& spec);
RecurrenceSpec recurrence_spec_from_json(const Json& j);

Json recurrence_report_to_json(const RecurrenceReport& report);
RecurrenceReport recurrence_report_from_json(const Json& j);

Json triangle_to_json(const CoeffTriangle& triangle);

Json verify_report_to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const Json& j);

/// {"parts": [[part, color], ...]}
Json colored_to_json(const ColoredComposition& item);

/// {"columns": [[...], ...]}
Json matrix_to_json(const MatrixComposition& item);

}  // namespace colorcomp
