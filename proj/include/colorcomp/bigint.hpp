#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace colorcomp {

// Signed arbitrary-precision integer. Counts are nonnegative by invariant;
// the recurrence coefficient triangle genuinely needs the sign.
using BigInt = boost::multiprecision::cpp_int;
using BigCount = BigInt;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Parses a decimal integer (optional leading '-'). Throws std::invalid_argument
// on anything else.
BigInt bigint_from_decimal(const std::string& text);

}  // namespace colorcomp
