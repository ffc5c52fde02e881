#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colorcomp/closed_forms.hpp"
#include "colorcomp/sequences.hpp"

namespace colorcomp {

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "expected-discrepancy"
  std::string detail;

  bool failed() const { return status == "fail"; }
  bool operator==(const CheckResult&) const = default;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  bool operator==(const VerifyReport&) const = default;
};

struct VerifyOptions {
  /// Restrict to one scope (see verification_scopes()); empty = all.
  std::optional<std::string> only;
  /// Overrides the n bound of the scopes whose default is 12
  /// (oracle-agreement, catalan, kb). Other scopes keep their pinned bounds.
  std::optional<std::uint64_t> n_max;
  ConvolutionBound bound = ConvolutionBound::corrected;
};

/// Scope names accepted by VerifyOptions::only, in run order.
const std::vector<std::string>& verification_scopes();

/// The fixed family roster the agreement suites run over.
std::vector<ColorFamily> verification_roster();

/// Runs the identity/oracle suites and returns per-check results.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace colorcomp
