#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphcalc/properties.hpp"

namespace graphcalc {

/// One golden or structural check. `criterion` is the acceptance criterion
/// number the check belongs to, 0 for supplementary checks.
struct CheckResult {
  std::string id;
  int criterion = 0;
  std::string description;
  bool passed = false;
  std::string expected;
  std::string computed;
};

/// Selections accepted by run_checks.
std::vector<std::string> check_selections();

/// Runs the embedded example checks. `selection` is "all", an example number
/// "1".."6", or one of "props", "torsion", "closed-forms", "flatness", "metric".
/// Throws InvalidInput for anything else.
std::vector<CheckResult> run_checks(std::string_view selection, const PropertyConfig& props = {});

}  // namespace graphcalc
