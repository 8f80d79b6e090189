#pragma once

#include <string>
#include <vector>

#include "geogen/kernel/spec.hpp"

namespace geogen::dataset {

// Three-stage quality control for a generated instruction/script pair:
// syntax (script parses and evaluates cleanly), geometry (the script's
// measured shape reproduces the spec to relative 1e-9), and parameter
// consistency (every numeric literal and keyword in the instruction is
// realized in the script).
struct QCReport {
  bool syntax_ok = false;
  bool geometry_ok = false;
  bool params_ok = false;
  std::vector<std::string> details;

  bool all_ok() const { return syntax_ok && geometry_ok && params_ok; }
};

QCReport qc_validate(const std::string& instruction, const std::string& script,
                     const kernel::GeometrySpec& spec);

// All numeric literals appearing in free text, signed, in order.
std::vector<double> numeric_literals(const std::string& text);

}  // namespace geogen::dataset
