#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "geogen/geo/eval.hpp"
#include "geogen/geo/parser.hpp"

namespace geogen::geo {

struct ValidationReport {
  bool syntax_ok = false;
  bool model_ok = false;
  std::vector<Diagnostic> diagnostics;
  GeoProgram program;  // as parsed (possibly partial on syntax errors)
  GeoModel model;      // empty unless syntax_ok
};

// parse + evaluate. model_ok implies syntax_ok.
ValidationReport validate(std::string_view source);

// Unit named by the first "// units: X" comment, if any.
std::optional<std::string> declared_unit(const GeoProgram& program);

}  // namespace geogen::geo
