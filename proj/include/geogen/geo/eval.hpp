#pragma once

#include "geogen/geo/ast.hpp"
#include "geogen/geo/model.hpp"

namespace geogen::geo {

struct EvalResult {
  GeoModel model;
  std::vector<Diagnostic> diagnostics;
  bool ok = true;  // no error-severity diagnostics
};

// Evaluates statements in order under a single variable environment.
// Statement-level errors (undefined variables, dangling references,
// duplicate ids, division by zero) are collected; evaluation continues
// with the next statement so multiple defects surface in one pass.
EvalResult evaluate(const GeoProgram& program);

}  // namespace geogen::geo
