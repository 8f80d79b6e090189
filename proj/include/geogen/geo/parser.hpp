#pragma once

#include <string_view>

#include "geogen/geo/ast.hpp"
#include "geogen/geo/diagnostics.hpp"

namespace geogen::geo {

struct ParseResult {
  GeoProgram program;
  std::vector<Diagnostic> diagnostics;
  bool ok = true;  // no error-severity diagnostics
};

// Recursive-descent parse of the GEO subset. Unknown statements produce
// warnings and are skipped; malformed known statements produce errors and
// the parser resynchronizes at the next top-level semicolon.
ParseResult parse(std::string_view source);

}  // namespace geogen::geo
