#pragma once

#include <string>

#include "geogen/geo/ast.hpp"

namespace geogen::geo {

std::string to_geo(const Expr& e);
std::string to_geo(const Statement& s);

// One statement per line, trailing newline. Parsing the output yields a
// program structurally equal to the input.
std::string serialize(const GeoProgram& program);

}  // namespace geogen::geo
