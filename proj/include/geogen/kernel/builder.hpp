#pragma once

#include <string>

#include "geogen/kernel/spec.hpp"

namespace geogen::kernel {

// Emits the canonical GEO script for the spec: declared parameter variables,
// counterclockwise loops, z = 0 for planar shapes, a leading unit comment.
// Throws InvalidSpec when spec_problems(spec) is nonempty.
std::string build_geometry(const GeometrySpec& spec);

}  // namespace geogen::kernel
