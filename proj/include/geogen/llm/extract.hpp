#pragma once

#include <string>

namespace geogen::llm {

// Pulls the geometry script out of a model completion: the first fenced
// code block when present, otherwise the suffix starting at the first line
// that reads as a script statement or comment, otherwise the text itself.
std::string extract_geo(const std::string& completion);

}  // namespace geogen::llm
