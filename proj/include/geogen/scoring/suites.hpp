#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geogen/scoring/score.hpp"

namespace geogen::scoring {

// One evaluation prompt with exactly one expectation, either a single
// geometry or a multi-body layout.
struct SuitePrompt {
  std::string id;
  std::string instruction;
  std::optional<kernel::GeometrySpec> expect_single;
  std::optional<MultiBodyExpectation> expect_multi;
};

struct EvalSuite {
  std::string name;
  std::vector<SuitePrompt> prompts;
};

struct DefaultSuites {
  EvalSuite single;  // seven prompts, one per shape
  EvalSuite multi;   // the two fixed multi-body probes
};

DefaultSuites default_suites();

}  // namespace geogen::scoring
