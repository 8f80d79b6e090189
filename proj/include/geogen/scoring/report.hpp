#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "geogen/scoring/score.hpp"

namespace geogen::scoring {

struct PromptScore {
  std::string suite;
  std::string prompt_id;
  ScoreCard card;
};

struct ModelResults {
  std::string model;
  std::vector<PromptScore> scores;
};

struct MixedSuites : std::runtime_error {
  explicit MixedSuites(const std::string& what) : std::runtime_error(what) {}
};

struct Report {
  std::string text;  // aligned criterion-by-geometry matrix, one block per model
  std::string csv;   // long form: model,geometry,criterion,points
};

// Renders the score matrix. All results must come from a single suite;
// results spanning suites throw MixedSuites. Empty input yields an empty
// report.
Report build_report(const std::vector<ModelResults>& results);

}  // namespace geogen::scoring
