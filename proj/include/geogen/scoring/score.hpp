#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geogen/kernel/relation.hpp"
#include "geogen/kernel/spec.hpp"

namespace geogen::scoring {

// One rubric criterion: 0, 5, 10 or 15 points plus the reason.
struct CriterionScore {
  int points = 0;
  std::string rationale;
};

struct ScoreCard {
  CriterionScore shape_accuracy;
  CriterionScore dimensional_accuracy;
  CriterionScore parameter_matching;
  CriterionScore unit_consistency;

  int total() const {
    return shape_accuracy.points + dimensional_accuracy.points +
           parameter_matching.points + unit_consistency.points;
  }
};

// Scores a candidate script against the requested geometry.
//
// Shape accuracy: 15 when the requested class is found with the canonical
// entity census, 10 when the class matches but the construction deviates,
// 5 for a related class (square/rectangle, circle/semicircle, pipe/bent
// pipe), 0 otherwise. Dimensional accuracy: the worst relative error over
// the requested dimensions, after picking the best single unit-scale
// hypothesis from {x1, x10, x0.1}, banded at 1% / 5% / 10% (inclusive).
// Parameter matching: counts discrepancies over the explicitly requested
// non-dimensional parameters (center, orientation, mesh size, facing).
// Unit consistency: 15 when the candidate's numbers are in the requested
// unit, 10 for a uniform conversion declared by a "// units:" comment, 5
// for an undeclared or mixed scale, 0 when no interpretation fits. A
// candidate that fails validation scores 0 everywhere. Never throws.
ScoreCard score(const kernel::GeometrySpec& requested,
                const std::string& candidate);

struct MultiBodyExpectation {
  std::vector<kernel::GeometrySpec> components;
  // Relation of components[0] relative to components[1].
  std::optional<kernel::Relation> relation;
};

struct MultiBodyComponentResult {
  kernel::GeometrySpec expected;
  bool found = false;
  ScoreCard card;  // zeroed when not found
};

struct MultiBodyReport {
  int components_found = 0;      // bodies present in the candidate
  int components_expected = 0;
  std::vector<MultiBodyComponentResult> per_component;
  int omissions = 0;  // expected bodies with no counterpart
  int extras = 0;     // candidate bodies beyond the expectation
  bool relation_checked = false;
  bool relation_satisfied = false;
  std::string relation_note;
};

// Splits the candidate into bodies, matches them greedily to the expected
// components by class, scores each match with the single-body rubric, and
// checks the expected spatial relation between the first two components.
MultiBodyReport score_multibody(const MultiBodyExpectation& expectation,
                                const std::string& candidate);

}  // namespace geogen::scoring
