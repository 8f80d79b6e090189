#pragma once

#include <optional>
#include <vector>

#include "geogen/geo/model.hpp"
#include "geogen/kernel/spec.hpp"

namespace geogen::kernel {

// A curve-connected body: curves sharing points (arc centers included),
// plus the loops, surfaces, and extrusions hanging off those curves.
struct Component {
  std::vector<int> points;
  std::vector<int> curves;
  std::vector<int> loops;
  std::vector<int> surfaces;
  std::vector<int> extrusions;  // indices into model.extrusions
};

std::vector<Component> split_components(const geo::GeoModel& model);

struct ClassifiedComponent {
  Component component;
  std::optional<Shape> shape;  // nullopt = unrecognized
};

// One entry per component, ordered by smallest curve id. Classification is
// tolerant of entity numbering and rotation; structural fidelity is judged
// separately via the census.
std::vector<ClassifiedComponent> classify(const geo::GeoModel& model);

struct EntityCensus {
  int points = 0;
  int lines = 0;
  int arcs = 0;
  int splines = 0;
  int loops = 0;
  int surfaces = 0;
  int translates = 0;
  int rotates = 0;
  bool operator==(const EntityCensus&) const = default;
};

EntityCensus census_of(const geo::GeoModel& model);
EntityCensus census_of(const geo::GeoModel& model, const Component& comp);
// Entity counts of the canonical construction for a shape.
EntityCensus canonical_census(Shape shape);

}  // namespace geogen::kernel
