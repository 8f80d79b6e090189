#pragma once

#include <variant>

#include "geogen/kernel/measure.hpp"

namespace geogen::kernel {

enum class Relation { Inside, Containing, AdjacentDisjoint, Overlapping };

const char* relation_name(Relation r);
std::optional<Relation> relation_from_name(const std::string& name);

struct Disk {
  Eigen::Vector2d center{0, 0};
  double radius = 0;
};

struct ConvexPoly {
  std::vector<Eigen::Vector2d> pts;  // counterclockwise
};

using RegionPart = std::variant<Disk, ConvexPoly>;

// Union of convex parts. Circles stay exact disks; semicircle arcs are
// polygonized; an I-beam is its three surface rectangles; pipes contribute
// their cross-section disk.
struct Region {
  std::vector<RegionPart> parts;
};

std::optional<Region> region_of(const geo::GeoModel& model,
                                const ClassifiedComponent& comp);

// Closed membership (boundary counts as inside).
bool region_contains_point(const Region& r, const Eigen::Vector2d& p);

// Inside/Containing use strict containment; AdjacentDisjoint requires a
// strictly positive gap; everything else is Overlapping. Single-part
// containers are decided by exact predicates (center distance vs half-side
// minus radius for a circle in a square, vertex tests for polygons).
Relation spatial_relation(const Region& a, const Region& b);

}  // namespace geogen::kernel
