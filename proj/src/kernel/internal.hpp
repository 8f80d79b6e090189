#pragma once

#include <optional>
#include <vector>

#include "geogen/geo/model.hpp"
#include "geogen/kernel/classify.hpp"

namespace geogen::kernel::detail {

struct CurveSplit {
  std::vector<int> lines;
  std::vector<int> arcs;
  std::vector<int> splines;
};

CurveSplit split_curves(const geo::GeoModel& m, const Component& c);

struct CircleFit {
  Eigen::Vector3d center{0, 0, 0};
  double radius = 0.0;
};

// All arcs lie on one circle (shared center and radius within 1e-6 relative)
// and their endpoints close into a single connected cycle.
std::optional<CircleFit> fit_circle(const geo::GeoModel& m,
                                    const std::vector<int>& arc_ids);

// Arcs on one circle closed by a single diameter line.
std::optional<CircleFit> fit_semicircle(const geo::GeoModel& m,
                                        const std::vector<int>& arc_ids,
                                        int line_id);

// Ordered vertex ids around a single simple cycle of Line curves, starting
// from the lowest-id line in its declared direction. Empty if the lines do
// not form exactly one cycle.
std::vector<int> line_cycle_vertices(const geo::GeoModel& m,
                                     const std::vector<int>& line_ids);

// 0 = not an axis-angle rectangle, 1 = square, 2 = rectangle.
int quad_kind(const geo::GeoModel& m, const std::vector<int>& line_ids);

}  // namespace geogen::kernel::detail
