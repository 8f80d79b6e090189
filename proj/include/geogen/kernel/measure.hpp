#pragma once

#include <map>

#include "geogen/kernel/classify.hpp"

namespace geogen::kernel {

struct MeasuredGeometry {
  std::optional<Shape> shape;
  std::map<std::string, double> dims;
  Eigen::Vector3d center{0, 0, 0};
  double mesh_size = 0.0;  // mode of point mesh sizes; 0 when none given
  int body_count = 0;
  // Angle of the lowest-id edge for polygonal shapes; for semicircles the
  // apex direction (facing + rotation combined). Degrees in [0, 360).
  double orientation_deg = 0.0;
  std::optional<Facing> facing;  // semicircle: apex snapped to a cardinal
};

struct MeasureResult {
  MeasuredGeometry geometry;
  std::vector<std::string> unavailable;  // dims the model lacks entities for
};

MeasureResult measure(const geo::GeoModel& model, const ClassifiedComponent& comp);

struct IBeamFit {
  bool ok = false;
  double h = 0, b = 0, tw = 0, tf = 0;
  Eigen::Vector2d center{0, 0};
};

// Matches the component's points against the 12-point I-profile template
// (de-rotated along the lowest-id edge direction).
IBeamFit fit_ibeam(const geo::GeoModel& model, const Component& comp);

// Mode of the positive mesh sizes on the component's points; ties resolve
// to the smallest value. 0 when no point declares a mesh size.
double mesh_size_mode(const geo::GeoModel& model, const Component& comp);

}  // namespace geogen::kernel
