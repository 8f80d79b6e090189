#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "geogen/geo/diagnostics.hpp"

namespace geogen::geo {

struct PointRecord {
  Eigen::Vector3d pos{0, 0, 0};
  double mesh_size = 0.0;  // 0 when the 3-argument form was used
  SourceSpan span;
};

enum class CurveKind { Line, CircleArc, Spline };

struct CurveRecord {
  CurveKind kind = CurveKind::Line;
  // Line: {a, b}; CircleArc: {start, center, end}; Spline: control points.
  std::vector<int> points;
  Eigen::Vector3d arc_center{0, 0, 0};
  double arc_radius = 0.0;
  SourceSpan span;

  int first_point() const { return points.front(); }
  int last_point() const { return points.back(); }
  // Endpoints in parameter order (arc center excluded).
  std::pair<int, int> endpoints() const {
    if (kind == CurveKind::CircleArc) return {points[0], points[2]};
    return {points.front(), points.back()};
  }
};

struct LoopRecord {
  std::vector<int> curves;  // signed: negative means reversed traversal
  SourceSpan span;
};

struct SurfaceRecord {
  std::vector<int> loops;
  SourceSpan span;
};

enum class ExtrusionKind { Translate, Rotate };

struct ExtrusionRecord {
  ExtrusionKind kind = ExtrusionKind::Translate;
  Eigen::Vector3d delta{0, 0, 0};   // Translate
  Eigen::Vector3d axis{0, 0, 0};    // Rotate
  Eigen::Vector3d pivot{0, 0, 0};   // Rotate
  double angle_rad = 0.0;           // Rotate
  std::vector<int> surfaces;
  SourceSpan span;
};

struct GeoModel {
  std::map<int, PointRecord> points;
  std::map<int, CurveRecord> curves;
  std::map<int, LoopRecord> loops;
  std::map<int, SurfaceRecord> surfaces;
  std::vector<ExtrusionRecord> extrusions;
  std::map<std::string, double> variables;
};

}  // namespace geogen::geo
