#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace geogen::kernel {

enum class Shape { Square, Rectangle, Circle, SemiCircle, IBeam, Pipe, BentPipe };

enum class Unit { Mm, Cm };

enum class Facing { Up, Down, Left, Right };

constexpr Shape kAllShapes[] = {Shape::Square,     Shape::Rectangle, Shape::Circle,
                                Shape::SemiCircle, Shape::IBeam,     Shape::Pipe,
                                Shape::BentPipe};

// Identifier-style name used in JSON and dataset metadata.
const char* shape_name(Shape s);
// Human display name used in report tables.
const char* shape_display_name(Shape s);
std::optional<Shape> shape_from_name(const std::string& name);

const char* unit_name(Unit u);
std::optional<Unit> unit_from_name(const std::string& name);

const char* facing_name(Facing f);
std::optional<Facing> facing_from_name(const std::string& name);
double facing_angle_deg(Facing f);

// Dimension keys for each shape, in canonical order.
const std::vector<std::string>& dim_keys(Shape s);

struct GeometrySpec {
  Shape shape = Shape::Square;
  std::map<std::string, double> dims;
  Unit unit = Unit::Mm;
  Eigen::Vector3d center{0, 0, 0};
  double orientation_deg = 0.0;
  Facing facing = Facing::Up;    // semicircle only
  double mesh_size = 0.0;        // 0 = unspecified
  // Parameters the instruction explicitly states. Empty means the default
  // rule applies: all dims, plus center/orientation/mesh/facing when they
  // differ from their defaults.
  std::set<std::string> requested;

  std::set<std::string> requested_params() const;
};

struct InvalidSpec : std::runtime_error {
  explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};

// Empty when the spec satisfies all shape invariants (positive dims,
// required keys, I-beam tw < b and 2*tf < h, bent pipe bendRadius >
// pipeRadius and 0 < bendAngle <= 180, orientation a multiple of 15).
std::vector<std::string> spec_problems(const GeometrySpec& spec);

}  // namespace geogen::kernel
