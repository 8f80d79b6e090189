#include "geogen/kernel/spec.hpp"

#include <cmath>

#include "geogen/support/numeric.hpp"

namespace geogen::kernel {

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Square: return "square";
    case Shape::Rectangle: return "rectangle";
    case Shape::Circle: return "circle";
    case Shape::SemiCircle: return "semicircle";
    case Shape::IBeam: return "ibeam";
    case Shape::Pipe: return "pipe";
    case Shape::BentPipe: return "bentpipe";
  }
  return "?";
}

const char* shape_display_name(Shape s) {
  switch (s) {
    case Shape::Square: return "Square";
    case Shape::Rectangle: return "Rectangle";
    case Shape::Circle: return "Circle";
    case Shape::SemiCircle: return "Semi-Circle";
    case Shape::IBeam: return "I-Beam";
    case Shape::Pipe: return "Pipe";
    case Shape::BentPipe: return "Bent Pipe";
  }
  return "?";
}

std::optional<Shape> shape_from_name(const std::string& name) {
  for (Shape s : kAllShapes)
    if (name == shape_name(s)) return s;
  return std::nullopt;
}

const char* unit_name(Unit u) { return u == Unit::Mm ? "mm" : "cm"; }

std::optional<Unit> unit_from_name(const std::string& name) {
  if (name == "mm") return Unit::Mm;
  if (name == "cm") return Unit::Cm;
  return std::nullopt;
}

const char* facing_name(Facing f) {
  switch (f) {
    case Facing::Up: return "up";
    case Facing::Down: return "down";
    case Facing::Left: return "left";
    case Facing::Right: return "right";
  }
  return "?";
}

std::optional<Facing> facing_from_name(const std::string& name) {
  if (name == "up") return Facing::Up;
  if (name == "down") return Facing::Down;
  if (name == "left") return Facing::Left;
  if (name == "right") return Facing::Right;
  return std::nullopt;
}

double facing_angle_deg(Facing f) {
  switch (f) {
    case Facing::Right: return 0.0;
    case Facing::Up: return 90.0;
    case Facing::Left: return 180.0;
    case Facing::Down: return 270.0;
  }
  return 0.0;
}

const std::vector<std::string>& dim_keys(Shape s) {
  static const std::vector<std::string> square{"side"};
  static const std::vector<std::string> rect{"width", "height"};
  static const std::vector<std::string> circle{"radius"};
  static const std::vector<std::string> ibeam{"h", "b", "tw", "tf"};
  static const std::vector<std::string> pipe{"radius", "length"};
  static const std::vector<std::string> bent{"pipeRadius", "bendRadius", "bendAngle"};
  switch (s) {
    case Shape::Square: return square;
    case Shape::Rectangle: return rect;
    case Shape::Circle:
    case Shape::SemiCircle: return circle;
    case Shape::IBeam: return ibeam;
    case Shape::Pipe: return pipe;
    case Shape::BentPipe: return bent;
  }
  return square;
}

std::set<std::string> GeometrySpec::requested_params() const {
  if (!requested.empty()) return requested;
  std::set<std::string> out;
  for (const auto& [k, v] : dims) out.insert(k);
  if (center.norm() != 0.0) out.insert("center");
  if (orientation_deg != 0.0) out.insert("orientation");
  if (mesh_size > 0.0) out.insert("mesh_size");
  if (shape == Shape::SemiCircle) out.insert("facing");
  return out;
}

std::vector<std::string> spec_problems(const GeometrySpec& spec) {
  std::vector<std::string> out;
  for (const std::string& k : dim_keys(spec.shape)) {
    auto it = spec.dims.find(k);
    if (it == spec.dims.end()) {
      out.push_back("missing dimension '" + k + "'");
      continue;
    }
    if (!(it->second > 0.0))
      out.push_back("dimension '" + k + "' must be positive");
  }
  auto dim = [&](const char* k) {
    auto it = spec.dims.find(k);
    return it == spec.dims.end() ? 0.0 : it->second;
  };
  if (spec.shape == Shape::IBeam && !spec.dims.empty()) {
    if (dim("tw") > 0 && dim("b") > 0 && dim("tw") >= dim("b"))
      out.push_back("web thickness tw must be smaller than flange width b");
    if (dim("tf") > 0 && dim("h") > 0 && 2 * dim("tf") >= dim("h"))
      out.push_back("flange thickness tf must satisfy 2*tf < h");
  }
  if (spec.shape == Shape::BentPipe && !spec.dims.empty()) {
    if (dim("bendRadius") > 0 && dim("pipeRadius") > 0 &&
        dim("bendRadius") <= dim("pipeRadius"))
      out.push_back("bendRadius must exceed pipeRadius");
    double angle = dim("bendAngle");
    if (!(angle > 0.0 && angle <= 180.0))
      out.push_back("bendAngle must lie in (0, 180] degrees");
  }
  double o = spec.orientation_deg;
  if (o < 0.0 || o > 360.0 || std::fabs(o / 15.0 - std::round(o / 15.0)) > 1e-9)
    out.push_back("orientation must be a multiple of 15 degrees in [0, 360]");
  if (spec.shape != Shape::Pipe && spec.shape != Shape::BentPipe &&
      spec.center.z() != 0.0)
    out.push_back("center z must be 0 for planar shapes");
  if (spec.mesh_size < 0.0) out.push_back("mesh_size must not be negative");
  return out;
}

}  // namespace geogen::kernel
