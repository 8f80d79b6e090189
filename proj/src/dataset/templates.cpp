#include "geogen/dataset/templates.hpp"

#include <algorithm>

#include "geogen/support/numeric.hpp"

namespace geogen::dataset {

using kernel::GeometrySpec;
using kernel::Shape;

namespace {

constexpr TemplateStyle kCommand = TemplateStyle::Command;
constexpr TemplateStyle kRequest = TemplateStyle::Request;
constexpr TemplateStyle kQuestion = TemplateStyle::Question;
constexpr TemplateStyle kTechnical = TemplateStyle::Technical;
constexpr TemplateStyle kDetailed = TemplateStyle::Detailed;

std::vector<InstructionTemplate> make_templates(
    Shape shape, std::initializer_list<std::pair<const char*, TemplateStyle>> list) {
  std::vector<InstructionTemplate> out;
  int id = 1;
  for (const auto& [pattern, style] : list)
    out.push_back({shape, id++, pattern, style});
  return out;
}

const std::vector<InstructionTemplate>& square_templates() {
  static const auto t = make_templates(
      Shape::Square,
      {
          {"Create a gmsh script for a square with side length {side} units "
           "centred at {center}",
           kCommand},
          {"Create a gmsh script for a square with side length {side} {unit}",
           kCommand},
          {"Make a gmsh script for a {side} {unit} square", kRequest},
          {"Can you write a gmsh script for a square with sides of {side} "
           "{unit}?",
           kQuestion},
          {"Generate gmsh script: square, side {side} {unit}, mesh {mesh_size}",
           kTechnical},
          {"Generate a gmsh script for a square with side length {side} {unit}, "
           "centred at {center}, rotated {orientation} degrees",
           kDetailed},
          {"I need a gmsh geometry of a square with {side} {unit} sides centred "
           "at {center}",
           kRequest},
          {"Write a gmsh script for a square with side {side} {unit} and mesh "
           "size {mesh_size}",
           kCommand},
      });
  return t;
}

const std::vector<InstructionTemplate>& rectangle_templates() {
  static const auto t = make_templates(
      Shape::Rectangle,
      {
          {"Create a gmsh script for a rectangle with width {width} {unit} and "
           "height {height} {unit}",
           kCommand},
          {"Make a gmsh script for a {width} by {height} {unit} rectangle",
           kRequest},
          {"Generate gmsh script: rectangle {width} x {height} {unit}",
           kTechnical},
          {"Can you generate a gmsh script for a rectangle {width} {unit} wide "
           "and {height} {unit} tall?",
           kQuestion},
          {"Generate a gmsh script for a rectangle with width {width} {unit} "
           "and height {height} {unit}, centred at {center}, rotated "
           "{orientation} degrees",
           kDetailed},
          {"Create a gmsh script for a rectangle of {width} x {height} {unit} "
           "centred at {center}",
           kCommand},
          {"I need a gmsh geometry of a rectangle with width {width} {unit}, "
           "height {height} {unit} and mesh size {mesh_size}",
           kRequest},
          {"Could you write a gmsh script for a {width} x {height} {unit} "
           "rectangle with mesh {mesh_size}?",
           kQuestion},
      });
  return t;
}

const std::vector<InstructionTemplate>& circle_templates() {
  static const auto t = make_templates(
      Shape::Circle,
      {
          {"Create a gmsh script for a circle with radius {radius} {unit}",
           kCommand},
          {"Make a gmsh script for a {radius} {unit} circle", kRequest},
          {"Generate gmsh script: {radius} circle with mesh {mesh_size}",
           kTechnical},
          {"Can you create a gmsh script for a circle of radius {radius} "
           "{unit}?",
           kQuestion},
          {"Generate a gmsh script for a {radius} {unit} circle centred at "
           "{center} with mesh size {mesh_size}",
           kDetailed},
          {"Write a gmsh script for a circle with radius {radius} {unit} "
           "centred at {center}",
           kCommand},
          {"I need a gmsh geometry of a circle, radius {radius} {unit}, mesh "
           "size {mesh_size}",
           kRequest},
          {"Generate a gmsh script for a {radius} unit circle with mesh size "
           "{mesh_size}",
           kDetailed},
      });
  return t;
}

const std::vector<InstructionTemplate>& semicircle_templates() {
  static const auto t = make_templates(
      Shape::SemiCircle,
      {
          {"Create a gmsh script for a semicircle with radius {radius} {unit} "
           "facing {orientation}",
           kCommand},
          {"Make a gmsh script for a {radius} semicircle facing {orientation}",
           kRequest},
          {"Can you write a gmsh script for a semicircle of radius {radius} "
           "{unit} facing {orientation}?",
           kQuestion},
          {"Generate gmsh script: semicircle, radius {radius} {unit}, facing "
           "{orientation}",
           kTechnical},
          {"Generate a gmsh script for a semicircle with radius {radius} "
           "{unit} facing {orientation}, centred at {center}",
           kDetailed},
          {"Write a gmsh script for a {radius} {unit} semicircle facing "
           "{orientation} with mesh size {mesh_size}",
           kCommand},
          {"I need a gmsh geometry of a semicircle, radius {radius} {unit}, "
           "facing {orientation}",
           kRequest},
          {"Could you make a gmsh script for a semicircle facing {orientation} "
           "with radius {radius} {unit} and mesh {mesh_size}?",
           kQuestion},
      });
  return t;
}

const std::vector<InstructionTemplate>& ibeam_templates() {
  static const auto t = make_templates(
      Shape::IBeam,
      {
          {"Create gmsh geometry for I-beam: d={h}, bf={b}, tw={tw}, tf={tf} "
           "{unit}",
           kTechnical},
          {"Create a gmsh script for an I-beam with height {h} {unit}, width "
           "{b} {unit}, web thickness {tw} {unit} and flange thickness {tf} "
           "{unit}",
           kCommand},
          {"Make a gmsh script for an I-beam, {h} x {b} {unit} with web {tw} "
           "and flanges {tf}",
           kRequest},
          {"Can you generate a gmsh script for an I-beam of height {h} {unit} "
           "and flange width {b} {unit} with web thickness {tw} {unit} and "
           "flange thickness {tf} {unit}?",
           kQuestion},
          {"Generate a gmsh script for an I-beam with total height {h} {unit}, "
           "flange width {b} {unit}, web thickness {tw} {unit}, flange "
           "thickness {tf} {unit}, centred at {center}",
           kDetailed},
          {"Generate gmsh script: I-beam h={h} b={b} tw={tw} tf={tf} {unit}, "
           "mesh {mesh_size}",
           kTechnical},
          {"Write a gmsh script for an I-beam section, height {h} {unit}, "
           "width {b} {unit}, web {tw} {unit}, flanges {tf} {unit}",
           kCommand},
          {"Generate a gmsh script for an I-beam with height {h} {unit}, width "
           "{b} {unit}, web thickness {tw} {unit} and flange thickness {tf} "
           "{unit}, rotated {orientation} degrees",
           kDetailed},
      });
  return t;
}

const std::vector<InstructionTemplate>& pipe_templates() {
  static const auto t = make_templates(
      Shape::Pipe,
      {
          {"Create a gmsh script for a pipe with radius {radius} {unit} and "
           "length {length} {unit}",
           kCommand},
          {"Make a gmsh script for a {radius} {unit} pipe of length {length} "
           "{unit}",
           kRequest},
          {"Generate gmsh script: pipe, radius {radius}, length {length} "
           "{unit}",
           kTechnical},
          {"Can you write a gmsh script for a pipe of radius {radius} {unit} "
           "and length {length} {unit}?",
           kQuestion},
          {"Generate a gmsh script for a pipe with radius {radius} {unit} and "
           "length {length} {unit}, centred at {center}",
           kDetailed},
          {"Write a gmsh script for a cylindrical pipe, radius {radius} "
           "{unit}, length {length} {unit}, mesh size {mesh_size}",
           kCommand},
          {"I need a gmsh geometry of a pipe with radius {radius} {unit} and "
           "length {length} {unit}",
           kRequest},
          {"Could you create a gmsh script for a {length} {unit} long pipe "
           "with radius {radius} {unit}?",
           kQuestion},
      });
  return t;
}

const std::vector<InstructionTemplate>& bentpipe_templates() {
  static const auto t = make_templates(
      Shape::BentPipe,
      {
          {"Create a gmsh script for a bent pipe with radius {radius} {unit} "
           "and bend angle {bendAngle} degrees",
           kCommand},
          {"Make a gmsh script for a {radius} {unit} pipe bent through "
           "{bendAngle} degrees",
           kRequest},
          {"Generate gmsh script: bent pipe, radius {radius} {unit}, bend "
           "{bendAngle} degrees",
           kTechnical},
          {"Can you write a gmsh script for a bent pipe of radius {radius} "
           "{unit} with a {bendAngle} degree bend?",
           kQuestion},
          {"Generate a gmsh script for a bent pipe with radius {radius} "
           "{unit}, bent through {bendAngle} degrees, centred at {center}",
           kDetailed},
          {"Write a gmsh script for a bent pipe, radius {radius} {unit}, bend "
           "angle {bendAngle} degrees, mesh size {mesh_size}",
           kCommand},
          {"I need a gmsh geometry of a pipe with radius {radius} {unit} bent "
           "at {bendAngle} degrees",
           kRequest},
          {"Could you create a gmsh script for a {radius} {unit} bent pipe "
           "with a bend of {bendAngle} degrees?",
           kQuestion},
      });
  return t;
}

std::string center_text(const GeometrySpec& spec) {
  if (spec.center.norm() == 0.0) return "the origin";
  std::string out = "(" + format_param(spec.center.x()) + ", " +
                    format_param(spec.center.y());
  if (spec.center.z() != 0.0) out += ", " + format_param(spec.center.z());
  return out + ")";
}

std::string placeholder_value(const std::string& name, const GeometrySpec& spec) {
  auto dim = [&](const char* key) {
    auto it = spec.dims.find(key);
    if (it == spec.dims.end())
      throw MissingPlaceholderValue("spec lacks dimension '" + std::string(key) +
                                    "' required by the template");
    return format_param(it->second);
  };
  if (name == "radius")
    return dim(spec.shape == Shape::BentPipe ? "pipeRadius" : "radius");
  if (name == "side" || name == "width" || name == "height" || name == "h" ||
      name == "b" || name == "tw" || name == "tf" || name == "length" ||
      name == "bendAngle")
    return dim(name.c_str());
  if (name == "unit") return kernel::unit_name(spec.unit);
  if (name == "center") return center_text(spec);
  if (name == "orientation") {
    if (spec.shape == Shape::SemiCircle) return kernel::facing_name(spec.facing);
    return format_param(spec.orientation_deg);
  }
  if (name == "mesh_size") {
    if (!(spec.mesh_size > 0.0))
      throw MissingPlaceholderValue("spec lacks a mesh size required by the template");
    return format_param(spec.mesh_size);
  }
  throw MissingPlaceholderValue("unknown placeholder '" + name + "'");
}

}  // namespace

const char* template_style_name(TemplateStyle s) {
  switch (s) {
    case TemplateStyle::Command: return "command";
    case TemplateStyle::Request: return "request";
    case TemplateStyle::Question: return "question";
    case TemplateStyle::Technical: return "technical";
    case TemplateStyle::Detailed: return "detailed";
  }
  return "?";
}

bool InstructionTemplate::has_placeholder(const std::string& name) const {
  return pattern.find("{" + name + "}") != std::string::npos;
}

const std::vector<InstructionTemplate>& templates_for(Shape shape) {
  switch (shape) {
    case Shape::Square: return square_templates();
    case Shape::Rectangle: return rectangle_templates();
    case Shape::Circle: return circle_templates();
    case Shape::SemiCircle: return semicircle_templates();
    case Shape::IBeam: return ibeam_templates();
    case Shape::Pipe: return pipe_templates();
    case Shape::BentPipe: return bentpipe_templates();
  }
  return square_templates();
}

std::vector<std::string> placeholder_names(const std::string& pattern) {
  std::vector<std::string> out;
  size_t pos = 0;
  while ((pos = pattern.find('{', pos)) != std::string::npos) {
    size_t end = pattern.find('}', pos);
    if (end == std::string::npos) break;
    std::string name = pattern.substr(pos + 1, end - pos - 1);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    pos = end + 1;
  }
  return out;
}

std::string render_instruction(const InstructionTemplate& tmpl,
                               const kernel::GeometrySpec& spec) {
  std::string out;
  const std::string& p = tmpl.pattern;
  size_t pos = 0;
  while (pos < p.size()) {
    if (p[pos] == '{') {
      size_t end = p.find('}', pos);
      if (end == std::string::npos) {
        out += p.substr(pos);
        break;
      }
      out += placeholder_value(p.substr(pos + 1, end - pos - 1), spec);
      pos = end + 1;
    } else {
      out += p[pos++];
    }
  }
  return out;
}

}  // namespace geogen::dataset
