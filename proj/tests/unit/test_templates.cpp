#include <doctest.h>

#include "geogen/dataset/templates.hpp"

using namespace geogen;
using namespace geogen::dataset;
using kernel::GeometrySpec;
using kernel::Shape;

namespace {

const InstructionTemplate& by_pattern(Shape shape, const std::string& needle) {
  for (const InstructionTemplate& t : templates_for(shape))
    if (t.pattern.find(needle) != std::string::npos) return t;
  FAIL("no template matching: " << needle);
  return templates_for(shape).front();
}

}  // namespace

TEST_CASE("every shape has exactly eight templates with stable ids") {
  for (Shape shape : kernel::kAllShapes) {
    const auto& ts = templates_for(shape);
    REQUIRE(ts.size() == 8);
    for (size_t i = 0; i < ts.size(); ++i) {
      CHECK(ts[i].id == static_cast<int>(i) + 1);
      CHECK(ts[i].shape == shape);
      CHECK_FALSE(placeholder_names(ts[i].pattern).empty());
    }
  }
}

TEST_CASE("the published circle instruction renders byte-exactly") {
  GeometrySpec s;
  s.shape = Shape::Circle;
  s.dims = {{"radius", 2}};
  s.mesh_size = 0.71;
  const auto& t =
      by_pattern(Shape::Circle, "Generate gmsh script: {radius} circle");
  CHECK(render_instruction(t, s) ==
        "Generate gmsh script: 2 circle with mesh 0.71");
}

TEST_CASE("the published ibeam instruction renders byte-exactly") {
  GeometrySpec s;
  s.shape = Shape::IBeam;
  s.dims = {{"h", 560}, {"b", 518}, {"tw", 28}, {"tf", 78}};
  const auto& t = by_pattern(Shape::IBeam, "d={h}");
  CHECK(render_instruction(t, s) ==
        "Create gmsh geometry for I-beam: d=560, bf=518, tw=28, tf=78 mm");
}

TEST_CASE("integers render bare and floats with two decimals") {
  GeometrySpec s;
  s.shape = Shape::Square;
  s.dims = {{"side", 50}};
  const auto& t = by_pattern(Shape::Square, "side length {side} {unit}");
  CHECK(render_instruction(t, s) ==
        "Create a gmsh script for a square with side length 50 mm");
  s.dims["side"] = 51.5;
  CHECK(render_instruction(t, s) ==
        "Create a gmsh script for a square with side length 51.50 mm");
}

TEST_CASE("cm specs render their unit") {
  GeometrySpec s;
  s.shape = Shape::Square;
  s.dims = {{"side", 5}};
  s.unit = kernel::Unit::Cm;
  const auto& t = by_pattern(Shape::Square, "side length {side} {unit}");
  CHECK(render_instruction(t, s) ==
        "Create a gmsh script for a square with side length 5 cm");
}

TEST_CASE("zero center renders as the origin, explicit centers as tuples") {
  GeometrySpec s;
  s.shape = Shape::Square;
  s.dims = {{"side", 10}};
  const auto& t = by_pattern(Shape::Square, "centred at {center}");
  std::string at_origin = render_instruction(t, s);
  CHECK(at_origin.find("centred at the origin") != std::string::npos);
  s.center = Eigen::Vector3d(12, -7.25, 0);
  std::string at_point = render_instruction(t, s);
  CHECK(at_point.find("centred at (12, -7.25)") != std::string::npos);
}

TEST_CASE("semicircle orientation placeholder takes the facing word") {
  GeometrySpec s;
  s.shape = Shape::SemiCircle;
  s.dims = {{"radius", 25}};
  s.facing = kernel::Facing::Left;
  const auto& t = by_pattern(Shape::SemiCircle, "facing {orientation}");
  CHECK(render_instruction(t, s).find("facing left") != std::string::npos);
}

TEST_CASE("bent pipe radius placeholder names the pipe radius") {
  GeometrySpec s;
  s.shape = Shape::BentPipe;
  s.dims = {{"pipeRadius", 12.5}, {"bendRadius", 50}, {"bendAngle", 90}};
  const auto& t =
      by_pattern(Shape::BentPipe, "{unit}, bent through {bendAngle}");
  std::string text = render_instruction(t, s);
  CHECK(text.find("radius 12.50 mm") != std::string::npos);
  CHECK(text.find("bent through 90 degrees") != std::string::npos);
}

TEST_CASE("missing values throw instead of rendering blanks") {
  GeometrySpec s;
  s.shape = Shape::Circle;
  s.dims = {{"radius", 2}};
  // template wants a mesh size the spec does not carry
  const auto& t =
      by_pattern(Shape::Circle, "Generate gmsh script: {radius} circle");
  CHECK_THROWS_AS(render_instruction(t, s), MissingPlaceholderValue);
}

TEST_CASE("placeholder_names reports order of first appearance") {
  auto names = placeholder_names("a {x} b {y} c {x}");
  REQUIRE(names.size() == 2);
  CHECK(names[0] == "x");
  CHECK(names[1] == "y");
  CHECK(placeholder_names("no slots here").empty());
}

TEST_CASE("all five styles appear across each shape's templates") {
  for (Shape shape : kernel::kAllShapes) {
    CAPTURE(kernel::shape_name(shape));
    bool seen[5] = {};
    for (const InstructionTemplate& t : templates_for(shape))
      seen[static_cast<int>(t.style)] = true;
    for (bool s : seen) CHECK(s);
  }
}

TEST_CASE("style names are the lowercase tags") {
  CHECK(std::string(template_style_name(TemplateStyle::Command)) == "command");
  CHECK(std::string(template_style_name(TemplateStyle::Question)) == "question");
  CHECK(std::string(template_style_name(TemplateStyle::Detailed)) == "detailed");
}
