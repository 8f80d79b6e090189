#include "geogen/scoring/suites.hpp"

namespace geogen::scoring {

using kernel::Facing;
using kernel::GeometrySpec;
using kernel::Shape;
using kernel::Unit;

namespace {

GeometrySpec single_spec(Shape shape, std::map<std::string, double> dims,
                         double mesh = 0.0, Facing facing = Facing::Up) {
  GeometrySpec spec;
  spec.shape = shape;
  spec.dims = std::move(dims);
  spec.mesh_size = mesh;
  spec.facing = facing;
  return spec;
}

SuitePrompt single_prompt(std::string id, std::string instruction,
                          GeometrySpec spec) {
  SuitePrompt p;
  p.id = std::move(id);
  p.instruction = std::move(instruction);
  p.expect_single = std::move(spec);
  return p;
}

}  // namespace

DefaultSuites default_suites() {
  DefaultSuites out;
  out.single.name = "single-geometry";
  out.single.prompts = {
      single_prompt("square",
                    "Create a gmsh script for a square with side length 50 "
                    "units centred at the origin",
                    [] {
                      GeometrySpec s = single_spec(Shape::Square, {{"side", 50}});
                      s.requested = {"side", "center"};
                      return s;
                    }()),
      single_prompt("rectangle",
                    "Create a gmsh script for a rectangle with width 40 mm "
                    "and height 20 mm",
                    single_spec(Shape::Rectangle, {{"width", 40}, {"height", 20}})),
      single_prompt("circle", "Generate gmsh script: 2 circle with mesh 0.71",
                    single_spec(Shape::Circle, {{"radius", 2}}, 0.71)),
      single_prompt("semicircle",
                    "Create a gmsh script for a semicircle with radius 25 mm "
                    "facing up",
                    single_spec(Shape::SemiCircle, {{"radius", 25}}, 0.0,
                                Facing::Up)),
      single_prompt("pipe",
                    "Create a gmsh script for a pipe with radius 12.50 mm and "
                    "length 100 mm",
                    single_spec(Shape::Pipe, {{"radius", 12.5}, {"length", 100}})),
      single_prompt("bentpipe",
                    "Create a gmsh script for a bent pipe with radius 12.50 mm "
                    "and bend angle 90 degrees",
                    single_spec(Shape::BentPipe,
                                {{"pipeRadius", 12.5}, {"bendAngle", 90}})),
      single_prompt("ibeam",
                    "Create gmsh geometry for I-beam: d=560, bf=518, tw=28, "
                    "tf=78 mm",
                    single_spec(Shape::IBeam, {{"h", 560}, {"b", 518},
                                               {"tw", 28}, {"tf", 78}})),
  };

  out.multi.name = "multi-body";
  {
    SuitePrompt a;
    a.id = "circle-inside-square";
    a.instruction =
        "Generate a GMSH script for a circle of radius 3cm inside a square of "
        "side length 7cm.";
    MultiBodyExpectation exp;
    GeometrySpec circle = single_spec(Shape::Circle, {{"radius", 3}});
    circle.unit = Unit::Cm;
    GeometrySpec square = single_spec(Shape::Square, {{"side", 7}});
    square.unit = Unit::Cm;
    exp.components = {circle, square};
    exp.relation = kernel::Relation::Inside;
    a.expect_multi = std::move(exp);
    out.multi.prompts.push_back(std::move(a));
  }
  {
    SuitePrompt b;
    b.id = "circle-next-to-square";
    b.instruction = "Give me a Gmsh script for a circle next to a square.";
    MultiBodyExpectation exp;
    exp.components = {single_spec(Shape::Circle, {}),
                      single_spec(Shape::Square, {})};
    exp.relation = kernel::Relation::AdjacentDisjoint;
    b.expect_multi = std::move(exp);
    out.multi.prompts.push_back(std::move(b));
  }
  return out;
}

}  // namespace geogen::scoring
