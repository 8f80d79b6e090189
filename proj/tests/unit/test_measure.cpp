#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "geogen/geo/validate.hpp"
#include "geogen/kernel/builder.hpp"
#include "geogen/kernel/measure.hpp"

using namespace geogen;
using namespace geogen::kernel;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GEOGEN_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

geo::GeoModel model_of(const std::string& script) {
  geo::ValidationReport rep = geo::validate(script);
  REQUIRE(rep.model_ok);
  return rep.model;
}

MeasureResult measure_single(const std::string& script) {
  geo::GeoModel m = model_of(script);
  auto classified = classify(m);
  REQUIRE(classified.size() == 1);
  return measure(m, classified[0]);
}

}  // namespace

TEST_CASE("published circle measures exactly") {
  MeasureResult r = measure_single(fixture("fig4_circle.geo"));
  REQUIRE(r.geometry.shape == Shape::Circle);
  CHECK(r.geometry.dims.at("radius") == doctest::Approx(2).epsilon(1e-12));
  CHECK(r.geometry.mesh_size == doctest::Approx(0.71).epsilon(1e-12));
  CHECK(r.geometry.center.norm() == doctest::Approx(0).epsilon(1e-12));
  CHECK(r.geometry.body_count == 1);
  CHECK(r.unavailable.empty());
}

TEST_CASE("published ibeam measures exactly") {
  MeasureResult r = measure_single(fixture("fig4_ibeam.geo"));
  REQUIRE(r.geometry.shape == Shape::IBeam);
  CHECK(r.geometry.dims.at("h") == doctest::Approx(560).epsilon(1e-12));
  CHECK(r.geometry.dims.at("b") == doctest::Approx(518).epsilon(1e-12));
  CHECK(r.geometry.dims.at("tw") == doctest::Approx(28).epsilon(1e-12));
  CHECK(r.geometry.dims.at("tf") == doctest::Approx(78).epsilon(1e-12));
  CHECK(r.unavailable.empty());
}

TEST_CASE("built shapes measure back to the spec") {
  struct Case {
    Shape shape;
    std::map<std::string, double> dims;
  };
  const Case cases[] = {
      {Shape::Square, {{"side", 51.5}}},
      {Shape::Rectangle, {{"width", 40}, {"height", 20}}},
      {Shape::Circle, {{"radius", 2.25}}},
      {Shape::SemiCircle, {{"radius", 25}}},
      {Shape::IBeam, {{"h", 560}, {"b", 518}, {"tw", 28}, {"tf", 78}}},
      {Shape::Pipe, {{"radius", 12.5}, {"length", 100}}},
      {Shape::BentPipe, {{"pipeRadius", 12.5}, {"bendRadius", 50}, {"bendAngle", 90}}},
  };
  for (const Case& c : cases) {
    CAPTURE(shape_name(c.shape));
    GeometrySpec s;
    s.shape = c.shape;
    s.dims = c.dims;
    MeasureResult r = measure_single(build_geometry(s));
    REQUIRE(r.geometry.shape == c.shape);
    for (const auto& [k, v] : c.dims) {
      CAPTURE(k);
      REQUIRE(r.geometry.dims.count(k) == 1);
      CHECK(r.geometry.dims.at(k) == doctest::Approx(v).epsilon(1e-9));
    }
  }
}

TEST_CASE("center and mesh size are recovered") {
  GeometrySpec s;
  s.shape = Shape::Circle;
  s.dims = {{"radius", 3}};
  s.center = Eigen::Vector3d(12, -8, 0);
  s.mesh_size = 0.4;
  MeasureResult r = measure_single(build_geometry(s));
  CHECK(r.geometry.center.x() == doctest::Approx(12));
  CHECK(r.geometry.center.y() == doctest::Approx(-8));
  CHECK(r.geometry.mesh_size == doctest::Approx(0.4));
}

TEST_CASE("orientation is recovered modulo the shape's symmetry") {
  GeometrySpec s;
  s.shape = Shape::Rectangle;
  s.dims = {{"width", 30}, {"height", 10}};
  s.orientation_deg = 30;
  MeasureResult r = measure_single(build_geometry(s));
  double delta = std::fmod(r.geometry.orientation_deg - 30.0 + 540.0, 180.0);
  if (delta > 90) delta = 180 - delta;
  CHECK(delta == doctest::Approx(0).epsilon(1e-9));
}

TEST_CASE("semicircle facing snaps to cardinals") {
  for (Facing f : {Facing::Up, Facing::Down, Facing::Left, Facing::Right}) {
    CAPTURE(facing_name(f));
    GeometrySpec s;
    s.shape = Shape::SemiCircle;
    s.dims = {{"radius", 10}};
    s.facing = f;
    MeasureResult r = measure_single(build_geometry(s));
    REQUIRE(r.geometry.facing.has_value());
    CHECK(*r.geometry.facing == f);
  }
}

TEST_CASE("mesh size mode picks the most common value, smallest on ties") {
  geo::GeoModel m = model_of(
      "Point(1) = {0, 0, 0, 0.5};\n"
      "Point(2) = {1, 0, 0, 0.5};\n"
      "Point(3) = {1, 1, 0, 2.0};\n"
      "Line(1) = {1, 2};\n"
      "Line(2) = {2, 3};\n");
  auto comps = split_components(m);
  REQUIRE(comps.size() == 1);
  CHECK(mesh_size_mode(m, comps[0]) == doctest::Approx(0.5));

  geo::GeoModel tie = model_of(
      "Point(1) = {0, 0, 0, 2.0};\n"
      "Point(2) = {1, 0, 0, 0.5};\n"
      "Line(1) = {1, 2};\n");
  auto tcomps = split_components(tie);
  CHECK(mesh_size_mode(tie, tcomps[0]) == doctest::Approx(0.5));
}

TEST_CASE("ibeam fit tolerates rotation") {
  GeometrySpec s;
  s.shape = Shape::IBeam;
  s.dims = {{"h", 100}, {"b", 60}, {"tw", 10}, {"tf", 12}};
  s.orientation_deg = 45;
  MeasureResult r = measure_single(build_geometry(s));
  REQUIRE(r.geometry.shape == Shape::IBeam);
  CHECK(r.geometry.dims.at("h") == doctest::Approx(100).epsilon(1e-9));
  CHECK(r.geometry.dims.at("tw") == doctest::Approx(10).epsilon(1e-9));
  double delta = std::fmod(r.geometry.orientation_deg - 45.0 + 540.0, 180.0);
  if (delta > 90) delta = 180 - delta;
  CHECK(delta == doctest::Approx(0).epsilon(1e-9));
}

TEST_CASE("pipe without its extrusion reports length unavailable") {
  GeometrySpec s;
  s.shape = Shape::Pipe;
  s.dims = {{"radius", 5}, {"length", 40}};
  std::string script = build_geometry(s);
  // drop the Extrude line
  std::string trimmed;
  std::istringstream in(script);
  std::string line;
  while (std::getline(in, line))
    if (line.find("Extrude") == std::string::npos) trimmed += line + "\n";
  geo::GeoModel m = model_of(trimmed);
  auto classified = classify(m);
  REQUIRE(classified.size() == 1);
  // without the extrusion this is just a circle profile
  if (classified[0].shape == Shape::Pipe) {
    MeasureResult r = measure(m, classified[0]);
    CHECK(std::find(r.unavailable.begin(), r.unavailable.end(), "length") !=
          r.unavailable.end());
  } else {
    CHECK(classified[0].shape == Shape::Circle);
  }
}

TEST_CASE("body count counts the whole model") {
  std::string two =
      "Point(1) = {0, 0, 0, 1};\n"
      "Point(2) = {1, 0, 0, 1};\n"
      "Point(3) = {1, 1, 0, 1};\n"
      "Point(4) = {0, 1, 0, 1};\n"
      "Line(1) = {1, 2};\n"
      "Line(2) = {2, 3};\n"
      "Line(3) = {3, 4};\n"
      "Line(4) = {4, 1};\n"
      "Line Loop(1) = {1, 2, 3, 4};\n"
      "Plane Surface(1) = {1};\n"
      "Point(11) = {10, 0, 0, 1};\n"
      "Point(12) = {11, 0, 0, 1};\n"
      "Point(13) = {11, 1, 0, 1};\n"
      "Point(14) = {10, 1, 0, 1};\n"
      "Line(11) = {11, 12};\n"
      "Line(12) = {12, 13};\n"
      "Line(13) = {13, 14};\n"
      "Line(14) = {14, 11};\n"
      "Line Loop(11) = {11, 12, 13, 14};\n"
      "Plane Surface(11) = {11};\n";
  geo::GeoModel m = model_of(two);
  auto classified = classify(m);
  REQUIRE(classified.size() == 2);
  MeasureResult r = measure(m, classified[0]);
  CHECK(r.geometry.body_count == 2);
}
