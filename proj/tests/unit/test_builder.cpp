#include <doctest.h>

#include "geogen/geo/validate.hpp"
#include "geogen/kernel/builder.hpp"
#include "geogen/kernel/spec.hpp"

using namespace geogen;
using namespace geogen::kernel;

namespace {

GeometrySpec square_spec(double side = 50) {
  GeometrySpec s;
  s.shape = Shape::Square;
  s.dims["side"] = side;
  return s;
}

}  // namespace

TEST_CASE("built scripts validate cleanly for every shape") {
  for (Shape shape : kAllShapes) {
    GeometrySpec s;
    s.shape = shape;
    switch (shape) {
      case Shape::Square: s.dims = {{"side", 50}}; break;
      case Shape::Rectangle: s.dims = {{"width", 40}, {"height", 20}}; break;
      case Shape::Circle: s.dims = {{"radius", 2}}; break;
      case Shape::SemiCircle: s.dims = {{"radius", 25}}; break;
      case Shape::IBeam:
        s.dims = {{"h", 560}, {"b", 518}, {"tw", 28}, {"tf", 78}};
        break;
      case Shape::Pipe: s.dims = {{"radius", 12.5}, {"length", 100}}; break;
      case Shape::BentPipe:
        s.dims = {{"pipeRadius", 12.5}, {"bendRadius", 50}, {"bendAngle", 90}};
        break;
    }
    CAPTURE(shape_name(shape));
    std::string script = build_geometry(s);
    geo::ValidationReport rep = geo::validate(script);
    CHECK(rep.syntax_ok);
    CHECK(rep.model_ok);
    CHECK_FALSE(geo::has_errors(rep.diagnostics));
  }
}

TEST_CASE("square script lays out the expected entities") {
  geo::ValidationReport rep = geo::validate(build_geometry(square_spec()));
  REQUIRE(rep.model_ok);
  CHECK(rep.model.points.size() == 4);
  CHECK(rep.model.curves.size() == 4);
  CHECK(rep.model.loops.size() == 1);
  CHECK(rep.model.surfaces.size() == 1);
  for (const auto& [id, p] : rep.model.points) CHECK(p.pos.z() == 0.0);
}

TEST_CASE("unit comment leads the script") {
  GeometrySpec s = square_spec();
  s.unit = Unit::Cm;
  std::string script = build_geometry(s);
  CHECK(script.rfind("// units: cm", 0) == 0);
  s.unit = Unit::Mm;
  CHECK(build_geometry(s).rfind("// units: mm", 0) == 0);
}

TEST_CASE("parameters appear as named variables, not inlined numbers") {
  std::string script = build_geometry(square_spec(51.5));
  CHECK(script.find("side = 51.5;") != std::string::npos);
  GeometrySpec r;
  r.shape = Shape::Rectangle;
  r.dims = {{"width", 40}, {"height", 20}};
  std::string rscript = build_geometry(r);
  CHECK(rscript.find("width = 40;") != std::string::npos);
  CHECK(rscript.find("height = 20;") != std::string::npos);
}

TEST_CASE("mesh size lands on every point when specified") {
  GeometrySpec s = square_spec();
  s.mesh_size = 0.71;
  geo::ValidationReport rep = geo::validate(build_geometry(s));
  REQUIRE(rep.model_ok);
  for (const auto& [id, p] : rep.model.points)
    CHECK(p.mesh_size == doctest::Approx(0.71));
}

TEST_CASE("center offsets every point") {
  GeometrySpec s = square_spec(10);
  s.center = Eigen::Vector3d(7, -3, 0);
  geo::ValidationReport rep = geo::validate(build_geometry(s));
  REQUIRE(rep.model_ok);
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& [id, p] : rep.model.points) sum += p.pos;
  Eigen::Vector3d centroid = sum / static_cast<double>(rep.model.points.size());
  CHECK(centroid.x() == doctest::Approx(7));
  CHECK(centroid.y() == doctest::Approx(-3));
}

TEST_CASE("surface loops wind counterclockwise") {
  geo::ValidationReport rep = geo::validate(build_geometry(square_spec(2)));
  REQUIRE(rep.model_ok);
  const auto& loop = rep.model.loops.begin()->second;
  double area2 = 0;
  for (int signed_id : loop.curves) {
    const auto& c = rep.model.curves.at(std::abs(signed_id));
    auto [a, b] = c.endpoints();
    Eigen::Vector3d pa = rep.model.points.at(signed_id > 0 ? a : b).pos;
    Eigen::Vector3d pb = rep.model.points.at(signed_id > 0 ? b : a).pos;
    area2 += pa.x() * pb.y() - pb.x() * pa.y();
  }
  CHECK(area2 > 0);
}

TEST_CASE("pipe extrudes its circular profile along z") {
  GeometrySpec s;
  s.shape = Shape::Pipe;
  s.dims = {{"radius", 5}, {"length", 40}};
  geo::ValidationReport rep = geo::validate(build_geometry(s));
  REQUIRE(rep.model_ok);
  REQUIRE(rep.model.extrusions.size() == 1);
  CHECK(rep.model.extrusions[0].kind == geo::ExtrusionKind::Translate);
  CHECK(rep.model.extrusions[0].delta.z() == doctest::Approx(40));
}

TEST_CASE("bent pipe rotates its profile about an offset axis") {
  GeometrySpec s;
  s.shape = Shape::BentPipe;
  s.dims = {{"pipeRadius", 5}, {"bendRadius", 30}, {"bendAngle", 90}};
  geo::ValidationReport rep = geo::validate(build_geometry(s));
  REQUIRE(rep.model_ok);
  REQUIRE(rep.model.extrusions.size() == 1);
  CHECK(rep.model.extrusions[0].kind == geo::ExtrusionKind::Rotate);
  CHECK(rep.model.extrusions[0].angle_rad == doctest::Approx(M_PI / 2));
  CHECK(rep.model.extrusions[0].pivot.norm() == doctest::Approx(30));
}

TEST_CASE("invalid specs are rejected up front") {
  GeometrySpec s;  // square with no dims
  s.shape = Shape::Square;
  CHECK_FALSE(spec_problems(s).empty());
  CHECK_THROWS_AS(build_geometry(s), InvalidSpec);

  GeometrySpec bad_beam;
  bad_beam.shape = Shape::IBeam;
  bad_beam.dims = {{"h", 10}, {"b", 5}, {"tw", 6}, {"tf", 1}};  // tw >= b
  CHECK_THROWS_AS(build_geometry(bad_beam), InvalidSpec);

  GeometrySpec bad_bend;
  bad_bend.shape = Shape::BentPipe;
  bad_bend.dims = {{"pipeRadius", 10}, {"bendRadius", 5}, {"bendAngle", 90}};
  CHECK_THROWS_AS(build_geometry(bad_bend), InvalidSpec);

  GeometrySpec bad_angle = square_spec();
  bad_angle.orientation_deg = 7;  // not a multiple of 15
  CHECK_FALSE(spec_problems(bad_angle).empty());
}

TEST_CASE("orientation rotates the square's edges") {
  GeometrySpec s = square_spec(10);
  s.orientation_deg = 45;
  geo::ValidationReport rep = geo::validate(build_geometry(s));
  REQUIRE(rep.model_ok);
  // at 45 degrees one vertex sits straight up from center
  bool has_top_vertex = false;
  for (const auto& [id, p] : rep.model.points)
    if (std::abs(p.pos.x()) < 1e-9 && p.pos.y() > 0) has_top_vertex = true;
  CHECK(has_top_vertex);
}
