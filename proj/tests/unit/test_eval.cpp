#include <doctest.h>

#include <cmath>

#include "geogen/geo/eval.hpp"
#include "geogen/geo/parser.hpp"

using namespace geogen::geo;

namespace {

EvalResult run(std::string_view src) {
  ParseResult p = parse(src);
  REQUIRE(p.ok);
  return evaluate(p.program);
}

bool has_diag(const EvalResult& r, DiagCode code, Severity sev) {
  for (const Diagnostic& d : r.diagnostics)
    if (d.code == code && d.severity == sev) return true;
  return false;
}

}  // namespace

TEST_CASE("variables and arithmetic feed point coordinates") {
  EvalResult r = run(
      "w = 40;\n"
      "h = w / 2;\n"
      "Point(1) = {-w/2, -h/2, 0, 1.0};\n"
      "Point(2) = {w/2 + 1, h/2 - 1, 0, 1.0};\n");
  CHECK(r.ok);
  REQUIRE(r.model.points.count(1) == 1);
  CHECK(r.model.points.at(1).pos.x() == doctest::Approx(-20));
  CHECK(r.model.points.at(1).pos.y() == doctest::Approx(-10));
  CHECK(r.model.points.at(2).pos.x() == doctest::Approx(21));
  CHECK(r.model.points.at(2).pos.y() == doctest::Approx(9));
  CHECK(r.model.variables.at("w") == doctest::Approx(40));
  CHECK(r.model.variables.at("h") == doctest::Approx(20));
}

TEST_CASE("Cos and Sin work in radians with Pi") {
  EvalResult r = run(
      "x = Cos(Pi/3);\n"
      "y = Sin(Pi/6);\n");
  CHECK(r.ok);
  CHECK(r.model.variables.at("x") == doctest::Approx(0.5));
  CHECK(r.model.variables.at("y") == doctest::Approx(0.5));
}

TEST_CASE("later assignments shadow earlier ones") {
  EvalResult r = run("a = 1;\na = a + 1;\n");
  CHECK(r.model.variables.at("a") == doctest::Approx(2));
}

TEST_CASE("undefined variable is an error but evaluation continues") {
  ParseResult p = parse(
      "Point(1) = {nope, 0, 0, 1};\n"
      "Point(2) = {1, 0, 0, 1};\n");
  REQUIRE(p.ok);
  EvalResult r = evaluate(p.program);
  CHECK_FALSE(r.ok);
  CHECK(has_diag(r, DiagCode::UndefinedVariable, Severity::Error));
  CHECK(r.model.points.count(1) == 0);
  CHECK(r.model.points.count(2) == 1);
}

TEST_CASE("dangling point reference in a line") {
  EvalResult r = run(
      "Point(1) = {0, 0, 0, 1};\n"
      "Line(1) = {1, 9};\n");
  CHECK_FALSE(r.ok);
  CHECK(has_diag(r, DiagCode::DanglingReference, Severity::Error));
  CHECK(r.model.curves.empty());
}

TEST_CASE("dangling curve reference in a loop and loop reference in a surface") {
  EvalResult r = run(
      "Point(1) = {0, 0, 0, 1};\n"
      "Point(2) = {1, 0, 0, 1};\n"
      "Line(1) = {1, 2};\n"
      "Line Loop(1) = {1, 7};\n"
      "Plane Surface(1) = {3};\n");
  CHECK_FALSE(r.ok);
  CHECK(has_diag(r, DiagCode::DanglingReference, Severity::Error));
  CHECK(r.model.loops.empty());
  CHECK(r.model.surfaces.empty());
}

TEST_CASE("duplicate ids are reported per entity class") {
  EvalResult r = run(
      "Point(1) = {0, 0, 0, 1};\n"
      "Point(1) = {5, 0, 0, 1};\n");
  CHECK_FALSE(r.ok);
  CHECK(has_diag(r, DiagCode::DuplicateId, Severity::Error));
  // first definition wins
  CHECK(r.model.points.at(1).pos.x() == doctest::Approx(0));
}

TEST_CASE("lines and circles share one curve id space") {
  EvalResult r = run(
      "Point(1) = {1, 0, 0, 1};\n"
      "Point(2) = {0, 1, 0, 1};\n"
      "Point(3) = {0, 0, 0, 1};\n"
      "Line(1) = {1, 2};\n"
      "Circle(1) = {1, 3, 2};\n");
  CHECK_FALSE(r.ok);
  CHECK(has_diag(r, DiagCode::DuplicateId, Severity::Error));
  CHECK(r.model.curves.at(1).kind == CurveKind::Line);
}

TEST_CASE("division by zero is an error") {
  EvalResult r = run("x = 1 / 0;\n");
  CHECK_FALSE(r.ok);
  CHECK(has_diag(r, DiagCode::DivisionByZero, Severity::Error));
  CHECK(r.model.variables.count("x") == 0);
}

TEST_CASE("non-integer and non-positive entity ids are invalid") {
  EvalResult r1 = run("Point(1.5) = {0, 0, 0, 1};\n");
  CHECK_FALSE(r1.ok);
  CHECK(has_diag(r1, DiagCode::InvalidId, Severity::Error));

  EvalResult r2 = run("Point(0) = {0, 0, 0, 1};\n");
  CHECK_FALSE(r2.ok);
  CHECK(has_diag(r2, DiagCode::InvalidId, Severity::Error));
}

TEST_CASE("arc with unequal radii warns but still records the curve") {
  EvalResult r = run(
      "Point(1) = {2, 0, 0, 1};\n"
      "Point(2) = {0, 3, 0, 1};\n"
      "Point(3) = {0, 0, 0, 1};\n"
      "Circle(1) = {1, 3, 2};\n");
  CHECK(r.ok);  // warning only
  CHECK(has_diag(r, DiagCode::ArcRadiusMismatch, Severity::Warning));
  REQUIRE(r.model.curves.count(1) == 1);
  CHECK(r.model.curves.at(1).kind == CurveKind::CircleArc);
  CHECK(r.model.curves.at(1).arc_radius == doctest::Approx(2));
}

TEST_CASE("arc records center position and radius") {
  EvalResult r = run(
      "Point(1) = {3, 1, 0, 1};\n"
      "Point(2) = {1, 3, 0, 1};\n"
      "Point(3) = {1, 1, 0, 1};\n"
      "Circle(7) = {1, 3, 2};\n");
  CHECK(r.ok);
  const CurveRecord& arc = r.model.curves.at(7);
  CHECK(arc.arc_center.x() == doctest::Approx(1));
  CHECK(arc.arc_center.y() == doctest::Approx(1));
  CHECK(arc.arc_radius == doctest::Approx(2));
  CHECK(arc.first_point() == 1);
  CHECK(arc.last_point() == 2);
}

TEST_CASE("negative loop entries keep orientation sign") {
  EvalResult r = run(
      "Point(1) = {0, 0, 0, 1};\n"
      "Point(2) = {1, 0, 0, 1};\n"
      "Point(3) = {1, 1, 0, 1};\n"
      "Line(1) = {1, 2};\n"
      "Line(2) = {2, 3};\n"
      "Line(3) = {3, 1};\n"
      "Line Loop(1) = {1, 2, -3};\n"
      "Plane Surface(1) = {1};\n");
  CHECK(r.ok);
  REQUIRE(r.model.loops.count(1) == 1);
  CHECK(r.model.loops.at(1).curves == std::vector<int>{1, 2, -3});
  CHECK(r.model.surfaces.at(1).loops == std::vector<int>{1});
}

TEST_CASE("extrusions record their transform and surfaces") {
  EvalResult r = run(
      "Point(1) = {0, 0, 0, 1};\n"
      "Point(2) = {1, 0, 0, 1};\n"
      "Point(3) = {1, 1, 0, 1};\n"
      "Line(1) = {1, 2};\n"
      "Line(2) = {2, 3};\n"
      "Line(3) = {3, 1};\n"
      "Line Loop(1) = {1, 2, 3};\n"
      "Plane Surface(1) = {1};\n"
      "Extrude {0, 0, 10} { Surface{1}; }\n"
      "Extrude { {0, 0, 1}, {5, 0, 0}, Pi/2 } { Surface{1}; }\n");
  CHECK(r.ok);
  REQUIRE(r.model.extrusions.size() == 2);
  CHECK(r.model.extrusions[0].kind == ExtrusionKind::Translate);
  CHECK(r.model.extrusions[0].delta.z() == doctest::Approx(10));
  CHECK(r.model.extrusions[0].surfaces == std::vector<int>{1});
  CHECK(r.model.extrusions[1].kind == ExtrusionKind::Rotate);
  CHECK(r.model.extrusions[1].axis.z() == doctest::Approx(1));
  CHECK(r.model.extrusions[1].pivot.x() == doctest::Approx(5));
  CHECK(r.model.extrusions[1].angle_rad == doctest::Approx(M_PI / 2));
}

TEST_CASE("extruding an unknown surface dangles") {
  EvalResult r = run(
      "Point(1) = {0, 0, 0, 1};\n"
      "Extrude {0, 0, 1} { Surface{4}; }\n");
  CHECK_FALSE(r.ok);
  CHECK(has_diag(r, DiagCode::DanglingReference, Severity::Error));
  CHECK(r.model.extrusions.empty());
}
