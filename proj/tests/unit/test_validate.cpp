#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "geogen/geo/validate.hpp"

using namespace geogen::geo;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(GEOGEN_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int count_messages(const ValidationReport& rep, const std::string& needle) {
  int n = 0;
  for (const Diagnostic& d : rep.diagnostics)
    if (d.message.find(needle) != std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("a clean script validates at both levels") {
  ValidationReport rep = validate(fixture("fig4_circle.geo"));
  CHECK(rep.syntax_ok);
  CHECK(rep.model_ok);
  CHECK_FALSE(has_errors(rep.diagnostics));
  CHECK(rep.model.points.size() == 5);
  CHECK(rep.model.curves.size() == 4);
  CHECK(rep.model.surfaces.size() == 1);
}

TEST_CASE("syntax error fails both levels and keeps the model empty") {
  ValidationReport rep = validate("Point(1) = {0, 0, 0, 1;\n");
  CHECK_FALSE(rep.syntax_ok);
  CHECK_FALSE(rep.model_ok);
  CHECK(rep.model.points.empty());
}

TEST_CASE("evaluation error passes syntax but fails the model") {
  ValidationReport rep = validate("Point(1) = {missing, 0, 0, 1};\n");
  CHECK(rep.syntax_ok);
  CHECK_FALSE(rep.model_ok);
  CHECK(count_messages(rep, "undefined variable 'missing'") == 1);
}

TEST_CASE("published bent-pipe attempt fails for the documented reasons") {
  ValidationReport rep = validate(fixture("fig11_bentpipe.geo"));
  CHECK(rep.syntax_ok);
  CHECK_FALSE(rep.model_ok);
  CHECK(count_messages(rep, "keyword 'circle' should be spelled 'Circle'") == 1);
  CHECK(count_messages(rep, "unsupported Extrude form") == 1);
  CHECK(count_messages(rep, "undefined variable 'new'") == 1);
  CHECK(count_messages(rep, "undefined variable 'PipeProfile'") == 1);
  bool warn_only_casing = false;
  for (const Diagnostic& d : rep.diagnostics)
    if (d.code == DiagCode::NonCanonicalKeyword)
      warn_only_casing = d.severity == Severity::Warning;
  CHECK(warn_only_casing);
}

TEST_CASE("declared unit comes from the first units comment") {
  ParseResult p = parse(
      "// a header\n"
      "// units: mm\n"
      "// units: cm\n"
      "x = 1;\n");
  REQUIRE(p.ok);
  auto unit = declared_unit(p.program);
  REQUIRE(unit.has_value());
  CHECK(*unit == "mm");
}

TEST_CASE("declared unit tolerates spacing and is absent when undeclared") {
  ParseResult p1 = parse("//   units:   cm  \n");
  auto u1 = declared_unit(p1.program);
  REQUIRE(u1.has_value());
  CHECK(*u1 == "cm");

  ParseResult p2 = parse("// dimensions in mm\nx = 1;\n");
  CHECK_FALSE(declared_unit(p2.program).has_value());
}

TEST_CASE("empty input validates as an empty model") {
  ValidationReport rep = validate("");
  CHECK(rep.syntax_ok);
  CHECK(rep.model_ok);
  CHECK(rep.diagnostics.empty());
  CHECK(rep.model.points.empty());
}
