#include "geogen/io/json_io.hpp"

namespace geogen::io {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error(what);
}

double number_at(const json& j, const char* key, double fallback,
                 bool required = false) {
  if (!j.contains(key)) {
    if (required) fail(std::string("missing field '") + key + "'");
    return fallback;
  }
  if (!j.at(key).is_number()) fail(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

std::string string_at(const json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) fail(std::string("missing field '") + key + "'");
    return "";
  }
  if (!j.at(key).is_string()) fail(std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace

json diagnostic_json(const geo::Diagnostic& diag) {
  return json{{"severity", geo::to_string(diag.severity)},
              {"code", geo::to_string(diag.code)},
              {"message", diag.message},
              {"line", diag.span.line},
              {"column", diag.span.column},
              {"length", diag.span.length}};
}

json validation_json(const geo::ValidationReport& report) {
  json diags = json::array();
  for (const auto& d : report.diagnostics) diags.push_back(diagnostic_json(d));
  return json{{"syntaxOk", report.syntax_ok},
              {"modelOk", report.model_ok},
              {"diagnostics", std::move(diags)}};
}

json spec_json(const kernel::GeometrySpec& spec) {
  json j;
  j["shape"] = kernel::shape_name(spec.shape);
  j["dims"] = json::object();
  for (const auto& [key, value] : spec.dims) j["dims"][key] = value;
  j["unit"] = kernel::unit_name(spec.unit);
  if (spec.center.norm() != 0.0)
    j["center"] = {spec.center.x(), spec.center.y(), spec.center.z()};
  if (spec.orientation_deg != 0.0) j["orientation"] = spec.orientation_deg;
  if (spec.shape == kernel::Shape::SemiCircle)
    j["facing"] = kernel::facing_name(spec.facing);
  if (spec.mesh_size > 0.0) j["mesh_size"] = spec.mesh_size;
  if (!spec.requested.empty()) {
    j["requested"] = json::array();
    for (const auto& r : spec.requested) j["requested"].push_back(r);
  }
  return j;
}

kernel::GeometrySpec spec_from_json(const json& j) {
  if (!j.is_object()) fail("geometry spec must be an object");
  kernel::GeometrySpec spec;
  std::string shape = string_at(j, "shape", true);
  auto s = kernel::shape_from_name(shape);
  if (!s) fail("unknown shape '" + shape + "'");
  spec.shape = *s;
  if (j.contains("dims")) {
    if (!j.at("dims").is_object()) fail("field 'dims' must be an object");
    for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it) {
      if (!it.value().is_number())
        fail("dimension '" + it.key() + "' must be a number");
      spec.dims[it.key()] = it.value().get<double>();
    }
  }
  std::string unit = string_at(j, "unit", false);
  if (!unit.empty()) {
    auto u = kernel::unit_from_name(unit);
    if (!u) fail("unknown unit '" + unit + "'");
    spec.unit = *u;
  }
  if (j.contains("center")) {
    const json& c = j.at("center");
    if (!c.is_array() || c.size() < 2 || c.size() > 3)
      fail("field 'center' must be an array of 2 or 3 numbers");
    for (size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_number()) fail("center coordinates must be numbers");
      spec.center[static_cast<int>(i)] = c[i].get<double>();
    }
  }
  spec.orientation_deg = number_at(j, "orientation", 0.0);
  std::string facing = string_at(j, "facing", false);
  if (!facing.empty()) {
    auto f = kernel::facing_from_name(facing);
    if (!f) fail("unknown facing '" + facing + "'");
    spec.facing = *f;
  }
  spec.mesh_size = number_at(j, "mesh_size", 0.0);
  if (j.contains("requested")) {
    if (!j.at("requested").is_array()) fail("field 'requested' must be an array");
    for (const auto& r : j.at("requested")) {
      if (!r.is_string()) fail("requested entries must be strings");
      spec.requested.insert(r.get<std::string>());
    }
  }
  return spec;
}

json measure_json(const kernel::MeasureResult& result) {
  const kernel::MeasuredGeometry& g = result.geometry;
  json j;
  j["shape"] = g.shape ? json(kernel::shape_name(*g.shape)) : json();
  j["dims"] = json::object();
  for (const auto& [key, value] : g.dims) j["dims"][key] = value;
  j["center"] = {g.center.x(), g.center.y(), g.center.z()};
  j["meshSize"] = g.mesh_size;
  j["bodyCount"] = g.body_count;
  j["orientation"] = g.orientation_deg;
  if (g.facing) j["facing"] = kernel::facing_name(*g.facing);
  j["unavailable"] = json::array();
  for (const auto& u : result.unavailable) j["unavailable"].push_back(u);
  return j;
}

namespace {

json criterion_json(const scoring::CriterionScore& c) {
  return json{{"points", c.points}, {"rationale", c.rationale}};
}

scoring::CriterionScore criterion_from_json(const json& j) {
  scoring::CriterionScore c;
  if (!j.is_object() || !j.contains("points") ||
      !j.at("points").is_number_integer())
    fail("criterion must be an object with integer 'points'");
  c.points = j.at("points").get<int>();
  c.rationale = string_at(j, "rationale", false);
  return c;
}

}  // namespace

json scorecard_json(const scoring::ScoreCard& card) {
  return json{{"shapeAccuracy", criterion_json(card.shape_accuracy)},
              {"dimensionalAccuracy", criterion_json(card.dimensional_accuracy)},
              {"parameterMatching", criterion_json(card.parameter_matching)},
              {"unitConsistency", criterion_json(card.unit_consistency)},
              {"total", card.total()}};
}

scoring::ScoreCard scorecard_from_json(const json& j) {
  scoring::ScoreCard card;
  if (!j.is_object()) fail("scorecard must be an object");
  card.shape_accuracy = criterion_from_json(j.at("shapeAccuracy"));
  card.dimensional_accuracy = criterion_from_json(j.at("dimensionalAccuracy"));
  card.parameter_matching = criterion_from_json(j.at("parameterMatching"));
  card.unit_consistency = criterion_from_json(j.at("unitConsistency"));
  return card;
}

json multibody_expectation_json(const scoring::MultiBodyExpectation& exp) {
  json j;
  j["components"] = json::array();
  for (const auto& spec : exp.components) j["components"].push_back(spec_json(spec));
  if (exp.relation) j["relation"] = kernel::relation_name(*exp.relation);
  return j;
}

scoring::MultiBodyExpectation multibody_expectation_from_json(const json& j) {
  scoring::MultiBodyExpectation exp;
  if (!j.is_object() || !j.contains("components") || !j.at("components").is_array())
    fail("multi-body expectation needs a 'components' array");
  for (const auto& c : j.at("components"))
    exp.components.push_back(spec_from_json(c));
  std::string rel = string_at(j, "relation", false);
  if (!rel.empty()) {
    auto r = kernel::relation_from_name(rel);
    if (!r) fail("unknown relation '" + rel + "'");
    exp.relation = *r;
  }
  return exp;
}

json multibody_report_json(const scoring::MultiBodyReport& report) {
  json per = json::array();
  for (const auto& pc : report.per_component) {
    per.push_back(json{{"expected", spec_json(pc.expected)},
                       {"found", pc.found},
                       {"scorecard", scorecard_json(pc.card)}});
  }
  json j{{"componentsFound", report.components_found},
         {"componentsExpected", report.components_expected},
         {"perComponent", std::move(per)},
         {"omissions", report.omissions},
         {"extras", report.extras}};
  if (report.relation_checked) {
    j["relationSatisfied"] = report.relation_satisfied;
    j["relationNote"] = report.relation_note;
  }
  return j;
}

scoring::MultiBodyReport multibody_report_from_json(const json& j) {
  scoring::MultiBodyReport report;
  if (!j.is_object()) fail("multi-body report must be an object");
  report.components_found = j.value("componentsFound", 0);
  report.components_expected = j.value("componentsExpected", 0);
  report.omissions = j.value("omissions", 0);
  report.extras = j.value("extras", 0);
  if (j.contains("perComponent")) {
    for (const auto& pc : j.at("perComponent")) {
      scoring::MultiBodyComponentResult r;
      r.expected = spec_from_json(pc.at("expected"));
      r.found = pc.value("found", false);
      r.card = scorecard_from_json(pc.at("scorecard"));
      report.per_component.push_back(std::move(r));
    }
  }
  if (j.contains("relationSatisfied")) {
    report.relation_checked = true;
    report.relation_satisfied = j.at("relationSatisfied").get<bool>();
    report.relation_note = string_at(j, "relationNote", false);
  }
  return report;
}

json prompt_json(const scoring::SuitePrompt& prompt) {
  json j{{"id", prompt.id}, {"instruction", prompt.instruction}};
  if (prompt.expect_single)
    j["expect"] = spec_json(*prompt.expect_single);
  else if (prompt.expect_multi)
    j["expect"] = multibody_expectation_json(*prompt.expect_multi);
  return j;
}

scoring::SuitePrompt prompt_from_json(const json& j) {
  scoring::SuitePrompt p;
  p.id = string_at(j, "id", true);
  p.instruction = string_at(j, "instruction", true);
  if (!j.contains("expect") || !j.at("expect").is_object())
    fail("prompt '" + p.id + "' needs an 'expect' object");
  const json& e = j.at("expect");
  if (e.contains("components"))
    p.expect_multi = multibody_expectation_from_json(e);
  else
    p.expect_single = spec_from_json(e);
  return p;
}

json suite_json(const scoring::EvalSuite& suite) {
  json prompts = json::array();
  for (const auto& p : suite.prompts) prompts.push_back(prompt_json(p));
  return json{{"name", suite.name}, {"prompts", std::move(prompts)}};
}

scoring::EvalSuite suite_from_json(const json& j) {
  scoring::EvalSuite suite;
  suite.name = string_at(j, "name", true);
  if (!j.contains("prompts") || !j.at("prompts").is_array())
    fail("suite needs a 'prompts' array");
  for (const auto& p : j.at("prompts")) suite.prompts.push_back(prompt_from_json(p));
  return suite;
}

}  // namespace geogen::io
