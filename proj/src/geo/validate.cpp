#include "geogen/geo/validate.hpp"

namespace geogen::geo {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::optional<std::string> declared_unit(const GeoProgram& program) {
  for (const Statement& stmt : program.statements) {
    const Comment* c = as<Comment>(stmt);
    if (!c) continue;
    std::string text = trim(c->text);
    constexpr std::string_view kPrefix = "units:";
    if (text.rfind(kPrefix, 0) != 0) continue;
    std::string unit = trim(text.substr(kPrefix.size()));
    if (!unit.empty()) return unit;
  }
  return std::nullopt;
}

ValidationReport validate(std::string_view source) {
  ValidationReport rep;
  ParseResult pr = parse(source);
  rep.syntax_ok = pr.ok;
  rep.program = std::move(pr.program);
  rep.diagnostics = std::move(pr.diagnostics);
  if (!rep.syntax_ok) return rep;
  EvalResult er = evaluate(rep.program);
  rep.model_ok = er.ok;
  rep.model = std::move(er.model);
  rep.diagnostics.insert(rep.diagnostics.end(),
                         std::make_move_iterator(er.diagnostics.begin()),
                         std::make_move_iterator(er.diagnostics.end()));
  return rep;
}

}  // namespace geogen::geo
