#include "geogen/llm/extract.hpp"

#include "geogen/geo/parser.hpp"

namespace geogen::llm {

namespace {

std::string trim_blank(const std::string& s) {
  size_t a = s.find_first_not_of("\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Content of the first ``` ... ``` block, skipping a language tag on the
// opening line.
bool fenced_block(const std::string& text, std::string& out) {
  size_t open = text.find("```");
  if (open == std::string::npos) return false;
  size_t body = text.find('\n', open);
  if (body == std::string::npos) return false;
  ++body;
  size_t close = text.find("```", body);
  if (close == std::string::npos) return false;
  out = trim_blank(text.substr(body, close - body));
  return true;
}

// A line qualifies when it parses cleanly as a statement or comment on its
// own: no failures, nothing skipped as unknown.
bool geo_line(const std::string& line) {
  std::string trimmed = trim_blank(line);
  if (trimmed.empty()) return false;
  geo::ParseResult pr = geo::parse(trimmed);
  if (!pr.ok || pr.program.statements.empty()) return false;
  for (const auto& d : pr.diagnostics)
    if (d.code == geo::DiagCode::UnknownStatement) return false;
  return true;
}

}  // namespace

std::string extract_geo(const std::string& completion) {
  std::string fenced;
  if (fenced_block(completion, fenced)) return fenced;

  size_t pos = 0;
  while (pos < completion.size()) {
    size_t eol = completion.find('\n', pos);
    std::string line = completion.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    if (geo_line(line)) return completion.substr(pos);
    if (eol == std::string::npos) break;
    pos = eol + 1;
  }
  return completion;
}

}  // namespace geogen::llm
