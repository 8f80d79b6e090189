#include "geogen/geo/diagnostics.hpp"

#include <algorithm>

namespace geogen::geo {

const char* to_string(DiagCode code) {
  switch (code) {
    case DiagCode::UnknownStatement: return "UnknownStatement";
    case DiagCode::MalformedExpression: return "MalformedExpression";
    case DiagCode::UnbalancedBraces: return "UnbalancedBraces";
    case DiagCode::UnexpectedEndOfInput: return "UnexpectedEndOfInput";
    case DiagCode::NonCanonicalKeyword: return "NonCanonicalKeyword";
    case DiagCode::UndefinedVariable: return "UndefinedVariable";
    case DiagCode::DanglingReference: return "DanglingReference";
    case DiagCode::DuplicateId: return "DuplicateId";
    case DiagCode::DivisionByZero: return "DivisionByZero";
    case DiagCode::InvalidId: return "InvalidId";
    case DiagCode::ArcRadiusMismatch: return "ArcRadiusMismatch";
  }
  return "Unknown";
}

const char* to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

}  // namespace geogen::geo
