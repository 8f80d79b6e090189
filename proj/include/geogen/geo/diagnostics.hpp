#pragma once

#include <string>
#include <vector>

namespace geogen::geo {

enum class Severity { Warning, Error };

enum class DiagCode {
  // Parse stage
  UnknownStatement,
  MalformedExpression,
  UnbalancedBraces,
  UnexpectedEndOfInput,
  NonCanonicalKeyword,
  // Evaluation stage
  UndefinedVariable,
  DanglingReference,
  DuplicateId,
  DivisionByZero,
  InvalidId,
  ArcRadiusMismatch,
};

struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;
};

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::UnknownStatement;
  std::string message;
  SourceSpan span;
};

const char* to_string(DiagCode code);
const char* to_string(Severity severity);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace geogen::geo
