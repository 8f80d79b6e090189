#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geogen/geo/diagnostics.hpp"

namespace geogen::geo {

enum class TokenKind {
  Identifier,
  Number,
  Comment,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semicolon,
  Equals,
  Plus,
  Minus,
  Star,
  Slash,
  End,
  Bad,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;       // identifier name, comment body, or raw lexeme
  double number = 0.0;    // valid when kind == Number
  SourceSpan span;
};

// Tokenizes the whole source. Never fails; unrecognized bytes become Bad
// tokens. The last token is always End.
std::vector<Token> lex(std::string_view source);

}  // namespace geogen::geo
