#include "geogen/geo/lexer.hpp"

#include <cctype>
#include <charconv>

namespace geogen::geo {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1;
  int col = 1;

  auto make = [&](TokenKind kind, size_t start, size_t len, int tline, int tcol) {
    Token t;
    t.kind = kind;
    t.text = std::string(src.substr(start, len));
    t.span = SourceSpan{tline, tcol, static_cast<int>(len)};
    return t;
  };

  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
      ++i;
      ++col;
      continue;
    }
    int tline = line;
    int tcol = col;
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      size_t start = i + 2;
      size_t end = start;
      while (end < src.size() && src[end] != '\n') ++end;
      Token t = make(TokenKind::Comment, start, end - start, tline, tcol);
      t.span.length = static_cast<int>(end - i);
      out.push_back(std::move(t));
      col += static_cast<int>(end - i);
      i = end;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      size_t start = i;
      size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && is_digit(src[j])) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && is_digit(src[k])) {
          while (k < src.size() && is_digit(src[k])) ++k;
          j = k;
        }
      }
      Token t = make(TokenKind::Number, start, j - start, tline, tcol);
      double v = 0;
      auto [p, ec] = std::from_chars(src.data() + start, src.data() + j, v);
      (void)p;
      if (ec == std::errc()) t.number = v;
      out.push_back(std::move(t));
      col += static_cast<int>(j - start);
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      size_t start = i;
      size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back(make(TokenKind::Identifier, start, j - start, tline, tcol));
      col += static_cast<int>(j - start);
      i = j;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case ',': kind = TokenKind::Comma; break;
      case ';': kind = TokenKind::Semicolon; break;
      case '=': kind = TokenKind::Equals; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      default: kind = TokenKind::Bad; break;
    }
    out.push_back(make(kind, i, 1, tline, tcol));
    ++i;
    ++col;
  }

  Token end;
  end.kind = TokenKind::End;
  end.span = SourceSpan{line, col, 0};
  out.push_back(std::move(end));
  return out;
}

}  // namespace geogen::geo
