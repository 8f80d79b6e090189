#include <doctest.h>

#include "geogen/geo/lexer.hpp"

using namespace geogen::geo;

namespace {

std::vector<TokenKind> kinds(std::string_view src) {
  std::vector<TokenKind> out;
  for (const Token& t : lex(src)) out.push_back(t.kind);
  return out;
}

}  // namespace

TEST_CASE("lexer tokenizes a point declaration") {
  auto toks = lex("Point(1) = {0, 0, 0, 1.0};");
  REQUIRE(toks.size() == 16);
  CHECK(toks[0].kind == TokenKind::Identifier);
  CHECK(toks[0].text == "Point");
  CHECK(toks[1].kind == TokenKind::LParen);
  CHECK(toks[2].kind == TokenKind::Number);
  CHECK(toks[2].number == doctest::Approx(1.0));
  CHECK(toks[4].kind == TokenKind::Equals);
  CHECK(toks[5].kind == TokenKind::LBrace);
  CHECK(toks[13].kind == TokenKind::RBrace);
  CHECK(toks[14].kind == TokenKind::Semicolon);
  CHECK(toks.back().kind == TokenKind::End);
}

TEST_CASE("lexer reads number forms") {
  auto toks = lex("12 3.5 .25 1e3 2.5e-2 7E+1");
  REQUIRE(toks.size() == 7);
  CHECK(toks[0].number == doctest::Approx(12));
  CHECK(toks[1].number == doctest::Approx(3.5));
  CHECK(toks[2].number == doctest::Approx(0.25));
  CHECK(toks[3].number == doctest::Approx(1000));
  CHECK(toks[4].number == doctest::Approx(0.025));
  CHECK(toks[5].number == doctest::Approx(70));
}

TEST_CASE("lexer does not swallow a bare exponent suffix") {
  // "1e" is a number followed by an identifier, not a malformed number.
  auto toks = lex("1e");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].kind == TokenKind::Number);
  CHECK(toks[0].number == doctest::Approx(1));
  CHECK(toks[1].kind == TokenKind::Identifier);
  CHECK(toks[1].text == "e");
}

TEST_CASE("lexer keeps comments as tokens") {
  auto toks = lex("// units: mm\nx = 1;");
  REQUIRE(toks[0].kind == TokenKind::Comment);
  CHECK(toks[0].text == " units: mm");  // body without the slashes
  CHECK(toks[0].span.line == 1);
  CHECK(toks[1].kind == TokenKind::Identifier);
  CHECK(toks[1].span.line == 2);
}

TEST_CASE("lexer marks unexpected characters as Bad") {
  auto toks = lex("x = 1 @ 2;");
  bool saw_bad = false;
  for (const Token& t : toks)
    if (t.kind == TokenKind::Bad) {
      saw_bad = true;
      CHECK(t.text == "@");
    }
  CHECK(saw_bad);
}

TEST_CASE("lexer spans carry line and column") {
  auto toks = lex("a = 1;\n  b = 2;");
  // a, =, 1, ;, b, =, 2, ;, End
  REQUIRE(toks.size() == 9);
  CHECK(toks[0].span.line == 1);
  CHECK(toks[0].span.column == 1);
  CHECK(toks[4].text == "b");
  CHECK(toks[4].span.line == 2);
  CHECK(toks[4].span.column == 3);
  CHECK(toks[4].span.length == 1);
}

TEST_CASE("lexer always terminates with End") {
  CHECK(kinds("").back() == TokenKind::End);
  CHECK(kinds("   \n\t ").back() == TokenKind::End);
  CHECK(kinds("Point").back() == TokenKind::End);
}

TEST_CASE("lexer handles operators and punctuation") {
  auto ks = kinds("a = -1 + 2 * (3 - 4) / 5;");
  std::vector<TokenKind> expect = {
      TokenKind::Identifier, TokenKind::Equals, TokenKind::Minus,
      TokenKind::Number,     TokenKind::Plus,   TokenKind::Number,
      TokenKind::Star,       TokenKind::LParen, TokenKind::Number,
      TokenKind::Minus,      TokenKind::Number, TokenKind::RParen,
      TokenKind::Slash,      TokenKind::Number, TokenKind::Semicolon,
      TokenKind::End};
  CHECK(ks == expect);
}
