#include "geogen/geo/parser.hpp"

#include <algorithm>
#include <cctype>

#include "geogen/geo/lexer.hpp"

namespace geogen::geo {

namespace {

constexpr int kMaxExprDepth = 192;

enum class Keyword { None, Point, Line, Loop, Circle, Spline, Plane, Surface, Extrude, Pi, Cos, Sin };

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Keyword keyword_of(const std::string& ident) {
  std::string k = lower(ident);
  if (k == "point") return Keyword::Point;
  if (k == "line") return Keyword::Line;
  if (k == "loop") return Keyword::Loop;
  if (k == "circle") return Keyword::Circle;
  if (k == "spline") return Keyword::Spline;
  if (k == "plane") return Keyword::Plane;
  if (k == "surface") return Keyword::Surface;
  if (k == "extrude") return Keyword::Extrude;
  if (k == "pi") return Keyword::Pi;
  if (k == "cos") return Keyword::Cos;
  if (k == "sin") return Keyword::Sin;
  return Keyword::None;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : toks_(lex(source)) {}

  ParseResult run() {
    while (!at(TokenKind::End)) {
      stmt_failed_ = false;
      brace_depth_ = 0;
      const Token& t = cur();
      switch (t.kind) {
        case TokenKind::Comment:
          push(Comment{t.text}, t.span);
          advance();
          break;
        case TokenKind::Semicolon:
          advance();
          break;
        case TokenKind::Identifier:
          parse_statement();
          break;
        case TokenKind::LBrace:
          error(DiagCode::UnbalancedBraces, "unexpected '{'", t.span);
          skip_to_statement_end();
          break;
        case TokenKind::RBrace:
          error(DiagCode::UnbalancedBraces, "unexpected '}'", t.span);
          advance();
          break;
        default:
          warn(DiagCode::UnknownStatement,
               "unrecognized input '" + t.text + "'", t.span);
          skip_to_statement_end();
          break;
      }
    }
    ParseResult res;
    res.program = std::move(prog_);
    res.ok = !has_errors(diags_);
    res.diagnostics = std::move(diags_);
    return res;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  GeoProgram prog_;
  std::vector<Diagnostic> diags_;
  int brace_depth_ = 0;
  bool stmt_failed_ = false;

  const Token& peek(size_t k = 0) const {
    size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  const Token& cur() const { return peek(0); }
  bool at(TokenKind k) const { return cur().kind == k; }

  Token advance() {
    Token t = toks_[pos_];
    if (t.kind == TokenKind::LBrace) ++brace_depth_;
    if (t.kind == TokenKind::RBrace && brace_depth_ > 0) --brace_depth_;
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  void error(DiagCode code, std::string msg, SourceSpan span) {
    stmt_failed_ = true;
    diags_.push_back({Severity::Error, code, std::move(msg), span});
  }
  void warn(DiagCode code, std::string msg, SourceSpan span) {
    diags_.push_back({Severity::Warning, code, std::move(msg), span});
  }

  void push(StatementNode node, SourceSpan span) {
    prog_.statements.push_back(Statement{std::move(node), span});
  }

  bool expect(TokenKind kind, const char* what) {
    if (at(kind)) {
      advance();
      return true;
    }
    if (at(TokenKind::End)) {
      if (brace_depth_ > 0)
        error(DiagCode::UnbalancedBraces,
              std::string("unbalanced braces: reached end of input expecting ") + what,
              cur().span);
      else
        error(DiagCode::UnexpectedEndOfInput,
              std::string("unexpected end of input, expected ") + what, cur().span);
    } else {
      error(DiagCode::MalformedExpression,
            std::string("expected ") + what + " before '" + cur().text + "'",
            cur().span);
    }
    return false;
  }

  void check_casing(const Token& t, const char* canonical) {
    if (t.text != canonical)
      warn(DiagCode::NonCanonicalKeyword,
           "keyword '" + t.text + "' should be spelled '" + canonical + "'", t.span);
  }

  void skip_to_statement_end() {
    int depth = 0;
    while (!at(TokenKind::End)) {
      TokenKind k = cur().kind;
      if (k == TokenKind::LBrace) ++depth;
      else if (k == TokenKind::RBrace && depth > 0) --depth;
      else if (k == TokenKind::Semicolon && depth == 0) {
        advance();
        return;
      }
      advance();
    }
  }

  // --- expressions ---

  ExprPtr make_expr(ExprKind kind, SourceSpan span) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->span = span;
    return e;
  }

  ExprPtr parse_expr(int depth) {
    if (depth >= kMaxExprDepth) {
      error(DiagCode::MalformedExpression, "expression too deeply nested", cur().span);
      return nullptr;
    }
    ExprPtr lhs = parse_term(depth + 1);
    if (!lhs) return nullptr;
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      bool add = at(TokenKind::Plus);
      SourceSpan sp = cur().span;
      advance();
      ExprPtr rhs = parse_term(depth + 1);
      if (!rhs) return nullptr;
      ExprPtr node = make_expr(add ? ExprKind::Add : ExprKind::Sub, sp);
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_term(int depth) {
    if (depth >= kMaxExprDepth) {
      error(DiagCode::MalformedExpression, "expression too deeply nested", cur().span);
      return nullptr;
    }
    ExprPtr lhs = parse_unary(depth + 1);
    if (!lhs) return nullptr;
    while (at(TokenKind::Star) || at(TokenKind::Slash)) {
      bool mul = at(TokenKind::Star);
      SourceSpan sp = cur().span;
      advance();
      ExprPtr rhs = parse_unary(depth + 1);
      if (!rhs) return nullptr;
      ExprPtr node = make_expr(mul ? ExprKind::Mul : ExprKind::Div, sp);
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_unary(int depth) {
    if (depth >= kMaxExprDepth) {
      error(DiagCode::MalformedExpression, "expression too deeply nested", cur().span);
      return nullptr;
    }
    if (at(TokenKind::Minus)) {
      SourceSpan sp = cur().span;
      advance();
      ExprPtr operand = parse_unary(depth + 1);
      if (!operand) return nullptr;
      ExprPtr node = make_expr(ExprKind::Negate, sp);
      node->lhs = std::move(operand);
      return node;
    }
    if (at(TokenKind::Plus)) {
      advance();
      return parse_unary(depth + 1);
    }
    return parse_primary(depth + 1);
  }

  ExprPtr parse_primary(int depth) {
    if (depth >= kMaxExprDepth) {
      error(DiagCode::MalformedExpression, "expression too deeply nested", cur().span);
      return nullptr;
    }
    const Token& t = cur();
    if (t.kind == TokenKind::Number) {
      ExprPtr node = make_expr(ExprKind::Number, t.span);
      node->number = t.number;
      advance();
      return node;
    }
    if (t.kind == TokenKind::LParen) {
      advance();
      ExprPtr inner = parse_expr(depth + 1);
      if (!inner) return nullptr;
      if (!expect(TokenKind::RParen, "')'")) return nullptr;
      return inner;
    }
    if (t.kind == TokenKind::Identifier) {
      Keyword kw = keyword_of(t.text);
      if (kw == Keyword::Pi) {
        Token tok = advance();
        check_casing(tok, "Pi");
        return make_expr(ExprKind::PiConst, tok.span);
      }
      if (kw == Keyword::Cos || kw == Keyword::Sin) {
        Token tok = advance();
        check_casing(tok, kw == Keyword::Cos ? "Cos" : "Sin");
        if (!expect(TokenKind::LParen, "'('")) return nullptr;
        ExprPtr arg = parse_expr(depth + 1);
        if (!arg) return nullptr;
        if (!expect(TokenKind::RParen, "')'")) return nullptr;
        ExprPtr node =
            make_expr(kw == Keyword::Cos ? ExprKind::Cos : ExprKind::Sin, tok.span);
        node->lhs = std::move(arg);
        return node;
      }
      ExprPtr node = make_expr(ExprKind::Identifier, t.span);
      node->name = t.text;
      advance();
      return node;
    }
    if (t.kind == TokenKind::End) {
      if (brace_depth_ > 0)
        error(DiagCode::UnbalancedBraces,
              "unbalanced braces: reached end of input inside an expression", t.span);
      else
        error(DiagCode::UnexpectedEndOfInput,
              "unexpected end of input, expected expression", t.span);
      return nullptr;
    }
    error(DiagCode::MalformedExpression,
          "expected expression before '" + t.text + "'", t.span);
    return nullptr;
  }

  // --- statements ---

  std::vector<ExprPtr> parse_braced_list(size_t min_count, size_t max_count,
                                         const char* what) {
    std::vector<ExprPtr> list;
    SourceSpan open = cur().span;
    if (!expect(TokenKind::LBrace, "'{'")) return list;
    for (;;) {
      ExprPtr e = parse_expr(0);
      if (!e) return list;
      list.push_back(std::move(e));
      if (at(TokenKind::Comma)) {
        advance();
        continue;
      }
      break;
    }
    if (!expect(TokenKind::RBrace, "'}'")) return list;
    if (list.size() < min_count || list.size() > max_count) {
      error(DiagCode::MalformedExpression,
            std::string(what) + " expects between " + std::to_string(min_count) +
                " and " + std::to_string(max_count) + " arguments, got " +
                std::to_string(list.size()),
            open);
    }
    return list;
  }

  bool expect_semicolon() { return expect(TokenKind::Semicolon, "';'"); }

  // Consumes the keyword token(s) and `( id ) =`, returning the id expression.
  ExprPtr parse_decl_header(const char* word1, const char* word2) {
    Token t1 = advance();
    check_casing(t1, word1);
    if (word2) {
      Token t2 = advance();
      check_casing(t2, word2);
    }
    if (!expect(TokenKind::LParen, "'('")) return nullptr;
    ExprPtr id = parse_expr(0);
    if (!id) return nullptr;
    if (!expect(TokenKind::RParen, "')'")) return nullptr;
    if (!expect(TokenKind::Equals, "'='")) return nullptr;
    return id;
  }

  void parse_statement() {
    const Token& t0 = cur();
    Keyword kw = keyword_of(t0.text);
    const Token& t1 = peek(1);
    if (kw == Keyword::Point && t1.kind == TokenKind::LParen) return parse_point();
    if (kw == Keyword::Line && t1.kind == TokenKind::Identifier &&
        keyword_of(t1.text) == Keyword::Loop && peek(2).kind == TokenKind::LParen)
      return parse_line_loop();
    if (kw == Keyword::Line && t1.kind == TokenKind::LParen) return parse_line();
    if (kw == Keyword::Circle && t1.kind == TokenKind::LParen) return parse_circle();
    if (kw == Keyword::Spline && t1.kind == TokenKind::LParen) return parse_spline();
    if (kw == Keyword::Plane && t1.kind == TokenKind::Identifier &&
        keyword_of(t1.text) == Keyword::Surface && peek(2).kind == TokenKind::LParen)
      return parse_plane_surface();
    if (kw == Keyword::Extrude && t1.kind == TokenKind::LBrace) return parse_extrude();
    if (t1.kind == TokenKind::Equals) return parse_assignment();
    warn(DiagCode::UnknownStatement, "unknown statement '" + t0.text + "'", t0.span);
    skip_to_statement_end();
  }

  void parse_assignment() {
    SourceSpan span = cur().span;
    Token name = advance();
    advance();  // '='
    ExprPtr value = parse_expr(0);
    if (!value || !expect_semicolon()) return skip_to_statement_end();
    Assignment a;
    a.name = name.text;
    a.value = std::move(value);
    push(std::move(a), span);
  }

  void parse_point() {
    SourceSpan span = cur().span;
    ExprPtr id = parse_decl_header("Point", nullptr);
    if (!id) return skip_to_statement_end();
    auto args = parse_braced_list(3, 4, "Point");
    if (stmt_failed_ || !expect_semicolon()) return skip_to_statement_end();
    PointDecl d;
    d.id = std::move(id);
    d.coords = {std::move(args[0]), std::move(args[1]), std::move(args[2])};
    if (args.size() == 4) d.mesh_size = std::move(args[3]);
    push(std::move(d), span);
  }

  void parse_line() {
    SourceSpan span = cur().span;
    ExprPtr id = parse_decl_header("Line", nullptr);
    if (!id) return skip_to_statement_end();
    auto args = parse_braced_list(2, 2, "Line");
    if (stmt_failed_ || !expect_semicolon()) return skip_to_statement_end();
    LineDecl d;
    d.id = std::move(id);
    d.endpoints = {std::move(args[0]), std::move(args[1])};
    push(std::move(d), span);
  }

  void parse_circle() {
    SourceSpan span = cur().span;
    ExprPtr id = parse_decl_header("Circle", nullptr);
    if (!id) return skip_to_statement_end();
    auto args = parse_braced_list(3, 3, "Circle");
    if (stmt_failed_ || !expect_semicolon()) return skip_to_statement_end();
    CircleArcDecl d;
    d.id = std::move(id);
    d.start = std::move(args[0]);
    d.center = std::move(args[1]);
    d.end = std::move(args[2]);
    push(std::move(d), span);
  }

  void parse_spline() {
    SourceSpan span = cur().span;
    ExprPtr id = parse_decl_header("Spline", nullptr);
    if (!id) return skip_to_statement_end();
    auto args = parse_braced_list(2, 4096, "Spline");
    if (stmt_failed_ || !expect_semicolon()) return skip_to_statement_end();
    SplineDecl d;
    d.id = std::move(id);
    d.points = std::move(args);
    push(std::move(d), span);
  }

  void parse_line_loop() {
    SourceSpan span = cur().span;
    ExprPtr id = parse_decl_header("Line", "Loop");
    if (!id) return skip_to_statement_end();
    auto args = parse_braced_list(1, 4096, "Line Loop");
    if (stmt_failed_ || !expect_semicolon()) return skip_to_statement_end();
    LineLoopDecl d;
    d.id = std::move(id);
    d.curves = std::move(args);
    push(std::move(d), span);
  }

  void parse_plane_surface() {
    SourceSpan span = cur().span;
    ExprPtr id = parse_decl_header("Plane", "Surface");
    if (!id) return skip_to_statement_end();
    auto args = parse_braced_list(1, 4096, "Plane Surface");
    if (stmt_failed_ || !expect_semicolon()) return skip_to_statement_end();
    PlaneSurfaceDecl d;
    d.id = std::move(id);
    d.loops = std::move(args);
    push(std::move(d), span);
  }

  bool parse_vec3_braced(std::array<ExprPtr, 3>& out) {
    if (!expect(TokenKind::LBrace, "'{'")) return false;
    for (int i = 0; i < 3; ++i) {
      if (i > 0 && !expect(TokenKind::Comma, "','")) return false;
      out[i] = parse_expr(0);
      if (!out[i]) return false;
    }
    return expect(TokenKind::RBrace, "'}'");
  }

  bool parse_vec3_inline(std::array<ExprPtr, 3>& out) {
    for (int i = 0; i < 3; ++i) {
      if (i > 0 && !expect(TokenKind::Comma, "','")) return false;
      out[i] = parse_expr(0);
      if (!out[i]) return false;
    }
    return true;
  }

  bool parse_extrude_body(std::vector<ExprPtr>& surfaces) {
    if (!expect(TokenKind::LBrace, "'{'")) return false;
    if (!(at(TokenKind::Identifier) && keyword_of(cur().text) == Keyword::Surface)) {
      error(DiagCode::MalformedExpression, "expected 'Surface' in Extrude body",
            cur().span);
      return false;
    }
    Token s = advance();
    check_casing(s, "Surface");
    if (!expect(TokenKind::LBrace, "'{'")) return false;
    for (;;) {
      ExprPtr e = parse_expr(0);
      if (!e) return false;
      surfaces.push_back(std::move(e));
      if (at(TokenKind::Comma)) {
        advance();
        continue;
      }
      break;
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;
    if (at(TokenKind::Semicolon)) advance();
    return expect(TokenKind::RBrace, "'}'");
  }

  void parse_extrude() {
    SourceSpan span = cur().span;
    size_t save_pos = pos_;
    size_t save_diags = diags_.size();
    bool save_failed = stmt_failed_;
    int save_depth = brace_depth_;

    Token kwTok = advance();
    check_casing(kwTok, "Extrude");
    bool ok = expect(TokenKind::LBrace, "'{'");
    bool rotate = ok && at(TokenKind::LBrace);
    ExtrudeRotate rot;
    ExtrudeTranslate tr;
    if (ok) {
      if (rotate) {
        ok = parse_vec3_braced(rot.axis) && expect(TokenKind::Comma, "','") &&
             parse_vec3_braced(rot.pivot) && expect(TokenKind::Comma, "','");
        if (ok) {
          rot.angle = parse_expr(0);
          ok = rot.angle != nullptr;
        }
        if (ok) ok = expect(TokenKind::RBrace, "'}'");
      } else {
        ok = parse_vec3_inline(tr.delta) && expect(TokenKind::RBrace, "'}'");
      }
    }
    std::vector<ExprPtr> surfaces;
    if (ok) ok = parse_extrude_body(surfaces);
    if (ok && at(TokenKind::Semicolon)) advance();

    if (!ok) {
      if (at(TokenKind::End)) {
        // genuine truncation: keep the brace/EOF diagnostics
        skip_to_statement_end();
        return;
      }
      pos_ = save_pos;
      diags_.resize(save_diags);
      stmt_failed_ = save_failed;
      brace_depth_ = save_depth;
      warn(DiagCode::UnknownStatement, "unsupported Extrude form", cur().span);
      advance();
      skip_to_statement_end();
      return;
    }
    if (rotate) {
      rot.surfaces = std::move(surfaces);
      push(std::move(rot), span);
    } else {
      tr.surfaces = std::move(surfaces);
      push(std::move(tr), span);
    }
  }
};

ExprPtr clone_expr(const Expr& e) {
  auto out = std::make_unique<Expr>();
  out->kind = e.kind;
  out->number = e.number;
  out->name = e.name;
  out->span = e.span;
  if (e.lhs) out->lhs = clone_expr(*e.lhs);
  if (e.rhs) out->rhs = clone_expr(*e.rhs);
  return out;
}

}  // namespace

ExprPtr clone(const Expr& e) { return clone_expr(e); }

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Number:
      return a.number == b.number;
    case ExprKind::Identifier:
      return a.name == b.name;
    case ExprKind::PiConst:
      return true;
    default:
      break;
  }
  auto side_equal = [](const ExprPtr& x, const ExprPtr& y) {
    if (!x && !y) return true;
    if (!x || !y) return false;
    return equal(*x, *y);
  };
  return side_equal(a.lhs, b.lhs) && side_equal(a.rhs, b.rhs);
}

namespace {

bool eq(const ExprPtr& a, const ExprPtr& b) {
  if (!a && !b) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}

bool eq(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!eq(a[i], b[i])) return false;
  return true;
}

template <size_t N>
bool eq(const std::array<ExprPtr, N>& a, const std::array<ExprPtr, N>& b) {
  for (size_t i = 0; i < N; ++i)
    if (!eq(a[i], b[i])) return false;
  return true;
}

struct StmtEq {
  bool operator()(const Assignment& a, const Assignment& b) const {
    return a.name == b.name && eq(a.value, b.value);
  }
  bool operator()(const PointDecl& a, const PointDecl& b) const {
    return eq(a.id, b.id) && eq(a.coords, b.coords) && eq(a.mesh_size, b.mesh_size);
  }
  bool operator()(const LineDecl& a, const LineDecl& b) const {
    return eq(a.id, b.id) && eq(a.endpoints, b.endpoints);
  }
  bool operator()(const CircleArcDecl& a, const CircleArcDecl& b) const {
    return eq(a.id, b.id) && eq(a.start, b.start) && eq(a.center, b.center) &&
           eq(a.end, b.end);
  }
  bool operator()(const SplineDecl& a, const SplineDecl& b) const {
    return eq(a.id, b.id) && eq(a.points, b.points);
  }
  bool operator()(const LineLoopDecl& a, const LineLoopDecl& b) const {
    return eq(a.id, b.id) && eq(a.curves, b.curves);
  }
  bool operator()(const PlaneSurfaceDecl& a, const PlaneSurfaceDecl& b) const {
    return eq(a.id, b.id) && eq(a.loops, b.loops);
  }
  bool operator()(const ExtrudeTranslate& a, const ExtrudeTranslate& b) const {
    return eq(a.delta, b.delta) && eq(a.surfaces, b.surfaces);
  }
  bool operator()(const ExtrudeRotate& a, const ExtrudeRotate& b) const {
    return eq(a.axis, b.axis) && eq(a.pivot, b.pivot) && eq(a.angle, b.angle) &&
           eq(a.surfaces, b.surfaces);
  }
  bool operator()(const Comment& a, const Comment& b) const { return a.text == b.text; }
  template <class A, class B>
  bool operator()(const A&, const B&) const {
    return false;
  }
};

}  // namespace

bool structurally_equal(const Statement& a, const Statement& b) {
  return std::visit(StmtEq{}, a.node, b.node);
}

bool structurally_equal(const GeoProgram& a, const GeoProgram& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (size_t i = 0; i < a.statements.size(); ++i)
    if (!structurally_equal(a.statements[i], b.statements[i])) return false;
  return true;
}

ParseResult parse(std::string_view source) { return Parser(source).run(); }

}  // namespace geogen::geo
