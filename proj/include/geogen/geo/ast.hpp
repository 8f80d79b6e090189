#pragma once

#include <array>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "geogen/geo/diagnostics.hpp"

namespace geogen::geo {

enum class ExprKind {
  Number,
  Identifier,
  PiConst,
  Negate,
  Add,
  Sub,
  Mul,
  Div,
  Cos,
  Sin,
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  ExprKind kind = ExprKind::Number;
  double number = 0.0;     // Number
  std::string name;        // Identifier
  ExprPtr lhs;             // binary left operand; sole operand of Negate/Cos/Sin
  ExprPtr rhs;             // binary right operand
  SourceSpan span;
};

ExprPtr clone(const Expr& e);
bool equal(const Expr& a, const Expr& b);

struct Assignment {
  std::string name;
  ExprPtr value;
};

struct PointDecl {
  ExprPtr id;
  std::array<ExprPtr, 3> coords;
  ExprPtr mesh_size;  // may be null (3-argument form)
};

struct LineDecl {
  ExprPtr id;
  std::array<ExprPtr, 2> endpoints;
};

// Circle(id) = {start, center, end};
struct CircleArcDecl {
  ExprPtr id;
  ExprPtr start;
  ExprPtr center;
  ExprPtr end;
};

struct SplineDecl {
  ExprPtr id;
  std::vector<ExprPtr> points;
};

// Negative references are expressed with unary minus in the ref exprs.
struct LineLoopDecl {
  ExprPtr id;
  std::vector<ExprPtr> curves;
};

struct PlaneSurfaceDecl {
  ExprPtr id;
  std::vector<ExprPtr> loops;
};

// Extrude {dx, dy, dz} { Surface{ids}; }
struct ExtrudeTranslate {
  std::array<ExprPtr, 3> delta;
  std::vector<ExprPtr> surfaces;
};

// Extrude { {ax, ay, az}, {px, py, pz}, angle } { Surface{ids}; }
struct ExtrudeRotate {
  std::array<ExprPtr, 3> axis;
  std::array<ExprPtr, 3> pivot;
  ExprPtr angle;
  std::vector<ExprPtr> surfaces;
};

struct Comment {
  std::string text;
};

using StatementNode = std::variant<Assignment, PointDecl, LineDecl, CircleArcDecl,
                                   SplineDecl, LineLoopDecl, PlaneSurfaceDecl,
                                   ExtrudeTranslate, ExtrudeRotate, Comment>;

struct Statement {
  StatementNode node;
  SourceSpan span;
};

struct GeoProgram {
  std::vector<Statement> statements;
};

bool structurally_equal(const Statement& a, const Statement& b);
bool structurally_equal(const GeoProgram& a, const GeoProgram& b);

template <class T>
const T* as(const Statement& s) {
  return std::get_if<T>(&s.node);
}

}  // namespace geogen::geo
