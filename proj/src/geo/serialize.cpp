#include "geogen/geo/serialize.hpp"

#include "geogen/support/numeric.hpp"

namespace geogen::geo {

namespace {

int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Negate:
      return 3;
    default:
      return 4;
  }
}

std::string expr_str(const Expr& e, int parent_prec) {
  int prec = precedence(e.kind);
  std::string out;
  switch (e.kind) {
    case ExprKind::Number:
      out = format_double(e.number);
      break;
    case ExprKind::Identifier:
      out = e.name;
      break;
    case ExprKind::PiConst:
      out = "Pi";
      break;
    case ExprKind::Negate:
      out = "-" + expr_str(*e.lhs, prec);
      break;
    case ExprKind::Cos:
      out = "Cos(" + expr_str(*e.lhs, 0) + ")";
      break;
    case ExprKind::Sin:
      out = "Sin(" + expr_str(*e.lhs, 0) + ")";
      break;
    case ExprKind::Add:
      out = expr_str(*e.lhs, prec) + " + " + expr_str(*e.rhs, prec + 1);
      break;
    case ExprKind::Sub:
      out = expr_str(*e.lhs, prec) + " - " + expr_str(*e.rhs, prec + 1);
      break;
    case ExprKind::Mul:
      out = expr_str(*e.lhs, prec) + " * " + expr_str(*e.rhs, prec + 1);
      break;
    case ExprKind::Div:
      out = expr_str(*e.lhs, prec) + " / " + expr_str(*e.rhs, prec + 1);
      break;
  }
  if (prec < parent_prec && e.kind != ExprKind::Negate) return "(" + out + ")";
  return out;
}

std::string list_str(const std::vector<ExprPtr>& exprs) {
  std::string out;
  for (size_t i = 0; i < exprs.size(); ++i) {
    if (i) out += ", ";
    out += expr_str(*exprs[i], 0);
  }
  return out;
}

struct StmtPrinter {
  std::string operator()(const Assignment& a) const {
    return a.name + " = " + expr_str(*a.value, 0) + ";";
  }
  std::string operator()(const PointDecl& d) const {
    std::string out = "Point(" + expr_str(*d.id, 0) + ") = {" +
                      expr_str(*d.coords[0], 0) + ", " + expr_str(*d.coords[1], 0) +
                      ", " + expr_str(*d.coords[2], 0);
    if (d.mesh_size) out += ", " + expr_str(*d.mesh_size, 0);
    return out + "};";
  }
  std::string operator()(const LineDecl& d) const {
    return "Line(" + expr_str(*d.id, 0) + ") = {" + expr_str(*d.endpoints[0], 0) +
           ", " + expr_str(*d.endpoints[1], 0) + "};";
  }
  std::string operator()(const CircleArcDecl& d) const {
    return "Circle(" + expr_str(*d.id, 0) + ") = {" + expr_str(*d.start, 0) + ", " +
           expr_str(*d.center, 0) + ", " + expr_str(*d.end, 0) + "};";
  }
  std::string operator()(const SplineDecl& d) const {
    return "Spline(" + expr_str(*d.id, 0) + ") = {" + list_str(d.points) + "};";
  }
  std::string operator()(const LineLoopDecl& d) const {
    return "Line Loop(" + expr_str(*d.id, 0) + ") = {" + list_str(d.curves) + "};";
  }
  std::string operator()(const PlaneSurfaceDecl& d) const {
    return "Plane Surface(" + expr_str(*d.id, 0) + ") = {" + list_str(d.loops) + "};";
  }
  std::string operator()(const ExtrudeTranslate& d) const {
    return "Extrude {" + expr_str(*d.delta[0], 0) + ", " + expr_str(*d.delta[1], 0) +
           ", " + expr_str(*d.delta[2], 0) + "} { Surface{" + list_str(d.surfaces) +
           "}; }";
  }
  std::string operator()(const ExtrudeRotate& d) const {
    auto vec = [](const std::array<ExprPtr, 3>& v) {
      return "{" + expr_str(*v[0], 0) + ", " + expr_str(*v[1], 0) + ", " +
             expr_str(*v[2], 0) + "}";
    };
    return "Extrude { " + vec(d.axis) + ", " + vec(d.pivot) + ", " +
           expr_str(*d.angle, 0) + " } { Surface{" + list_str(d.surfaces) + "}; }";
  }
  std::string operator()(const Comment& c) const { return "//" + c.text; }
};

}  // namespace

std::string to_geo(const Expr& e) { return expr_str(e, 0); }

std::string to_geo(const Statement& s) { return std::visit(StmtPrinter{}, s.node); }

std::string serialize(const GeoProgram& program) {
  std::string out;
  for (const Statement& s : program.statements) {
    out += to_geo(s);
    out += '\n';
  }
  return out;
}

}  // namespace geogen::geo
