#include "geogen/geo/eval.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace geogen::geo {

namespace {

class Evaluator {
 public:
  explicit Evaluator(const GeoProgram& prog) : prog_(prog) {}

  EvalResult run() {
    for (const Statement& s : prog_.statements) {
      span_ = s.span;
      std::visit([this](const auto& node) { eval_statement(node); }, s.node);
    }
    EvalResult res;
    res.model = std::move(model_);
    res.ok = !has_errors(diags_);
    res.diagnostics = std::move(diags_);
    return res;
  }

 private:
  const GeoProgram& prog_;
  GeoModel model_;
  std::vector<Diagnostic> diags_;
  SourceSpan span_;

  void error(DiagCode code, std::string msg, SourceSpan span) {
    diags_.push_back({Severity::Error, code, std::move(msg), span});
  }
  void warn(DiagCode code, std::string msg, SourceSpan span) {
    diags_.push_back({Severity::Warning, code, std::move(msg), span});
  }

  std::optional<double> eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Number:
        return e.number;
      case ExprKind::Identifier: {
        auto it = model_.variables.find(e.name);
        if (it == model_.variables.end()) {
          error(DiagCode::UndefinedVariable, "undefined variable '" + e.name + "'",
                e.span);
          return std::nullopt;
        }
        return it->second;
      }
      case ExprKind::PiConst:
        return std::numbers::pi_v<double>;
      case ExprKind::Negate: {
        auto v = eval(*e.lhs);
        if (!v) return std::nullopt;
        return -*v;
      }
      case ExprKind::Cos: {
        auto v = eval(*e.lhs);
        if (!v) return std::nullopt;
        return std::cos(*v);
      }
      case ExprKind::Sin: {
        auto v = eval(*e.lhs);
        if (!v) return std::nullopt;
        return std::sin(*v);
      }
      case ExprKind::Add:
      case ExprKind::Sub:
      case ExprKind::Mul:
      case ExprKind::Div: {
        auto a = eval(*e.lhs);
        if (!a) return std::nullopt;
        auto b = eval(*e.rhs);
        if (!b) return std::nullopt;
        switch (e.kind) {
          case ExprKind::Add: return *a + *b;
          case ExprKind::Sub: return *a - *b;
          case ExprKind::Mul: return *a * *b;
          default:
            if (*b == 0.0) {
              error(DiagCode::DivisionByZero, "division by zero", e.span);
              return std::nullopt;
            }
            return *a / *b;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<int> eval_int(const Expr& e, const char* what) {
    auto v = eval(e);
    if (!v) return std::nullopt;
    double r = std::round(*v);
    if (std::fabs(*v - r) > 1e-9 || r < -2.0e9 || r > 2.0e9) {
      error(DiagCode::InvalidId, std::string(what) + " must be an integer", e.span);
      return std::nullopt;
    }
    return static_cast<int>(r);
  }

  std::optional<int> eval_entity_id(const Expr& e, const char* what) {
    auto id = eval_int(e, what);
    if (!id) return std::nullopt;
    if (*id <= 0) {
      error(DiagCode::InvalidId, std::string(what) + " must be positive", e.span);
      return std::nullopt;
    }
    return id;
  }

  std::optional<int> point_ref(const Expr& e) {
    auto id = eval_entity_id(e, "point reference");
    if (!id) return std::nullopt;
    if (!model_.points.count(*id)) {
      error(DiagCode::DanglingReference,
            "reference to unknown Point(" + std::to_string(*id) + ")", e.span);
      return std::nullopt;
    }
    return id;
  }

  std::optional<Eigen::Vector3d> eval_vec3(const std::array<ExprPtr, 3>& v) {
    Eigen::Vector3d out;
    for (int i = 0; i < 3; ++i) {
      auto c = eval(*v[i]);
      if (!c) return std::nullopt;
      out[i] = *c;
    }
    return out;
  }

  void eval_statement(const Comment&) {}

  void eval_statement(const Assignment& a) {
    auto v = eval(*a.value);
    if (v) model_.variables[a.name] = *v;
  }

  void eval_statement(const PointDecl& d) {
    auto id = eval_entity_id(*d.id, "Point id");
    auto pos = eval_vec3(d.coords);
    double mesh = 0.0;
    if (d.mesh_size) {
      auto m = eval(*d.mesh_size);
      if (!m) return;
      mesh = *m;
    }
    if (!id || !pos) return;
    if (model_.points.count(*id)) {
      error(DiagCode::DuplicateId, "Point(" + std::to_string(*id) + ") redefined",
            d.id->span);
      return;
    }
    model_.points[*id] = PointRecord{*pos, mesh, span_};
  }

  bool claim_curve_id(int id, const SourceSpan& span) {
    if (model_.curves.count(id)) {
      error(DiagCode::DuplicateId, "curve id " + std::to_string(id) + " redefined",
            span);
      return false;
    }
    return true;
  }

  void eval_statement(const LineDecl& d) {
    auto id = eval_entity_id(*d.id, "Line id");
    auto a = point_ref(*d.endpoints[0]);
    auto b = point_ref(*d.endpoints[1]);
    if (!id || !a || !b) return;
    if (!claim_curve_id(*id, d.id->span)) return;
    CurveRecord c;
    c.kind = CurveKind::Line;
    c.points = {*a, *b};
    c.span = span_;
    model_.curves[*id] = std::move(c);
  }

  void eval_statement(const CircleArcDecl& d) {
    auto id = eval_entity_id(*d.id, "Circle id");
    auto s = point_ref(*d.start);
    auto c = point_ref(*d.center);
    auto e = point_ref(*d.end);
    if (!id || !s || !c || !e) return;
    if (!claim_curve_id(*id, d.id->span)) return;
    CurveRecord rec;
    rec.kind = CurveKind::CircleArc;
    rec.points = {*s, *c, *e};
    rec.arc_center = model_.points[*c].pos;
    double r_start = (model_.points[*s].pos - rec.arc_center).norm();
    double r_end = (model_.points[*e].pos - rec.arc_center).norm();
    rec.arc_radius = r_start;
    double r_max = std::max(r_start, r_end);
    if (r_max > 0 && std::fabs(r_start - r_end) > 1e-6 * r_max) {
      warn(DiagCode::ArcRadiusMismatch,
           "Circle(" + std::to_string(*id) +
               "): start and end are at different distances from the center",
           span_);
    }
    rec.span = span_;
    model_.curves[*id] = std::move(rec);
  }

  void eval_statement(const SplineDecl& d) {
    auto id = eval_entity_id(*d.id, "Spline id");
    std::vector<int> pts;
    bool ok = true;
    for (const ExprPtr& p : d.points) {
      auto r = point_ref(*p);
      if (!r) ok = false;
      else pts.push_back(*r);
    }
    if (!id || !ok) return;
    if (!claim_curve_id(*id, d.id->span)) return;
    CurveRecord c;
    c.kind = CurveKind::Spline;
    c.points = std::move(pts);
    c.span = span_;
    model_.curves[*id] = std::move(c);
  }

  void eval_statement(const LineLoopDecl& d) {
    auto id = eval_entity_id(*d.id, "Line Loop id");
    std::vector<int> refs;
    bool ok = true;
    for (const ExprPtr& r : d.curves) {
      auto v = eval_int(*r, "curve reference");
      if (!v || *v == 0) {
        if (v)
          error(DiagCode::InvalidId, "curve reference must be nonzero", r->span);
        ok = false;
        continue;
      }
      if (!model_.curves.count(std::abs(*v))) {
        error(DiagCode::DanglingReference,
              "reference to unknown curve " + std::to_string(std::abs(*v)), r->span);
        ok = false;
        continue;
      }
      refs.push_back(*v);
    }
    if (!id || !ok) return;
    if (model_.loops.count(*id)) {
      error(DiagCode::DuplicateId,
            "Line Loop(" + std::to_string(*id) + ") redefined", d.id->span);
      return;
    }
    model_.loops[*id] = LoopRecord{std::move(refs), span_};
  }

  void eval_statement(const PlaneSurfaceDecl& d) {
    auto id = eval_entity_id(*d.id, "Plane Surface id");
    std::vector<int> refs;
    bool ok = true;
    for (const ExprPtr& r : d.loops) {
      auto v = eval_entity_id(*r, "loop reference");
      if (!v) {
        ok = false;
        continue;
      }
      if (!model_.loops.count(*v)) {
        error(DiagCode::DanglingReference,
              "reference to unknown Line Loop(" + std::to_string(*v) + ")", r->span);
        ok = false;
        continue;
      }
      refs.push_back(*v);
    }
    if (!id || !ok) return;
    if (model_.surfaces.count(*id)) {
      error(DiagCode::DuplicateId,
            "Plane Surface(" + std::to_string(*id) + ") redefined", d.id->span);
      return;
    }
    model_.surfaces[*id] = SurfaceRecord{std::move(refs), span_};
  }

  bool surface_refs(const std::vector<ExprPtr>& exprs, std::vector<int>& out) {
    bool ok = true;
    for (const ExprPtr& r : exprs) {
      auto v = eval_entity_id(*r, "surface reference");
      if (!v) {
        ok = false;
        continue;
      }
      if (!model_.surfaces.count(*v)) {
        error(DiagCode::DanglingReference,
              "reference to unknown Plane Surface(" + std::to_string(*v) + ")",
              r->span);
        ok = false;
        continue;
      }
      out.push_back(*v);
    }
    return ok;
  }

  void eval_statement(const ExtrudeTranslate& d) {
    auto delta = eval_vec3(d.delta);
    std::vector<int> surfs;
    bool ok = surface_refs(d.surfaces, surfs);
    if (!delta || !ok) return;
    ExtrusionRecord rec;
    rec.kind = ExtrusionKind::Translate;
    rec.delta = *delta;
    rec.surfaces = std::move(surfs);
    rec.span = span_;
    model_.extrusions.push_back(std::move(rec));
  }

  void eval_statement(const ExtrudeRotate& d) {
    auto axis = eval_vec3(d.axis);
    auto pivot = eval_vec3(d.pivot);
    auto angle = eval(*d.angle);
    std::vector<int> surfs;
    bool ok = surface_refs(d.surfaces, surfs);
    if (!axis || !pivot || !angle || !ok) return;
    ExtrusionRecord rec;
    rec.kind = ExtrusionKind::Rotate;
    rec.axis = *axis;
    rec.pivot = *pivot;
    rec.angle_rad = *angle;
    rec.surfaces = std::move(surfs);
    rec.span = span_;
    model_.extrusions.push_back(std::move(rec));
  }
};

}  // namespace

EvalResult evaluate(const GeoProgram& program) { return Evaluator(program).run(); }

}  // namespace geogen::geo
