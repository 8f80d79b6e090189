#include "geogen/kernel/relation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geogen/kernel/measure.hpp"
#include "internal.hpp"

namespace geogen::kernel {

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

double polygon_area2(const std::vector<Eigen::Vector2d>& pts) {
  double s = 0;
  for (size_t i = 0; i < pts.size(); ++i)
    s += cross2(pts[i], pts[(i + 1) % pts.size()]);
  return s;
}

void ensure_ccw(ConvexPoly& poly) {
  if (polygon_area2(poly.pts) < 0) std::reverse(poly.pts.begin(), poly.pts.end());
}

bool point_in_poly(const ConvexPoly& poly, const Eigen::Vector2d& p, bool strict) {
  size_t n = poly.pts.size();
  for (size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d& a = poly.pts[i];
    const Eigen::Vector2d& b = poly.pts[(i + 1) % n];
    double c = cross2(b - a, p - a);
    if (strict ? c <= 0 : c < 0) return false;
  }
  return true;
}

double dist_point_seg(const Eigen::Vector2d& p, const Eigen::Vector2d& a,
                      const Eigen::Vector2d& b) {
  Eigen::Vector2d ab = b - a;
  double len2 = ab.squaredNorm();
  if (len2 == 0) return (p - a).norm();
  double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double dist_point_poly(const Eigen::Vector2d& p, const ConvexPoly& poly) {
  if (point_in_poly(poly, p, false)) return 0;
  double best = 1e300;
  size_t n = poly.pts.size();
  for (size_t i = 0; i < n; ++i)
    best = std::min(best, dist_point_seg(p, poly.pts[i], poly.pts[(i + 1) % n]));
  return best;
}

// Minimum inward distance from p to the polygon's edge lines; positive only
// meaningful when p is inside.
double inward_clearance(const Eigen::Vector2d& p, const ConvexPoly& poly) {
  double best = 1e300;
  size_t n = poly.pts.size();
  for (size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d& a = poly.pts[i];
    const Eigen::Vector2d& b = poly.pts[(i + 1) % n];
    double len = (b - a).norm();
    if (len == 0) continue;
    best = std::min(best, cross2(b - a, p - a) / len);
  }
  return best;
}

// --- exact pairwise predicates on convex parts ---

struct InsideVisitor {
  bool operator()(const Disk& a, const Disk& b) const {
    return (a.center - b.center).norm() + a.radius < b.radius;
  }
  bool operator()(const Disk& a, const ConvexPoly& b) const {
    if (!point_in_poly(b, a.center, true)) return false;
    return inward_clearance(a.center, b) > a.radius;
  }
  bool operator()(const ConvexPoly& a, const Disk& b) const {
    for (const auto& v : a.pts)
      if (!((v - b.center).norm() < b.radius)) return false;
    return true;
  }
  bool operator()(const ConvexPoly& a, const ConvexPoly& b) const {
    for (const auto& v : a.pts)
      if (!point_in_poly(b, v, true)) return false;
    return true;
  }
};

bool polys_separated(const ConvexPoly& a, const ConvexPoly& b) {
  auto separated_by_edges_of = [](const ConvexPoly& e, const ConvexPoly& other) {
    size_t n = e.pts.size();
    for (size_t i = 0; i < n; ++i) {
      Eigen::Vector2d edge = e.pts[(i + 1) % n] - e.pts[i];
      Eigen::Vector2d normal{-edge.y(), edge.x()};
      double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
      for (const auto& v : e.pts) {
        double d = normal.dot(v);
        amin = std::min(amin, d);
        amax = std::max(amax, d);
      }
      for (const auto& v : other.pts) {
        double d = normal.dot(v);
        bmin = std::min(bmin, d);
        bmax = std::max(bmax, d);
      }
      if (amax < bmin || bmax < amin) return true;
    }
    return false;
  };
  return separated_by_edges_of(a, b) || separated_by_edges_of(b, a);
}

struct DisjointVisitor {
  bool operator()(const Disk& a, const Disk& b) const {
    return (a.center - b.center).norm() > a.radius + b.radius;
  }
  bool operator()(const Disk& a, const ConvexPoly& b) const {
    return dist_point_poly(a.center, b) > a.radius;
  }
  bool operator()(const ConvexPoly& a, const Disk& b) const {
    return (*this)(b, a);
  }
  bool operator()(const ConvexPoly& a, const ConvexPoly& b) const {
    return polys_separated(a, b);
  }
};

struct ContainsPointVisitor {
  Eigen::Vector2d p;
  bool operator()(const Disk& d) const { return (p - d.center).norm() <= d.radius; }
  bool operator()(const ConvexPoly& poly) const { return point_in_poly(poly, p, false); }
};

std::vector<Eigen::Vector2d> part_probe_points(const RegionPart& part) {
  std::vector<Eigen::Vector2d> out;
  if (const Disk* d = std::get_if<Disk>(&part)) {
    out.push_back(d->center);
    for (int k = 0; k < 64; ++k) {
      double a = 2 * kPi * k / 64;
      out.push_back(d->center + d->radius * Eigen::Vector2d{std::cos(a), std::sin(a)});
    }
  } else {
    const ConvexPoly& poly = std::get<ConvexPoly>(part);
    Eigen::Vector2d c{0, 0};
    for (const auto& v : poly.pts) c += v;
    c /= static_cast<double>(poly.pts.size());
    out.push_back(c);
    size_t n = poly.pts.size();
    for (size_t i = 0; i < n; ++i) {
      out.push_back(poly.pts[i]);
      out.push_back((poly.pts[i] + poly.pts[(i + 1) % n]) / 2.0);
    }
  }
  return out;
}

bool region_inside(const Region& a, const Region& b) {
  for (const RegionPart& pa : a.parts) {
    if (b.parts.size() == 1) {
      if (!std::visit(InsideVisitor{}, pa, b.parts[0])) return false;
    } else {
      // union container: probe the part's boundary and center
      for (const auto& p : part_probe_points(pa))
        if (!region_contains_point(b, p)) return false;
    }
  }
  return !a.parts.empty() && !b.parts.empty();
}

bool region_disjoint(const Region& a, const Region& b) {
  for (const RegionPart& pa : a.parts)
    for (const RegionPart& pb : b.parts)
      if (!std::visit(DisjointVisitor{}, pa, pb)) return false;
  return true;
}

std::optional<ConvexPoly> loop_polygon(const geo::GeoModel& m,
                                       const geo::LoopRecord& loop) {
  ConvexPoly poly;
  for (int ref : loop.curves) {
    const geo::CurveRecord& curve = m.curves.at(std::abs(ref));
    auto [s, e] = curve.endpoints();
    if (ref < 0) std::swap(s, e);
    Eigen::Vector2d ps = m.points.at(s).pos.head<2>();
    if (curve.kind == geo::CurveKind::CircleArc) {
      Eigen::Vector2d c = curve.arc_center.head<2>();
      Eigen::Vector2d pe = m.points.at(e).pos.head<2>();
      double r = (ps - c).norm();
      double a0 = std::atan2(ps.y() - c.y(), ps.x() - c.x());
      double a1 = std::atan2(pe.y() - c.y(), pe.x() - c.x());
      double delta = a1 - a0;
      while (delta <= -kPi) delta += 2 * kPi;
      while (delta > kPi) delta -= 2 * kPi;
      const int kSteps = 32;
      for (int k = 0; k < kSteps; ++k) {
        double a = a0 + delta * k / kSteps;
        poly.pts.push_back(c + r * Eigen::Vector2d{std::cos(a), std::sin(a)});
      }
    } else {
      poly.pts.push_back(ps);
      if (curve.kind == geo::CurveKind::Spline) {
        for (size_t i = 1; i + 1 < curve.points.size(); ++i)
          poly.pts.push_back(m.points.at(curve.points[i]).pos.head<2>());
      }
    }
  }
  if (poly.pts.size() < 3) return std::nullopt;
  ensure_ccw(poly);
  return poly;
}

}  // namespace

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Inside: return "inside";
    case Relation::Containing: return "containing";
    case Relation::AdjacentDisjoint: return "adjacent-disjoint";
    case Relation::Overlapping: return "overlapping";
  }
  return "?";
}

std::optional<Relation> relation_from_name(const std::string& name) {
  for (Relation r : {Relation::Inside, Relation::Containing,
                     Relation::AdjacentDisjoint, Relation::Overlapping})
    if (name == relation_name(r)) return r;
  return std::nullopt;
}

std::optional<Region> region_of(const geo::GeoModel& m,
                                const ClassifiedComponent& cc) {
  if (!cc.shape) return std::nullopt;
  detail::CurveSplit cs = detail::split_curves(m, cc.component);
  Region region;
  switch (*cc.shape) {
    case Shape::Circle:
    case Shape::Pipe:
    case Shape::BentPipe: {
      auto fit = detail::fit_circle(m, cs.arcs);
      if (!fit) return std::nullopt;
      region.parts.push_back(Disk{fit->center.head<2>(), fit->radius});
      return region;
    }
    case Shape::Square:
    case Shape::Rectangle: {
      auto verts = detail::line_cycle_vertices(m, cs.lines);
      if (verts.size() != 4) return std::nullopt;
      ConvexPoly poly;
      for (int v : verts) poly.pts.push_back(m.points.at(v).pos.head<2>());
      ensure_ccw(poly);
      region.parts.push_back(std::move(poly));
      return region;
    }
    case Shape::SemiCircle: {
      auto fit = detail::fit_semicircle(m, cs.arcs, cs.lines[0]);
      if (!fit) return std::nullopt;
      MeasureResult mr = measure(m, cc);
      double apex = mr.geometry.orientation_deg / 180.0 * kPi;
      ConvexPoly poly;
      const int kSteps = 64;
      Eigen::Vector2d c = fit->center.head<2>();
      for (int k = 0; k <= kSteps; ++k) {
        double a = apex - kPi / 2 + kPi * k / kSteps;
        poly.pts.push_back(c + fit->radius *
                                   Eigen::Vector2d{std::cos(a), std::sin(a)});
      }
      ensure_ccw(poly);
      region.parts.push_back(std::move(poly));
      return region;
    }
    case Shape::IBeam: {
      for (int sid : cc.component.surfaces) {
        const geo::SurfaceRecord& surf = m.surfaces.at(sid);
        if (surf.loops.empty()) continue;
        auto poly = loop_polygon(m, m.loops.at(surf.loops.front()));
        if (poly) region.parts.push_back(std::move(*poly));
      }
      if (region.parts.empty()) return std::nullopt;
      return region;
    }
  }
  return std::nullopt;
}

bool region_contains_point(const Region& r, const Eigen::Vector2d& p) {
  for (const RegionPart& part : r.parts)
    if (std::visit(ContainsPointVisitor{p}, part)) return true;
  return false;
}

Relation spatial_relation(const Region& a, const Region& b) {
  if (region_inside(a, b)) return Relation::Inside;
  if (region_inside(b, a)) return Relation::Containing;
  if (region_disjoint(a, b)) return Relation::AdjacentDisjoint;
  return Relation::Overlapping;
}

}  // namespace geogen::kernel
