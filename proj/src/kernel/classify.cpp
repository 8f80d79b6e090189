#include "geogen/kernel/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "geogen/kernel/measure.hpp"
#include "internal.hpp"

namespace geogen::kernel {

namespace detail {

CurveSplit split_curves(const geo::GeoModel& m, const Component& c) {
  CurveSplit out;
  for (int id : c.curves) {
    switch (m.curves.at(id).kind) {
      case geo::CurveKind::Line: out.lines.push_back(id); break;
      case geo::CurveKind::CircleArc: out.arcs.push_back(id); break;
      case geo::CurveKind::Spline: out.splines.push_back(id); break;
    }
  }
  return out;
}

namespace {

// Every endpoint has degree 2 and all curves are reachable from the first.
bool single_closed_cycle(const geo::GeoModel& m, const std::vector<int>& curve_ids) {
  if (curve_ids.size() < 2) return false;
  std::map<int, std::vector<int>> adj;  // point -> incident curves
  for (int id : curve_ids) {
    auto [a, b] = m.curves.at(id).endpoints();
    if (a == b) return false;
    adj[a].push_back(id);
    adj[b].push_back(id);
  }
  for (const auto& [pt, cs] : adj)
    if (cs.size() != 2) return false;
  if (adj.size() != curve_ids.size()) return false;
  // walk
  std::set<int> seen;
  int cur = curve_ids.front();
  int at = m.curves.at(cur).endpoints().second;
  seen.insert(cur);
  while (true) {
    const auto& cands = adj.at(at);
    int next = cands[0] == cur ? cands[1] : cands[0];
    if (seen.count(next)) break;
    seen.insert(next);
    auto [a, b] = m.curves.at(next).endpoints();
    at = a == at ? b : a;
    cur = next;
  }
  return seen.size() == curve_ids.size();
}

// Arcs share one circle; returns the fit without any cycle requirement.
std::optional<CircleFit> common_circle(const geo::GeoModel& m,
                                       const std::vector<int>& arc_ids) {
  if (arc_ids.empty()) return std::nullopt;
  const geo::CurveRecord& first = m.curves.at(arc_ids.front());
  CircleFit fit;
  fit.center = first.arc_center;
  fit.radius = first.arc_radius;
  if (!(fit.radius > 0)) return std::nullopt;
  double tol = 1e-6 * fit.radius;
  for (int id : arc_ids) {
    const geo::CurveRecord& arc = m.curves.at(id);
    if ((arc.arc_center - fit.center).norm() > tol) return std::nullopt;
    auto [s, e] = arc.endpoints();
    for (int pt : {s, e}) {
      double r = (m.points.at(pt).pos - fit.center).norm();
      if (std::fabs(r - fit.radius) > tol) return std::nullopt;
    }
  }
  return fit;
}

}  // namespace

std::optional<CircleFit> fit_circle(const geo::GeoModel& m,
                                    const std::vector<int>& arc_ids) {
  if (arc_ids.size() < 2) return std::nullopt;
  auto fit = common_circle(m, arc_ids);
  if (!fit) return std::nullopt;
  if (!single_closed_cycle(m, arc_ids)) return std::nullopt;
  return fit;
}

std::optional<CircleFit> fit_semicircle(const geo::GeoModel& m,
                                        const std::vector<int>& arc_ids,
                                        int line_id) {
  if (arc_ids.empty()) return std::nullopt;
  auto fit = common_circle(m, arc_ids);
  if (!fit) return std::nullopt;
  double tol = 1e-6 * fit->radius;
  const geo::CurveRecord& line = m.curves.at(line_id);
  Eigen::Vector3d a = m.points.at(line.points[0]).pos;
  Eigen::Vector3d b = m.points.at(line.points[1]).pos;
  if (std::fabs((a - fit->center).norm() - fit->radius) > tol) return std::nullopt;
  if (std::fabs((b - fit->center).norm() - fit->radius) > tol) return std::nullopt;
  if (((a + b) / 2.0 - fit->center).norm() > tol) return std::nullopt;  // diameter
  std::vector<int> all = arc_ids;
  all.push_back(line_id);
  if (!single_closed_cycle(m, all)) return std::nullopt;
  return fit;
}

std::vector<int> line_cycle_vertices(const geo::GeoModel& m,
                                     const std::vector<int>& line_ids) {
  if (line_ids.size() < 3) return {};
  std::map<int, std::vector<int>> adj;
  for (int id : line_ids) {
    const auto& pts = m.curves.at(id).points;
    if (pts[0] == pts[1]) return {};
    adj[pts[0]].push_back(id);
    adj[pts[1]].push_back(id);
  }
  for (const auto& [pt, cs] : adj)
    if (cs.size() != 2) return {};
  if (adj.size() != line_ids.size()) return {};

  int first = *std::min_element(line_ids.begin(), line_ids.end());
  int v0 = m.curves.at(first).points[0];
  std::vector<int> verts{v0};
  int cur = first;
  int at = m.curves.at(first).points[1];
  while (at != v0) {
    verts.push_back(at);
    const auto& cands = adj.at(at);
    int next = cands[0] == cur ? cands[1] : cands[0];
    const auto& pts = m.curves.at(next).points;
    at = pts[0] == at ? pts[1] : pts[0];
    cur = next;
  }
  if (verts.size() != line_ids.size()) return {};
  return verts;
}

int quad_kind(const geo::GeoModel& m, const std::vector<int>& line_ids) {
  if (line_ids.size() != 4) return 0;
  auto verts = line_cycle_vertices(m, line_ids);
  if (verts.size() != 4) return 0;
  Eigen::Vector2d p[4];
  for (int i = 0; i < 4; ++i) p[i] = m.points.at(verts[i]).pos.head<2>();
  Eigen::Vector2d e[4];
  double len[4];
  for (int i = 0; i < 4; ++i) {
    e[i] = p[(i + 1) % 4] - p[i];
    len[i] = e[i].norm();
    if (!(len[i] > 0)) return 0;
  }
  for (int i = 0; i < 4; ++i) {
    double d = std::fabs(e[i].dot(e[(i + 1) % 4]));
    if (d > 1e-6 * len[i] * len[(i + 1) % 4]) return 0;
  }
  bool square = std::fabs(len[0] - len[1]) <= 1e-6 * std::max(len[0], len[1]);
  return square ? 1 : 2;
}

}  // namespace detail

namespace {

class Dsu {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end()) {
      parent_[x] = x;
      return x;
    }
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::map<int, int> parent_;
};

std::optional<Shape> classify_component(const geo::GeoModel& m, const Component& c) {
  detail::CurveSplit cs = detail::split_curves(m, c);
  if (!c.extrusions.empty()) {
    if (!cs.splines.empty() || !cs.lines.empty()) return std::nullopt;
    if (!detail::fit_circle(m, cs.arcs)) return std::nullopt;
    bool all_translate = true;
    bool all_rotate = true;
    for (int i : c.extrusions) {
      if (m.extrusions[i].kind == geo::ExtrusionKind::Translate) all_rotate = false;
      else all_translate = false;
    }
    if (all_translate) return Shape::Pipe;
    if (all_rotate) return Shape::BentPipe;
    return std::nullopt;
  }
  if (!cs.splines.empty()) return std::nullopt;
  if (!cs.arcs.empty()) {
    if (cs.lines.empty()) {
      if (detail::fit_circle(m, cs.arcs)) return Shape::Circle;
      return std::nullopt;
    }
    if (cs.lines.size() == 1) {
      if (detail::fit_semicircle(m, cs.arcs, cs.lines[0])) return Shape::SemiCircle;
      return std::nullopt;
    }
    return std::nullopt;
  }
  if (cs.lines.size() == 4) {
    int q = detail::quad_kind(m, cs.lines);
    if (q == 1) return Shape::Square;
    if (q == 2) return Shape::Rectangle;
    return std::nullopt;
  }
  if (c.surfaces.size() == 3 && c.points.size() >= 12 && fit_ibeam(m, c).ok)
    return Shape::IBeam;
  return std::nullopt;
}

}  // namespace

std::vector<Component> split_components(const geo::GeoModel& m) {
  Dsu dsu;
  for (const auto& [id, curve] : m.curves) {
    for (size_t i = 1; i < curve.points.size(); ++i)
      dsu.unite(curve.points[0], curve.points[i]);
  }
  std::map<int, Component> by_root;
  std::map<int, std::set<int>> pts_by_root;
  for (const auto& [id, curve] : m.curves) {
    int root = dsu.find(curve.points[0]);
    by_root[root].curves.push_back(id);
    for (int p : curve.points) pts_by_root[root].insert(p);
  }
  std::map<int, int> loop_root;
  for (const auto& [id, loop] : m.loops) {
    int curve0 = std::abs(loop.curves.front());
    int root = dsu.find(m.curves.at(curve0).points[0]);
    loop_root[id] = root;
    by_root[root].loops.push_back(id);
  }
  std::map<int, int> surface_root;
  for (const auto& [id, surf] : m.surfaces) {
    int root = loop_root.at(surf.loops.front());
    surface_root[id] = root;
    by_root[root].surfaces.push_back(id);
  }
  for (size_t i = 0; i < m.extrusions.size(); ++i) {
    if (m.extrusions[i].surfaces.empty()) continue;
    int root = surface_root.at(m.extrusions[i].surfaces.front());
    by_root[root].extrusions.push_back(static_cast<int>(i));
  }
  std::vector<Component> out;
  for (auto& [root, comp] : by_root) {
    comp.points.assign(pts_by_root[root].begin(), pts_by_root[root].end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.curves.front() < b.curves.front();
  });
  return out;
}

std::vector<ClassifiedComponent> classify(const geo::GeoModel& m) {
  std::vector<ClassifiedComponent> out;
  for (Component& c : split_components(m)) {
    std::optional<Shape> shape = classify_component(m, c);
    out.push_back(ClassifiedComponent{std::move(c), shape});
  }
  return out;
}

EntityCensus census_of(const geo::GeoModel& m) {
  EntityCensus c;
  c.points = static_cast<int>(m.points.size());
  for (const auto& [id, curve] : m.curves) {
    switch (curve.kind) {
      case geo::CurveKind::Line: ++c.lines; break;
      case geo::CurveKind::CircleArc: ++c.arcs; break;
      case geo::CurveKind::Spline: ++c.splines; break;
    }
  }
  c.loops = static_cast<int>(m.loops.size());
  c.surfaces = static_cast<int>(m.surfaces.size());
  for (const auto& e : m.extrusions) {
    if (e.kind == geo::ExtrusionKind::Translate) ++c.translates;
    else ++c.rotates;
  }
  return c;
}

EntityCensus census_of(const geo::GeoModel& m, const Component& comp) {
  EntityCensus c;
  c.points = static_cast<int>(comp.points.size());
  for (int id : comp.curves) {
    switch (m.curves.at(id).kind) {
      case geo::CurveKind::Line: ++c.lines; break;
      case geo::CurveKind::CircleArc: ++c.arcs; break;
      case geo::CurveKind::Spline: ++c.splines; break;
    }
  }
  c.loops = static_cast<int>(comp.loops.size());
  c.surfaces = static_cast<int>(comp.surfaces.size());
  for (int i : comp.extrusions) {
    if (m.extrusions[i].kind == geo::ExtrusionKind::Translate) ++c.translates;
    else ++c.rotates;
  }
  return c;
}

EntityCensus canonical_census(Shape shape) {
  switch (shape) {
    case Shape::Square:
    case Shape::Rectangle: return {4, 4, 0, 0, 1, 1, 0, 0};
    case Shape::Circle: return {5, 0, 4, 0, 1, 1, 0, 0};
    case Shape::SemiCircle: return {4, 1, 2, 0, 1, 1, 0, 0};
    case Shape::IBeam: return {12, 14, 0, 0, 3, 3, 0, 0};
    case Shape::Pipe: return {5, 0, 4, 0, 1, 1, 1, 0};
    case Shape::BentPipe: return {5, 0, 4, 0, 1, 1, 0, 1};
  }
  return {};
}

}  // namespace geogen::kernel
