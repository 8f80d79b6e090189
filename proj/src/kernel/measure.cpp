#include "geogen/kernel/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geogen/support/numeric.hpp"
#include "internal.hpp"

namespace geogen::kernel {

namespace {

constexpr double kRad2Deg = 180.0 / std::numbers::pi_v<double>;

Eigen::Vector3d centroid(const geo::GeoModel& m, const std::vector<int>& point_ids) {
  Eigen::Vector3d sum{0, 0, 0};
  if (point_ids.empty()) return sum;
  for (int id : point_ids) sum += m.points.at(id).pos;
  return sum / static_cast<double>(point_ids.size());
}

double edge_angle_deg(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return norm_deg(std::atan2(b.y() - a.y(), b.x() - a.x()) * kRad2Deg);
}

// Sorted values grouped within tol; returns (level value, count) pairs.
std::vector<std::pair<double, int>> cluster_levels(std::vector<double> vals,
                                                   double tol) {
  std::sort(vals.begin(), vals.end());
  std::vector<std::pair<double, int>> out;
  size_t i = 0;
  while (i < vals.size()) {
    size_t j = i;
    double sum = 0;
    while (j < vals.size() && vals[j] - vals[i] <= tol) {
      sum += vals[j];
      ++j;
    }
    out.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

Facing snap_facing(double apex_deg) {
  const std::pair<Facing, double> cards[] = {{Facing::Right, 0.0},
                                             {Facing::Up, 90.0},
                                             {Facing::Left, 180.0},
                                             {Facing::Down, 270.0}};
  Facing best = Facing::Right;
  double best_d = 1e9;
  for (auto [f, deg] : cards) {
    double d = angle_diff_deg(apex_deg, deg);
    if (d < best_d) {
      best_d = d;
      best = f;
    }
  }
  return best;
}

}  // namespace

double mesh_size_mode(const geo::GeoModel& m, const Component& comp) {
  std::map<double, int> counts;
  for (int id : comp.points) {
    double v = m.points.at(id).mesh_size;
    if (v > 0) ++counts[v];
  }
  double best = 0;
  int best_count = 0;
  for (const auto& [value, count] : counts) {
    if (count > best_count) {
      best = value;
      best_count = count;
    }
  }
  return best;
}

IBeamFit fit_ibeam(const geo::GeoModel& m, const Component& comp) {
  IBeamFit out;
  if (comp.points.size() != 12) return out;
  detail::CurveSplit cs = detail::split_curves(m, comp);
  if (cs.lines.empty() || !cs.arcs.empty() || !cs.splines.empty()) return out;

  std::vector<Eigen::Vector2d> pts;
  pts.reserve(12);
  for (int id : comp.points) pts.push_back(m.points.at(id).pos.head<2>());
  Eigen::Vector2d c{0, 0};
  for (const auto& p : pts) c += p;
  c /= 12.0;
  double scale = 0;
  for (const auto& p : pts) scale = std::max(scale, (p - c).norm());
  if (!(scale > 0)) return out;
  double tol = 1e-6 * scale;

  int first_line = *std::min_element(cs.lines.begin(), cs.lines.end());
  const auto& lp = m.curves.at(first_line).points;
  Eigen::Vector2d dir = m.points.at(lp[1]).pos.head<2>() - m.points.at(lp[0]).pos.head<2>();
  if (!(dir.norm() > 0)) return out;
  double theta0 = std::atan2(dir.y(), dir.x());

  for (int trial = 0; trial < 2; ++trial) {
    double theta = theta0 + trial * std::numbers::pi_v<double> / 2.0;
    double ct = std::cos(theta);
    double st = std::sin(theta);
    std::vector<double> us, vs;
    std::vector<Eigen::Vector2d> uv;
    for (const auto& p : pts) {
      Eigen::Vector2d d = p - c;
      double u = ct * d.x() + st * d.y();
      double v = -st * d.x() + ct * d.y();
      us.push_back(u);
      vs.push_back(v);
      uv.push_back({u, v});
    }
    auto ul = cluster_levels(us, tol);
    auto vl = cluster_levels(vs, tol);
    if (ul.size() != 4 || vl.size() != 4) continue;
    const int u_counts[4] = {4, 2, 2, 4};
    const int v_counts[4] = {2, 4, 4, 2};
    bool counts_ok = true;
    for (int i = 0; i < 4; ++i) {
      if (ul[i].second != u_counts[i] || vl[i].second != v_counts[i]) counts_ok = false;
    }
    if (!counts_ok) continue;
    if (std::fabs(ul[0].first + ul[3].first) > tol) continue;
    if (std::fabs(ul[1].first + ul[2].first) > tol) continue;
    if (std::fabs(vl[0].first + vl[3].first) > tol) continue;
    if (std::fabs(vl[1].first + vl[2].first) > tol) continue;
    double b = ul[3].first - ul[0].first;
    double tw = ul[2].first - ul[1].first;
    double h = vl[3].first - vl[0].first;
    double tf = vl[1].first - vl[0].first;
    if (std::fabs((vl[3].first - vl[2].first) - tf) > tol) continue;
    if (!(tw < b - tol) || !(2 * tf < h - tol)) continue;

    double b2 = b / 2, tw2 = tw / 2, h2 = h / 2;
    std::vector<Eigen::Vector2d> expected = {
        {-b2, -h2},       {b2, -h2},       {b2, -h2 + tf},  {tw2, -h2 + tf},
        {-tw2, -h2 + tf}, {-b2, -h2 + tf}, {-tw2, h2 - tf}, {tw2, h2 - tf},
        {b2, h2 - tf},    {b2, h2},        {-b2, h2},       {-b2, h2 - tf}};
    std::vector<bool> used(12, false);
    bool all_matched = true;
    for (const auto& q : uv) {
      bool matched = false;
      for (int i = 0; i < 12; ++i) {
        if (used[i]) continue;
        if (std::fabs(q.x() - expected[i].x()) <= tol &&
            std::fabs(q.y() - expected[i].y()) <= tol) {
          used[i] = true;
          matched = true;
          break;
        }
      }
      if (!matched) {
        all_matched = false;
        break;
      }
    }
    if (!all_matched) continue;

    out.ok = true;
    out.h = h;
    out.b = b;
    out.tw = tw;
    out.tf = tf;
    out.center = c;
    return out;
  }
  return out;
}

MeasureResult measure(const geo::GeoModel& m, const ClassifiedComponent& cc) {
  MeasureResult res;
  MeasuredGeometry& g = res.geometry;
  const Component& comp = cc.component;
  g.shape = cc.shape;
  g.body_count = static_cast<int>(split_components(m).size());
  g.mesh_size = mesh_size_mode(m, comp);
  g.center = centroid(m, comp.points);
  if (!cc.shape) return res;

  detail::CurveSplit cs = detail::split_curves(m, comp);
  auto pos = [&](int id) { return m.points.at(id).pos; };

  switch (*cc.shape) {
    case Shape::Square:
    case Shape::Rectangle: {
      auto verts = detail::line_cycle_vertices(m, cs.lines);
      if (verts.size() != 4) {
        for (const std::string& k : dim_keys(*cc.shape)) res.unavailable.push_back(k);
        break;
      }
      Eigen::Vector3d p0 = pos(verts[0]);
      Eigen::Vector3d p1 = pos(verts[1]);
      Eigen::Vector3d p2 = pos(verts[2]);
      g.orientation_deg = edge_angle_deg(p0, p1);
      g.center = (p0 + p1 + p2 + pos(verts[3])) / 4.0;
      if (*cc.shape == Shape::Square) {
        g.dims["side"] = (p1 - p0).norm();
      } else {
        g.dims["width"] = (p1 - p0).norm();
        g.dims["height"] = (p2 - p1).norm();
      }
      break;
    }
    case Shape::Circle: {
      auto fit = detail::fit_circle(m, cs.arcs);
      if (!fit) {
        res.unavailable.push_back("radius");
        break;
      }
      g.dims["radius"] = fit->radius;
      g.center = fit->center;
      break;
    }
    case Shape::SemiCircle: {
      auto fit = detail::fit_semicircle(m, cs.arcs, cs.lines[0]);
      if (!fit) {
        res.unavailable.push_back("radius");
        break;
      }
      g.dims["radius"] = fit->radius;
      g.center = fit->center;
      const auto& line = m.curves.at(cs.lines[0]);
      Eigen::Vector3d a = pos(line.points[0]);
      Eigen::Vector3d b = pos(line.points[1]);
      Eigen::Vector2d ab = (b - a).head<2>();
      double best_d = -1;
      Eigen::Vector3d apex = a;
      for (int arc_id : cs.arcs) {
        auto [s, e] = m.curves.at(arc_id).endpoints();
        for (int pid : {s, e}) {
          Eigen::Vector2d ap = (pos(pid) - a).head<2>();
          double d = std::fabs(ab.x() * ap.y() - ab.y() * ap.x());
          if (d > best_d) {
            best_d = d;
            apex = pos(pid);
          }
        }
      }
      Eigen::Vector3d dir = apex - fit->center;
      g.orientation_deg = norm_deg(std::atan2(dir.y(), dir.x()) * kRad2Deg);
      g.facing = snap_facing(g.orientation_deg);
      break;
    }
    case Shape::IBeam: {
      IBeamFit fit = fit_ibeam(m, comp);
      if (!fit.ok) {
        for (const std::string& k : dim_keys(Shape::IBeam)) res.unavailable.push_back(k);
        break;
      }
      g.dims["h"] = fit.h;
      g.dims["b"] = fit.b;
      g.dims["tw"] = fit.tw;
      g.dims["tf"] = fit.tf;
      double zsum = 0;
      for (int id : comp.points) zsum += pos(id).z();
      g.center = Eigen::Vector3d(fit.center.x(), fit.center.y(),
                                 zsum / static_cast<double>(comp.points.size()));
      int first_line = *std::min_element(cs.lines.begin(), cs.lines.end());
      const auto& lp = m.curves.at(first_line).points;
      g.orientation_deg = edge_angle_deg(pos(lp[0]), pos(lp[1]));
      break;
    }
    case Shape::Pipe: {
      auto fit = detail::fit_circle(m, cs.arcs);
      if (fit) {
        g.dims["radius"] = fit->radius;
        g.center = fit->center;
      } else {
        res.unavailable.push_back("radius");
      }
      const geo::ExtrusionRecord* tr = nullptr;
      for (int i : comp.extrusions) {
        if (m.extrusions[i].kind == geo::ExtrusionKind::Translate) {
          tr = &m.extrusions[i];
          break;
        }
      }
      if (tr) g.dims["length"] = tr->delta.norm();
      else res.unavailable.push_back("length");
      break;
    }
    case Shape::BentPipe: {
      auto fit = detail::fit_circle(m, cs.arcs);
      if (fit) {
        g.dims["pipeRadius"] = fit->radius;
        g.center = fit->center;
      } else {
        res.unavailable.push_back("pipeRadius");
      }
      const geo::ExtrusionRecord* rot = nullptr;
      for (int i : comp.extrusions) {
        if (m.extrusions[i].kind == geo::ExtrusionKind::Rotate) {
          rot = &m.extrusions[i];
          break;
        }
      }
      if (rot && fit && rot->axis.norm() > 0) {
        Eigen::Vector3d axis = rot->axis.normalized();
        Eigen::Vector3d w = fit->center - rot->pivot;
        g.dims["bendRadius"] = (w - w.dot(axis) * axis).norm();
        g.dims["bendAngle"] = std::fabs(rot->angle_rad) * kRad2Deg;
      } else {
        res.unavailable.push_back("bendRadius");
        res.unavailable.push_back("bendAngle");
      }
      break;
    }
  }
  return res;
}

}  // namespace geogen::kernel
