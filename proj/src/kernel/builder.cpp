#include "geogen/kernel/builder.hpp"

#include <cmath>

#include "geogen/support/numeric.hpp"

namespace geogen::kernel {

namespace {

struct Term {
  int sign;  // +1 or -1
  std::string text;
};
using Offset = std::vector<Term>;  // empty = zero offset

std::string plain_coord(const std::string& base, const Offset& off) {
  std::string out = base;
  for (const Term& t : off)
    out += (t.sign > 0 ? " + " : " - ") + t.text;
  return out;
}

// Offset as a standalone multiplicand: "side / 2", "(0 - h / 2 + tf)", "".
std::string offset_factor(const Offset& off) {
  if (off.empty()) return "";
  if (off.size() == 1 && off[0].sign > 0) return off[0].text;
  std::string body = off[0].sign > 0 ? off[0].text : "0 - " + off[0].text;
  for (size_t i = 1; i < off.size(); ++i)
    body += (off[i].sign > 0 ? " + " : " - ") + off[i].text;
  return "(" + body + ")";
}

std::string rotated_coord(const Offset& ox, const Offset& oy, bool is_x) {
  std::string fx = offset_factor(ox);
  std::string fy = offset_factor(oy);
  std::string out = is_x ? "center_x" : "center_y";
  if (is_x) {
    if (!fx.empty()) out += " + " + fx + " * Cos(angle)";
    if (!fy.empty()) out += " - " + fy + " * Sin(angle)";
  } else {
    if (!fx.empty()) out += " + " + fx + " * Sin(angle)";
    if (!fy.empty()) out += " + " + fy + " * Cos(angle)";
  }
  return out;
}

class ScriptWriter {
 public:
  void line(const std::string& s) {
    out_ += s;
    out_ += '\n';
  }
  void blank() { out_ += '\n'; }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

std::string point_stmt(int id, const std::string& x, const std::string& y,
                       const std::string& z) {
  return "Point(" + std::to_string(id) + ") = {" + x + ", " + y + ", " + z +
         ", mesh_size};";
}

void emit_points(ScriptWriter& w, const std::vector<std::pair<Offset, Offset>>& pts,
                 bool rotated, int first_id) {
  int id = first_id;
  for (const auto& [ox, oy] : pts) {
    std::string x = rotated ? rotated_coord(ox, oy, true) : plain_coord("center_x", ox);
    std::string y = rotated ? rotated_coord(ox, oy, false) : plain_coord("center_y", oy);
    w.line(point_stmt(id++, x, y, "0"));
  }
}

void emit_ring_lines(ScriptWriter& w, int n) {
  for (int i = 1; i <= n; ++i) {
    int a = i;
    int b = i == n ? 1 : i + 1;
    w.line("Line(" + std::to_string(i) + ") = {" + std::to_string(a) + ", " +
           std::to_string(b) + "};");
  }
}

void emit_var(ScriptWriter& w, const std::string& name, double value,
              const std::string& comment = "") {
  std::string s = name + " = " + format_double(value) + ";";
  if (!comment.empty()) s += " // " + comment;
  w.line(s);
}

void emit_center_vars(ScriptWriter& w, const GeometrySpec& spec, bool with_z) {
  emit_var(w, "center_x", spec.center.x());
  emit_var(w, "center_y", spec.center.y());
  if (with_z) emit_var(w, "center_z", spec.center.z());
}

bool emit_angle_var(ScriptWriter& w, const GeometrySpec& spec) {
  double rot = norm_deg(spec.orientation_deg);
  if (rot == 0.0) return false;
  w.line("angle = " + format_double(rot) + " * Pi / 180;");
  return true;
}

void emit_square(ScriptWriter& w, const GeometrySpec& spec) {
  w.line("// Square parameters");
  emit_var(w, "side", spec.dims.at("side"));
  emit_var(w, "mesh_size", spec.mesh_size);
  emit_center_vars(w, spec, false);
  bool rotated = emit_angle_var(w, spec);
  w.blank();
  w.line("// Corner points");
  Offset ph{{+1, "side / 2"}};
  Offset mh{{-1, "side / 2"}};
  emit_points(w, {{mh, mh}, {ph, mh}, {ph, ph}, {mh, ph}}, rotated, 1);
  w.blank();
  w.line("// Define lines");
  emit_ring_lines(w, 4);
  w.blank();
  w.line("// Define surface");
  w.line("Line Loop(1) = {1, 2, 3, 4};");
  w.line("Plane Surface(1) = {1};");
}

void emit_rectangle(ScriptWriter& w, const GeometrySpec& spec) {
  w.line("// Rectangle parameters");
  emit_var(w, "width", spec.dims.at("width"));
  emit_var(w, "height", spec.dims.at("height"));
  emit_var(w, "mesh_size", spec.mesh_size);
  emit_center_vars(w, spec, false);
  bool rotated = emit_angle_var(w, spec);
  w.blank();
  w.line("// Corner points");
  Offset wp{{+1, "width / 2"}};
  Offset wm{{-1, "width / 2"}};
  Offset hp{{+1, "height / 2"}};
  Offset hm{{-1, "height / 2"}};
  emit_points(w, {{wm, hm}, {wp, hm}, {wp, hp}, {wm, hp}}, rotated, 1);
  w.blank();
  w.line("// Define lines");
  emit_ring_lines(w, 4);
  w.blank();
  w.line("// Define surface");
  w.line("Line Loop(1) = {1, 2, 3, 4};");
  w.line("Plane Surface(1) = {1};");
}

void emit_ibeam(ScriptWriter& w, const GeometrySpec& spec) {
  const char* unit = unit_name(spec.unit);
  w.line("// I-beam parameters");
  emit_var(w, "h", spec.dims.at("h"), std::string("Total height ") + unit);
  emit_var(w, "b", spec.dims.at("b"), std::string("Flange width ") + unit);
  emit_var(w, "tw", spec.dims.at("tw"), std::string("Web thickness ") + unit);
  emit_var(w, "tf", spec.dims.at("tf"), std::string("Flange thickness ") + unit);
  emit_var(w, "mesh_size", spec.mesh_size);
  emit_center_vars(w, spec, false);
  bool rotated = emit_angle_var(w, spec);
  w.blank();

  Offset bp{{+1, "b / 2"}};
  Offset bm{{-1, "b / 2"}};
  Offset twp{{+1, "tw / 2"}};
  Offset twm{{-1, "tw / 2"}};
  Offset hb{{-1, "h / 2"}};
  Offset hbf{{-1, "h / 2"}, {+1, "tf"}};
  Offset ht{{+1, "h / 2"}};
  Offset htf{{+1, "h / 2"}, {-1, "tf"}};

  w.line("// Bottom flange points");
  emit_points(w, {{bm, hb}, {bp, hb}, {bp, hbf}, {twp, hbf}, {twm, hbf}, {bm, hbf}},
              rotated, 1);
  w.blank();
  w.line("// Web points");
  emit_points(w, {{twm, htf}, {twp, htf}}, rotated, 7);
  w.blank();
  w.line("// Top flange points");
  emit_points(w, {{bp, htf}, {bp, ht}, {bm, ht}, {bm, htf}}, rotated, 9);
  w.blank();
  w.line("// Define lines");
  const int pairs[14][2] = {{1, 2},  {2, 3},  {3, 4},   {4, 5},   {5, 6},
                            {6, 1},  {5, 7},  {7, 8},   {8, 4},   {8, 9},
                            {9, 10}, {10, 11}, {11, 12}, {12, 7}};
  for (int i = 0; i < 14; ++i)
    w.line("Line(" + std::to_string(i + 1) + ") = {" + std::to_string(pairs[i][0]) +
           ", " + std::to_string(pairs[i][1]) + "};");
  w.blank();
  w.line("// Define surfaces");
  w.line("Line Loop(1) = {1, 2, 3, 4, 5, 6}; // Bottom flange");
  w.line("Line Loop(2) = {-4, -9, -8, -7}; // Web");
  w.line("Line Loop(3) = {8, 10, 11, 12, 13, 14}; // Top flange");
  w.line("Plane Surface(1) = {1};");
  w.line("Plane Surface(2) = {2};");
  w.line("Plane Surface(3) = {3};");
}

void emit_circle_body(ScriptWriter& w, const std::string& rvar, bool with_z,
                      const char* points_comment) {
  std::string z = with_z ? "center_z" : "0";
  w.line(points_comment);
  w.line("Point(1) = {center_x + " + rvar + ", center_y, " + z + ", mesh_size};");
  w.line("Point(2) = {center_x, center_y + " + rvar + ", " + z + ", mesh_size};");
  w.line("Point(3) = {center_x - " + rvar + ", center_y, " + z + ", mesh_size};");
  w.line("Point(4) = {center_x, center_y - " + rvar + ", " + z + ", mesh_size};");
  w.line("Point(5) = {center_x, center_y, " + z + ", mesh_size}; // Center point");
  w.blank();
  w.line(with_z ? "// Cross-section arcs" : "// Define circle arcs");
  w.line("Circle(1) = {1, 5, 2};");
  w.line("Circle(2) = {2, 5, 3};");
  w.line("Circle(3) = {3, 5, 4};");
  w.line("Circle(4) = {4, 5, 1};");
  w.blank();
  w.line("// Define surface");
  w.line("Line Loop(1) = {1, 2, 3, 4};");
  w.line("Plane Surface(1) = {1};");
}

void emit_circle(ScriptWriter& w, const GeometrySpec& spec) {
  w.line("// Circle parameters");
  emit_var(w, "radius", spec.dims.at("radius"));
  emit_var(w, "mesh_size", spec.mesh_size);
  emit_center_vars(w, spec, false);
  w.blank();
  emit_circle_body(w, "radius", false, "// Define points");
}

void emit_semicircle(ScriptWriter& w, const GeometrySpec& spec) {
  w.line("// Semicircle parameters");
  emit_var(w, "radius", spec.dims.at("radius"));
  emit_var(w, "mesh_size", spec.mesh_size);
  emit_center_vars(w, spec, false);
  w.blank();
  w.line("// Define points");

  double apex = norm_deg(facing_angle_deg(spec.facing) + spec.orientation_deg);
  bool cardinal = std::fmod(apex, 90.0) == 0.0;
  if (cardinal) {
    // offsets for directions 0/90/180/270 degrees
    auto dir_offsets = [](int quarter) -> std::pair<Offset, Offset> {
      switch (quarter & 3) {
        case 0: return {Offset{{+1, "radius"}}, Offset{}};
        case 1: return {Offset{}, Offset{{+1, "radius"}}};
        case 2: return {Offset{{-1, "radius"}}, Offset{}};
        default: return {Offset{}, Offset{{-1, "radius"}}};
      }
    };
    int q = static_cast<int>(std::llround(apex / 90.0));
    emit_points(w, {dir_offsets(q + 3), dir_offsets(q), dir_offsets(q + 1)}, false, 1);
  } else {
    auto trig_point = [&](int id, double deg) {
      std::string d = format_double(deg);
      w.line("Point(" + std::to_string(id) + ") = {center_x + radius * Cos(" + d +
             " * Pi / 180), center_y + radius * Sin(" + d + " * Pi / 180), 0, "
             "mesh_size};");
    };
    trig_point(1, apex - 90.0);
    trig_point(2, apex);
    trig_point(3, apex + 90.0);
  }
  w.line("Point(4) = {center_x, center_y, 0, mesh_size}; // Center point");
  w.blank();
  w.line("// Define arcs and diameter");
  w.line("Circle(1) = {1, 4, 2};");
  w.line("Circle(2) = {2, 4, 3};");
  w.line("Line(3) = {3, 1};");
  w.blank();
  w.line("// Define surface");
  w.line("Line Loop(1) = {1, 2, 3};");
  w.line("Plane Surface(1) = {1};");
}

void emit_pipe(ScriptWriter& w, const GeometrySpec& spec) {
  w.line("// Pipe parameters");
  emit_var(w, "radius", spec.dims.at("radius"));
  emit_var(w, "length", spec.dims.at("length"));
  emit_var(w, "mesh_size", spec.mesh_size);
  emit_center_vars(w, spec, true);
  w.blank();
  emit_circle_body(w, "radius", true, "// Cross-section points");
  w.blank();
  w.line("// Extrude along the pipe axis");
  w.line("Extrude {0, 0, length} { Surface{1}; }");
}

void emit_bentpipe(ScriptWriter& w, const GeometrySpec& spec) {
  w.line("// Bent pipe parameters");
  emit_var(w, "pipe_radius", spec.dims.at("pipeRadius"));
  emit_var(w, "bend_radius", spec.dims.at("bendRadius"));
  emit_var(w, "bend_angle", spec.dims.at("bendAngle"));
  emit_var(w, "mesh_size", spec.mesh_size);
  emit_center_vars(w, spec, true);
  w.blank();
  emit_circle_body(w, "pipe_radius", true, "// Cross-section points");
  w.blank();
  w.line("// Extrude around the bend axis");
  w.line(
      "Extrude { {0, 1, 0}, {center_x - bend_radius, center_y, center_z}, "
      "bend_angle * Pi / 180 } { Surface{1}; }");
}

}  // namespace

std::string build_geometry(const GeometrySpec& spec) {
  auto problems = spec_problems(spec);
  if (!problems.empty()) {
    std::string msg = "invalid geometry spec: ";
    for (size_t i = 0; i < problems.size(); ++i) {
      if (i) msg += "; ";
      msg += problems[i];
    }
    throw InvalidSpec(msg);
  }
  ScriptWriter w;
  w.line(std::string("// units: ") + unit_name(spec.unit));
  switch (spec.shape) {
    case Shape::Square: emit_square(w, spec); break;
    case Shape::Rectangle: emit_rectangle(w, spec); break;
    case Shape::Circle: emit_circle(w, spec); break;
    case Shape::SemiCircle: emit_semicircle(w, spec); break;
    case Shape::IBeam: emit_ibeam(w, spec); break;
    case Shape::Pipe: emit_pipe(w, spec); break;
    case Shape::BentPipe: emit_bentpipe(w, spec); break;
  }
  return w.take();
}

}  // namespace geogen::kernel
