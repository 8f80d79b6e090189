#include "geogen/dataset/qc.hpp"

#include <cctype>
#include <cmath>

#include "geogen/geo/validate.hpp"
#include "geogen/kernel/measure.hpp"
#include "geogen/support/numeric.hpp"

namespace geogen::dataset {

using kernel::Facing;
using kernel::GeometrySpec;
using kernel::Shape;

namespace {

bool contains_word(const std::string& text, const std::string& word) {
  size_t pos = 0;
  while ((pos = text.find(word, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    size_t end = pos + word.size();
    bool right_ok =
        end >= text.size() || !std::isalnum(static_cast<unsigned char>(text[end]));
    if (left_ok && right_ok) return true;
    pos += 1;
  }
  return false;
}

bool pool_has(const std::vector<double>& pool, double v) {
  for (double p : pool)
    if (approx(p, v, 1e-9, 1e-9)) return true;
  return false;
}

void check_geometry(const GeometrySpec& spec, const geo::GeoModel& model,
                    QCReport& rep) {
  auto classified = kernel::classify(model);
  const kernel::ClassifiedComponent* match = nullptr;
  for (const auto& cc : classified)
    if (cc.shape == spec.shape) match = &cc;
  if (classified.size() != 1 || !match) {
    rep.details.push_back("expected exactly one body of shape " +
                          std::string(kernel::shape_name(spec.shape)));
    return;
  }
  kernel::MeasureResult mr = kernel::measure(model, *match);
  bool ok = true;
  auto complain = [&](const std::string& what) {
    rep.details.push_back(what);
    ok = false;
  };
  for (const auto& [key, want] : spec.dims) {
    auto it = mr.geometry.dims.find(key);
    if (it == mr.geometry.dims.end()) {
      complain("measurement lacks dimension '" + key + "'");
      continue;
    }
    if (!approx(it->second, want, 1e-9, 1e-9))
      complain("dimension '" + key + "' measured " + format_double(it->second) +
               ", expected " + format_double(want));
  }
  for (int axis = 0; axis < 3; ++axis)
    if (!approx(mr.geometry.center[axis], spec.center[axis], 1e-9, 1e-9))
      complain("center mismatch on axis " + std::to_string(axis));
  if (!approx(mr.geometry.mesh_size, spec.mesh_size, 1e-9, 1e-9))
    complain("mesh size measured " + format_double(mr.geometry.mesh_size) +
             ", expected " + format_double(spec.mesh_size));
  if (spec.shape == Shape::Square || spec.shape == Shape::Rectangle ||
      spec.shape == Shape::IBeam) {
    if (angle_diff_deg(mr.geometry.orientation_deg, spec.orientation_deg) > 1e-7)
      complain("orientation measured " +
               format_double(mr.geometry.orientation_deg) + ", expected " +
               format_double(spec.orientation_deg));
  }
  if (spec.shape == Shape::SemiCircle) {
    double want_apex =
        kernel::facing_angle_deg(spec.facing) + spec.orientation_deg;
    if (angle_diff_deg(mr.geometry.orientation_deg, want_apex) > 1e-7)
      complain("semicircle apex measured " +
               format_double(mr.geometry.orientation_deg) + ", expected " +
               format_double(want_apex));
  }
  rep.geometry_ok = ok;
}

void check_params(const std::string& instruction, const GeometrySpec& spec,
                  const geo::GeoProgram& program, QCReport& rep) {
  bool ok = true;
  std::vector<double> pool;
  for (const auto& [key, value] : spec.dims) pool.push_back(value);
  pool.push_back(spec.center.x());
  pool.push_back(spec.center.y());
  pool.push_back(spec.center.z());
  pool.push_back(spec.orientation_deg);
  if (spec.mesh_size > 0) pool.push_back(spec.mesh_size);
  for (double lit : numeric_literals(instruction)) {
    if (!pool_has(pool, lit)) {
      rep.details.push_back("instruction value " + format_double(lit) +
                            " not realized in the script");
      ok = false;
    }
  }
  if (spec.shape == Shape::SemiCircle &&
      !contains_word(instruction, kernel::facing_name(spec.facing))) {
    rep.details.push_back("instruction does not state the facing direction");
    ok = false;
  }
  bool names_mm = contains_word(instruction, "mm");
  bool names_cm = contains_word(instruction, "cm");
  if (names_mm || names_cm) {
    auto declared = geo::declared_unit(program);
    const char* want = names_mm ? "mm" : "cm";
    if (!declared || *declared != want) {
      rep.details.push_back("instruction names unit " + std::string(want) +
                            " but the script declares " +
                            (declared ? *declared : std::string("none")));
      ok = false;
    }
  }
  rep.params_ok = ok;
}

}  // namespace

std::vector<double> numeric_literals(const std::string& text) {
  std::vector<double> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    bool starts_number =
        std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < text.size() &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])));
    if (!starts_number) {
      ++i;
      continue;
    }
    size_t start = i;
    if (c == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i + 1 < text.size() && text[i] == '.' &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    }
    out.push_back(std::stod(text.substr(start, i - start)));
  }
  return out;
}

QCReport qc_validate(const std::string& instruction, const std::string& script,
                     const kernel::GeometrySpec& spec) {
  QCReport rep;
  geo::ValidationReport vr = geo::validate(script);
  rep.syntax_ok = vr.model_ok && !geo::has_errors(vr.diagnostics);
  if (!rep.syntax_ok) {
    for (const auto& d : vr.diagnostics)
      rep.details.push_back(d.message);
    return rep;
  }
  check_geometry(spec, vr.model, rep);
  check_params(instruction, spec, vr.program, rep);
  return rep;
}

}  // namespace geogen::dataset
