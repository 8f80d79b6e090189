#include "geogen/scoring/score.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "geogen/geo/validate.hpp"
#include "geogen/kernel/classify.hpp"
#include "geogen/kernel/measure.hpp"
#include "geogen/support/numeric.hpp"

namespace geogen::scoring {

using kernel::ClassifiedComponent;
using kernel::Facing;
using kernel::GeometrySpec;
using kernel::Shape;

namespace {

constexpr double kBandEps = 1e-9;   // guards exact-boundary errors
constexpr double kMatchTol = 1e-6;  // "honored" tolerance for parameters
constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<Shape> related_shape(Shape s) {
  switch (s) {
    case Shape::Square: return Shape::Rectangle;
    case Shape::Rectangle: return Shape::Square;
    case Shape::Circle: return Shape::SemiCircle;
    case Shape::SemiCircle: return Shape::Circle;
    case Shape::Pipe: return Shape::BentPipe;
    case Shape::BentPipe: return Shape::Pipe;
    case Shape::IBeam: return std::nullopt;
  }
  return std::nullopt;
}

// Rotational symmetry of the measured edge convention.
double orientation_period(Shape s) {
  switch (s) {
    case Shape::Square: return 90.0;
    case Shape::Rectangle:
    case Shape::IBeam: return 180.0;
    default: return 360.0;
  }
}

bool is_angle_dim(const std::string& key) { return key == "bendAngle"; }

// Measured values comparable to a requested dimension, following the
// related-class correspondences (side vs width/height, radius vs pipe
// radius). Empty when the measurement has no counterpart.
std::vector<double> measured_values_for(const std::string& key,
                                        const std::map<std::string, double>& m) {
  auto grab = [&](std::initializer_list<const char*> keys) {
    std::vector<double> out;
    for (const char* k : keys) {
      auto it = m.find(k);
      if (it != m.end()) out.push_back(it->second);
    }
    return out;
  };
  if (auto it = m.find(key); it != m.end()) return {it->second};
  if (key == "side") return grab({"width", "height"});
  if (key == "width" || key == "height") return grab({"side"});
  if (key == "radius") return grab({"pipeRadius"});
  if (key == "pipeRadius") return grab({"radius"});
  return {};
}

std::string percent(double e) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f%%", e * 100.0);
  return buf;
}

std::string scale_text(double f) {
  if (f == 10.0) return "x10";
  if (f == 0.1) return "x0.1";
  return "x1";
}

struct Analysis {
  bool valid = false;
  std::string invalid_reason;
  geo::ValidationReport report;
  std::vector<ClassifiedComponent> components;
};

Analysis analyze(const std::string& candidate) {
  Analysis a;
  a.report = geo::validate(candidate);
  a.valid = a.report.model_ok && !geo::has_errors(a.report.diagnostics);
  if (!a.valid) {
    for (const auto& d : a.report.diagnostics)
      if (d.severity == geo::Severity::Error) {
        a.invalid_reason = d.message;
        break;
      }
    if (a.invalid_reason.empty()) a.invalid_reason = "script did not validate";
    return a;
  }
  a.components = kernel::classify(a.report.model);
  return a;
}

ScoreCard zero_card(const std::string& reason) {
  ScoreCard card;
  std::string text = "script failed validation: " + reason;
  card.shape_accuracy = {0, text};
  card.dimensional_accuracy = {0, text};
  card.parameter_matching = {0, text};
  card.unit_consistency = {0, text};
  return card;
}

struct DimAnalysis {
  bool vacuous = false;       // no dimensions requested
  bool measurable = false;    // at least one requested dim had a counterpart
  double scale = 1.0;         // winning unit hypothesis
  double worst = kInf;        // max relative error under the winning scale
  std::string worst_key;
  bool mixed_scales = false;  // dims fit individually but under different scales
};

DimAnalysis analyze_dims(const GeometrySpec& spec,
                         const std::map<std::string, double>& measured) {
  DimAnalysis out;
  auto requested = spec.requested_params();
  std::vector<std::string> keys;
  for (const auto& [key, value] : spec.dims)
    if (requested.count(key)) keys.push_back(key);
  if (keys.empty()) {
    out.vacuous = true;
    out.worst = 0.0;
    return out;
  }

  auto error_at = [&](const std::string& key, double f) {
    double want = spec.dims.at(key);
    auto values = measured_values_for(key, measured);
    if (values.empty()) return kInf;
    double worst = 0.0;
    for (double v : values) {
      double adjusted = is_angle_dim(key) ? v : v / f;
      worst = std::max(worst, std::fabs(adjusted - want) / std::fabs(want));
    }
    return worst;
  };

  static const double kScales[] = {1.0, 10.0, 0.1};
  double best = kInf;
  double best_scale = 1.0;
  for (double f : kScales) {
    double worst = 0.0;
    for (const auto& key : keys) worst = std::max(worst, error_at(key, f));
    if (worst < best) {
      best = worst;
      best_scale = f;
    }
  }
  out.scale = best_scale;
  out.worst = best;
  double w = -1;
  for (const auto& key : keys) {
    if (!measured_values_for(key, measured).empty()) out.measurable = true;
    double e = error_at(key, best_scale);
    if (e > w) {
      w = e;
      out.worst_key = key;
    }
  }

  if (out.worst > 0.10 + kBandEps && out.measurable) {
    bool all_fit = true;
    bool diverse = false;
    double first_fit = 0.0;
    bool have_first = false;
    for (const auto& key : keys) {
      double fit_scale = 0.0;
      bool fits = false;
      for (double f : kScales)
        if (error_at(key, f) <= 0.10 + kBandEps) {
          fit_scale = f;
          fits = true;
          break;
        }
      if (!fits) {
        all_fit = false;
        break;
      }
      if (!have_first) {
        first_fit = fit_scale;
        have_first = true;
      } else if (fit_scale != first_fit) {
        diverse = true;
      }
    }
    out.mixed_scales = all_fit && diverse;
  }
  return out;
}

CriterionScore score_shape(const Analysis& a, const GeometrySpec& spec,
                           const ClassifiedComponent* target,
                           const kernel::EntityCensus& census) {
  const char* want = kernel::shape_name(spec.shape);
  bool exact = target && target->shape == spec.shape;
  if (exact) {
    if (census == kernel::canonical_census(spec.shape))
      return {15, std::string("found the requested ") + want +
                 " with the canonical construction"};
    return {10, std::string("found the requested ") + want +
               " built with a nonstandard construction"};
  }
  auto rel = related_shape(spec.shape);
  if (rel && target && target->shape == *rel)
    return {5, std::string("requested ") + want + " but found the related shape " +
                   kernel::shape_name(*rel)};
  for (const auto& cc : a.components)
    if (cc.shape)
      return {0, std::string("requested ") + want + " but found " +
                     kernel::shape_name(*cc.shape)};
  return {0, std::string("no recognizable ") + want + " in the script"};
}

CriterionScore score_dims(const GeometrySpec& spec, const DimAnalysis& dims) {
  if (dims.vacuous) return {15, "no dimensions requested"};
  if (!dims.measurable)
    return {0, "requested dimensions could not be measured"};
  std::string detail = "worst relative error " + percent(dims.worst) + " on '" +
                       dims.worst_key + "' (" + scale_text(dims.scale) +
                       " scale)";
  if (dims.worst <= 0.01 + kBandEps) return {15, detail};
  if (dims.worst <= 0.05 + kBandEps) return {10, detail};
  if (dims.worst <= 0.10 + kBandEps) return {5, detail};
  return {0, detail};
}

// Facing/orientation of a semicircle are entangled: the script only exposes
// the apex direction. Resolve jointly against the requested pair, charging
// the single parameter that explains the apex when possible.
void semicircle_discrepancies(const GeometrySpec& spec, bool facing_requested,
                              bool orientation_requested, double apex_deg,
                              std::vector<std::string>& wrong) {
  double f = kernel::facing_angle_deg(spec.facing);
  double theta = spec.orientation_deg;
  auto near = [&](double a, double b) {
    return angle_diff_deg(a, b) <= kMatchTol;
  };
  if (near(apex_deg, f + theta)) return;
  if (facing_requested) {
    for (double c : {0.0, 90.0, 180.0, 270.0})
      if (c != f && near(apex_deg, c + theta)) {
        wrong.push_back("facing");
        return;
      }
  }
  if (orientation_requested) {
    for (int k = 0; k < 24; ++k)
      if (near(apex_deg, f + 15.0 * k)) {
        wrong.push_back("orientation");
        return;
      }
  }
  if (facing_requested) wrong.push_back("facing");
  if (orientation_requested) wrong.push_back("orientation");
}

CriterionScore score_params(const GeometrySpec& spec,
                            const kernel::MeasureResult* measured,
                            double scale) {
  auto requested = spec.requested_params();
  std::vector<std::string> aux;
  for (const char* key : {"center", "orientation", "mesh_size", "facing"})
    if (requested.count(key)) aux.push_back(key);
  // With no geometry there is nothing that could honor the request; the
  // vacuous 15 applies only to an actual body.
  if (!measured) return {0, "no geometry found to honor the request"};
  if (aux.empty()) return {15, "no extra parameters requested"};

  bool facing_requested =
      std::find(aux.begin(), aux.end(), "facing") != aux.end();
  bool orientation_requested =
      std::find(aux.begin(), aux.end(), "orientation") != aux.end();

  std::vector<std::string> wrong;
  {
    const kernel::MeasuredGeometry& g = measured->geometry;
    if (requested.count("center")) {
      bool ok = true;
      for (int axis = 0; axis < 3; ++axis)
        if (!approx(g.center[axis], scale * spec.center[axis], kMatchTol,
                    kMatchTol))
          ok = false;
      if (!ok) wrong.push_back("center");
    }
    if (requested.count("mesh_size")) {
      if (!(g.mesh_size > 0) ||
          !approx(g.mesh_size, scale * spec.mesh_size, kMatchTol, kMatchTol))
        wrong.push_back("mesh_size");
    }
    if (spec.shape == Shape::SemiCircle &&
        (facing_requested || orientation_requested)) {
      if (g.shape == Shape::SemiCircle) {
        semicircle_discrepancies(spec, facing_requested, orientation_requested,
                                 g.orientation_deg, wrong);
      } else {
        if (facing_requested) wrong.push_back("facing");
        if (orientation_requested) wrong.push_back("orientation");
      }
    } else if (orientation_requested) {
      // Circles and pipes carry no orientation evidence; count them honored.
      bool observable = spec.shape == Shape::Square ||
                        spec.shape == Shape::Rectangle ||
                        spec.shape == Shape::IBeam;
      if (observable) {
        double period = orientation_period(spec.shape);
        if (g.shape) period = std::min(period, orientation_period(*g.shape));
        if (angle_diff_deg(g.orientation_deg, spec.orientation_deg, period) >
            kMatchTol)
          wrong.push_back("orientation");
      }
    }
  }

  if (wrong.empty())
    return {15, "all requested parameters honored"};
  std::string list;
  for (const auto& w : wrong) list += (list.empty() ? "" : ", ") + w;
  if (wrong.size() == 1) return {10, "one parameter off: " + list};
  if (wrong.size() == aux.size())
    return {0, "all requested parameters contradicted: " + list};
  return {5, "parameters off: " + list};
}

CriterionScore score_units(const Analysis& a, const GeometrySpec& spec,
                           const DimAnalysis& dims) {
  if (dims.vacuous) return {15, "no dimensional evidence; nothing to contradict"};
  if (!dims.measurable) return {0, "no coherent unit interpretation"};
  if (dims.worst <= 0.10 + kBandEps) {
    if (dims.scale == 1.0)
      return {15, std::string("values are in the requested unit (") +
                      kernel::unit_name(spec.unit) + ")"};
    auto declared = geo::declared_unit(a.report.program);
    bool consistent_decl =
        declared &&
        ((spec.unit == kernel::Unit::Mm && dims.scale == 0.1 && *declared == "cm") ||
         (spec.unit == kernel::Unit::Cm && dims.scale == 10.0 && *declared == "mm"));
    if (consistent_decl)
      return {10, "uniform " + scale_text(dims.scale) +
                      " conversion declared as '// units: " + *declared + "'"};
    return {5, "uniform " + scale_text(dims.scale) +
                   " conversion without a declaring comment"};
  }
  if (dims.mixed_scales) return {5, "dimensions follow mixed unit scales"};
  return {0, "no coherent unit interpretation"};
}

ScoreCard score_against(const Analysis& a, const GeometrySpec& spec,
                        const ClassifiedComponent* target,
                        const kernel::EntityCensus& census) {
  ScoreCard card;
  std::optional<kernel::MeasureResult> measured;
  if (target) measured = kernel::measure(a.report.model, *target);

  card.shape_accuracy = score_shape(a, spec, target, census);
  DimAnalysis dims = analyze_dims(
      spec, measured ? measured->geometry.dims : std::map<std::string, double>{});
  card.dimensional_accuracy = score_dims(spec, dims);
  card.parameter_matching =
      score_params(spec, measured ? &*measured : nullptr, dims.scale);
  card.unit_consistency = score_units(a, spec, dims);
  return card;
}

const ClassifiedComponent* pick_target(const Analysis& a, Shape want) {
  for (const auto& cc : a.components)
    if (cc.shape == want) return &cc;
  if (auto rel = related_shape(want))
    for (const auto& cc : a.components)
      if (cc.shape == *rel) return &cc;
  const ClassifiedComponent* best = nullptr;
  for (const auto& cc : a.components)
    if (!best || cc.component.curves.size() > best->component.curves.size())
      best = &cc;
  return best;
}

}  // namespace

ScoreCard score(const GeometrySpec& requested, const std::string& candidate) {
  Analysis a = analyze(candidate);
  if (!a.valid) return zero_card(a.invalid_reason);
  const ClassifiedComponent* target = pick_target(a, requested.shape);
  return score_against(a, requested, target, kernel::census_of(a.report.model));
}

MultiBodyReport score_multibody(const MultiBodyExpectation& expectation,
                                const std::string& candidate) {
  MultiBodyReport report;
  report.components_expected = static_cast<int>(expectation.components.size());
  for (const auto& spec : expectation.components)
    report.per_component.push_back({spec, false, {}});

  Analysis a = analyze(candidate);
  if (!a.valid) {
    for (auto& pc : report.per_component)
      pc.card = zero_card(a.invalid_reason);
    report.omissions = report.components_expected;
    report.relation_checked = expectation.relation.has_value();
    report.relation_note = "script failed validation: " + a.invalid_reason;
    return report;
  }

  report.components_found = static_cast<int>(a.components.size());
  std::vector<bool> used(a.components.size(), false);
  std::vector<const ClassifiedComponent*> matched(expectation.components.size(),
                                                  nullptr);
  for (size_t i = 0; i < expectation.components.size(); ++i) {
    for (size_t j = 0; j < a.components.size(); ++j) {
      if (used[j]) continue;
      if (a.components[j].shape == expectation.components[i].shape) {
        used[j] = true;
        matched[i] = &a.components[j];
        break;
      }
    }
  }

  for (size_t i = 0; i < expectation.components.size(); ++i) {
    auto& pc = report.per_component[i];
    if (!matched[i]) {
      pc.card = zero_card("expected body missing");
      pc.card.shape_accuracy.rationale =
          std::string("no ") + kernel::shape_name(expectation.components[i].shape) +
          " found";
      report.omissions++;
      continue;
    }
    pc.found = true;
    pc.card = score_against(a, expectation.components[i], matched[i],
                            kernel::census_of(a.report.model,
                                              matched[i]->component));
  }
  report.extras = report.components_found -
                  (report.components_expected - report.omissions);

  if (expectation.relation) {
    report.relation_checked = true;
    if (expectation.components.size() >= 2 && matched[0] && matched[1]) {
      auto ra = kernel::region_of(a.report.model, *matched[0]);
      auto rb = kernel::region_of(a.report.model, *matched[1]);
      if (ra && rb) {
        kernel::Relation got = kernel::spatial_relation(*ra, *rb);
        report.relation_satisfied = got == *expectation.relation;
        report.relation_note =
            std::string("expected ") + kernel::relation_name(*expectation.relation) +
            ", measured " + kernel::relation_name(got);
      } else {
        report.relation_note = "could not build body regions";
      }
    } else {
      report.relation_note = "expected bodies missing; relation not satisfied";
    }
  }
  return report;
}

}  // namespace geogen::scoring
