#include "geogen/scoring/report.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "geogen/kernel/spec.hpp"

namespace geogen::scoring {

namespace {

struct Column {
  std::string id;
  std::string display;
};

// The canonical single-geometry column order matches the report tables:
// basic shapes first, then curved, pipes, and the I-beam.
std::vector<Column> columns_for(const std::string& suite,
                                const std::vector<ModelResults>& results) {
  if (suite == "single-geometry") {
    static const kernel::Shape kOrder[] = {
        kernel::Shape::Square,   kernel::Shape::Rectangle,
        kernel::Shape::Circle,   kernel::Shape::SemiCircle,
        kernel::Shape::Pipe,     kernel::Shape::BentPipe,
        kernel::Shape::IBeam};
    std::vector<Column> cols;
    for (kernel::Shape s : kOrder)
      cols.push_back({kernel::shape_name(s), kernel::shape_display_name(s)});
    return cols;
  }
  std::vector<Column> cols;
  for (const auto& mr : results)
    for (const auto& ps : mr.scores) {
      bool seen = std::any_of(cols.begin(), cols.end(),
                              [&](const Column& c) { return c.id == ps.prompt_id; });
      if (!seen) cols.push_back({ps.prompt_id, ps.prompt_id});
    }
  return cols;
}

const char* kCriteria[] = {"Shape Accuracy", "Dimensional Accuracy",
                           "Parameter Matching", "Consistent Units"};

int criterion_points(const ScoreCard& card, int index) {
  switch (index) {
    case 0: return card.shape_accuracy.points;
    case 1: return card.dimensional_accuracy.points;
    case 2: return card.parameter_matching.points;
    case 3: return card.unit_consistency.points;
    default: return card.total();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Report build_report(const std::vector<ModelResults>& results) {
  Report report;
  report.csv = "model,geometry,criterion,points\n";
  if (results.empty()) return report;

  std::set<std::string> suites;
  for (const auto& mr : results)
    for (const auto& ps : mr.scores) suites.insert(ps.suite);
  if (suites.size() > 1) {
    std::string list;
    for (const auto& s : suites) list += (list.empty() ? "" : ", ") + s;
    throw MixedSuites("results span multiple suites: " + list);
  }
  if (suites.empty()) return report;

  std::vector<Column> cols = columns_for(*suites.begin(), results);

  // cell lookup
  auto card_for = [&](const ModelResults& mr,
                      const std::string& id) -> const ScoreCard* {
    for (const auto& ps : mr.scores)
      if (ps.prompt_id == id) return &ps.card;
    return nullptr;
  };

  // layout widths
  size_t model_w = 3;  // "LLM"
  for (const auto& mr : results) model_w = std::max(model_w, mr.model.size());
  size_t crit_w = std::string("Geometry Criteria").size();
  for (const char* c : kCriteria) crit_w = std::max(crit_w, std::string(c).size());
  crit_w = std::max(crit_w, std::string("TOTAL /60").size());
  std::vector<size_t> col_w;
  for (const auto& c : cols) col_w.push_back(std::max<size_t>(c.display.size(), 3));

  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  auto rpad = [](const std::string& s, size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };

  std::string text;
  text += pad("LLM", model_w) + "  " + pad("Geometry Criteria", crit_w);
  for (size_t i = 0; i < cols.size(); ++i)
    text += "  " + rpad(cols[i].display, col_w[i]);
  text += '\n';

  for (const auto& mr : results) {
    for (int crit = 0; crit <= 4; ++crit) {
      std::string label = crit < 4 ? kCriteria[crit] : "TOTAL /60";
      text += pad(crit == 0 ? mr.model : "", model_w) + "  " + pad(label, crit_w);
      for (size_t i = 0; i < cols.size(); ++i) {
        const ScoreCard* card = card_for(mr, cols[i].id);
        std::string cell = card ? std::to_string(criterion_points(*card, crit)) : "-";
        text += "  " + rpad(cell, col_w[i]);
      }
      text += '\n';
    }
    for (const auto& ps : mr.scores) {
      auto col = std::find_if(cols.begin(), cols.end(),
                              [&](const Column& c) { return c.id == ps.prompt_id; });
      std::string geometry = col != cols.end() ? col->display : ps.prompt_id;
      for (int crit = 0; crit < 4; ++crit)
        report.csv += csv_field(mr.model) + "," + csv_field(geometry) + "," +
                      csv_field(kCriteria[crit]) + "," +
                      std::to_string(criterion_points(ps.card, crit)) + "\n";
      report.csv += csv_field(mr.model) + "," + csv_field(geometry) +
                    ",TOTAL," + std::to_string(ps.card.total()) + "\n";
    }
  }
  report.text = text;
  return report;
}

}  // namespace geogen::scoring
