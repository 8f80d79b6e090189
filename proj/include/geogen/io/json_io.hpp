#pragma once

#include <json.hpp>

#include "geogen/geo/validate.hpp"
#include "geogen/kernel/measure.hpp"
#include "geogen/scoring/report.hpp"
#include "geogen/scoring/suites.hpp"

namespace geogen::io {

using nlohmann::json;

json diagnostic_json(const geo::Diagnostic& diag);
json validation_json(const geo::ValidationReport& report);

json spec_json(const kernel::GeometrySpec& spec);
// Throws std::runtime_error with a field-level message on malformed input.
kernel::GeometrySpec spec_from_json(const json& j);

json measure_json(const kernel::MeasureResult& result);

json scorecard_json(const scoring::ScoreCard& card);
scoring::ScoreCard scorecard_from_json(const json& j);

json multibody_expectation_json(const scoring::MultiBodyExpectation& exp);
scoring::MultiBodyExpectation multibody_expectation_from_json(const json& j);
json multibody_report_json(const scoring::MultiBodyReport& report);
scoring::MultiBodyReport multibody_report_from_json(const json& j);

// A prompt's "expect" value holds either a geometry spec or, when it has a
// "components" key, a multi-body expectation.
json prompt_json(const scoring::SuitePrompt& prompt);
scoring::SuitePrompt prompt_from_json(const json& j);
json suite_json(const scoring::EvalSuite& suite);
scoring::EvalSuite suite_from_json(const json& j);

}  // namespace geogen::io
