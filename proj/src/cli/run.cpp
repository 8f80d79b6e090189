#include "geogen/cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "geogen/dataset/generator.hpp"
#include "geogen/geo/validate.hpp"
#include "geogen/io/json_io.hpp"
#include "geogen/kernel/classify.hpp"
#include "geogen/kernel/measure.hpp"
#include "geogen/llm/campaign.hpp"
#include "geogen/llm/finetune.hpp"
#include "geogen/scoring/report.hpp"
#include "geogen/support/numeric.hpp"

namespace geogen::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kSuccess = 0;
constexpr int kFailure = 1;
constexpr int kUsageError = 2;

struct GlobalOpts {
  std::string format = "json";
  bool verbose = false;
  std::uint64_t seed = 7;
  int jobs = 1;
};

void note(const GlobalOpts& g, const std::string& msg) {
  if (g.verbose) std::cerr << msg << '\n';
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::string sanitize_name(const std::string& s) {
  std::string out;
  for (char c : s) {
    bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                c == '_' || c == '-';
    out += keep ? c : '-';
  }
  return out.empty() ? std::string("x") : out;
}

void print_diagnostics(std::ostream& out, const std::vector<geo::Diagnostic>& diags) {
  for (const auto& d : diags)
    out << geo::to_string(d.severity) << ' ' << d.span.line << ':'
        << d.span.column << ' ' << d.message << '\n';
}

std::string validation_text(const geo::ValidationReport& rep) {
  std::ostringstream out;
  print_diagnostics(out, rep.diagnostics);
  out << "syntax " << (rep.syntax_ok ? "ok" : "failed") << ", model "
      << (rep.model_ok ? "ok" : "failed") << '\n';
  return out.str();
}

std::string measure_text(const kernel::MeasureResult& result) {
  const kernel::MeasuredGeometry& g = result.geometry;
  std::ostringstream out;
  out << "shape: " << (g.shape ? kernel::shape_name(*g.shape) : "unrecognized")
      << '\n';
  out << "dims:";
  if (g.dims.empty()) out << " none";
  for (const auto& [key, value] : g.dims) out << ' ' << key << '=' << format_double(value);
  out << '\n';
  out << "center: " << format_double(g.center.x()) << ' '
      << format_double(g.center.y()) << ' ' << format_double(g.center.z())
      << '\n';
  out << "mesh size: " << format_double(g.mesh_size) << '\n';
  out << "orientation: " << format_double(g.orientation_deg) << '\n';
  if (g.facing) out << "facing: " << kernel::facing_name(*g.facing) << '\n';
  if (!result.unavailable.empty()) {
    out << "unavailable:";
    for (const auto& u : result.unavailable) out << ' ' << u;
    out << '\n';
  }
  out << "bodies: " << g.body_count << '\n';
  return out.str();
}

std::string scorecard_text(const scoring::ScoreCard& card) {
  std::ostringstream out;
  auto row = [&out](const std::string& label, int points, const std::string& why) {
    out << label << std::string(label.size() < 22 ? 22 - label.size() : 1, ' ')
        << (points < 10 ? " " : "") << points;
    if (!why.empty()) out << "  " << why;
    out << '\n';
  };
  row("Shape Accuracy", card.shape_accuracy.points, card.shape_accuracy.rationale);
  row("Dimensional Accuracy", card.dimensional_accuracy.points,
      card.dimensional_accuracy.rationale);
  row("Parameter Matching", card.parameter_matching.points,
      card.parameter_matching.rationale);
  row("Consistent Units", card.unit_consistency.points,
      card.unit_consistency.rationale);
  row("TOTAL /60", card.total(), "");
  return out.str();
}

std::string multibody_text(const scoring::MultiBodyReport& rep) {
  std::ostringstream out;
  out << "bodies found: " << rep.components_found << " of "
      << rep.components_expected << " (omissions " << rep.omissions
      << ", extras " << rep.extras << ")\n";
  if (rep.relation_checked)
    out << "relation: " << (rep.relation_satisfied ? "satisfied" : "violated")
        << "  " << rep.relation_note << '\n';
  for (size_t i = 0; i < rep.per_component.size(); ++i) {
    const auto& pc = rep.per_component[i];
    out << "component " << i + 1 << " ("
        << kernel::shape_name(pc.expected.shape) << "): "
        << (pc.found ? "found" : "missing") << ", total " << pc.card.total()
        << "/60\n";
  }
  return out.str();
}

int cmd_generate(const std::string& out_path, int pairs_per_category,
                 const GlobalOpts& g) {
  dataset::GenerateConfig cfg;
  cfg.seed = g.seed;
  cfg.pairs_per_category = pairs_per_category;
  cfg.output_path = out_path;
  dataset::DatasetSummary summary;
  try {
    summary = dataset::generate_dataset(cfg);
  } catch (const dataset::QCFailure& e) {
    std::cerr << "quality control failed: " << e.what() << '\n';
    for (const auto& d : e.report.details) std::cerr << "  " << d << '\n';
    return kFailure;
  }
  if (g.format == "json") {
    json j{{"total", summary.total},
           {"perCategory", summary.per_category},
           {"perShape", summary.per_shape},
           {"dataset", out_path},
           {"sidecar", dataset::sidecar_path(out_path)},
           {"seed", g.seed}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << summary.total << " pairs -> " << out_path << " (sidecar "
              << dataset::sidecar_path(out_path) << ")\n";
    for (const auto& [category, count] : summary.per_category)
      std::cout << "  " << category << ' ' << count << '\n';
  }
  return kSuccess;
}

int cmd_validate(const std::string& path, const GlobalOpts& g) {
  geo::ValidationReport rep = geo::validate(read_input(path));
  if (g.format == "json")
    std::cout << io::validation_json(rep).dump(2) << '\n';
  else
    std::cout << validation_text(rep);
  bool ok = rep.model_ok && !geo::has_errors(rep.diagnostics);
  return ok ? kSuccess : kFailure;
}

int cmd_measure(const std::string& path, const GlobalOpts& g) {
  geo::ValidationReport rep = geo::validate(read_input(path));
  if (!rep.model_ok || geo::has_errors(rep.diagnostics)) {
    print_diagnostics(std::cerr, rep.diagnostics);
    std::cerr << "script failed validation\n";
    return kFailure;
  }
  std::vector<kernel::MeasureResult> results;
  for (const auto& comp : kernel::classify(rep.model))
    results.push_back(kernel::measure(rep.model, comp));
  if (g.format == "json") {
    if (results.size() == 1) {
      std::cout << io::measure_json(results[0]).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : results) arr.push_back(io::measure_json(r));
      std::cout << arr.dump(2) << '\n';
    }
  } else {
    if (results.empty()) std::cout << "no geometry\n";
    for (size_t i = 0; i < results.size(); ++i) {
      if (results.size() > 1) std::cout << "body " << i + 1 << ":\n";
      std::cout << measure_text(results[i]);
    }
  }
  return kSuccess;
}

int cmd_score(const std::string& spec_path, const std::string& candidate_path,
              const GlobalOpts& g) {
  json spec_doc = json::parse(read_input(spec_path));
  std::string candidate = read_input(candidate_path);
  if (spec_doc.is_object() && spec_doc.contains("components")) {
    scoring::MultiBodyExpectation expectation =
        io::multibody_expectation_from_json(spec_doc);
    scoring::MultiBodyReport rep = scoring::score_multibody(expectation, candidate);
    if (g.format == "json")
      std::cout << io::multibody_report_json(rep).dump(2) << '\n';
    else
      std::cout << multibody_text(rep);
    return rep.components_found > 0 ? kSuccess : kFailure;
  }
  kernel::GeometrySpec spec = io::spec_from_json(spec_doc);
  scoring::ScoreCard card = scoring::score(spec, candidate);
  if (g.format == "json")
    std::cout << io::scorecard_json(card).dump(2) << '\n';
  else
    std::cout << scorecard_text(card);
  return card.total() > 0 ? kSuccess : kFailure;
}

scoring::EvalSuite load_suite(const std::string& arg) {
  if (!fs::exists(arg)) {
    if (arg == "single") return scoring::default_suites().single;
    if (arg == "multi") return scoring::default_suites().multi;
    throw std::runtime_error("suite '" + arg +
                             "' is neither a file nor a built-in name (single, multi)");
  }
  return io::suite_from_json(json::parse(read_input(arg)));
}

struct EvalArgs {
  std::string endpoint;
  std::string model;
  std::string suite = "single";
  std::string template_name = "chat-native";
  std::string out_dir = "results";
  std::string api_key_env;
  int timeout = 60;
  int retries = 3;
  int backoff_ms = 1000;
  double temperature = 0.0;
};

int cmd_eval(const EvalArgs& a, const GlobalOpts& g) {
  auto style = llm::prompt_style_from_name(a.template_name);
  if (!style) {
    std::cerr << "unknown template '" << a.template_name << "'\n";
    return kUsageError;
  }
  scoring::EvalSuite suite = load_suite(a.suite);
  if (suite.prompts.empty()) {
    std::cerr << "suite '" << suite.name << "' has no prompts\n";
    return kFailure;
  }

  llm::EndpointConfig cfg;
  cfg.base_url = a.endpoint;
  cfg.model = a.model;
  cfg.api_key_env = a.api_key_env;
  cfg.style = *style;
  cfg.temperature = a.temperature;
  cfg.timeout_seconds = a.timeout;
  cfg.max_retries = a.retries;
  cfg.parallelism = g.jobs < 1 ? 1 : g.jobs;
  cfg.backoff_base_ms = a.backoff_ms;

  fs::create_directories(a.out_dir);
  std::string out_path =
      (fs::path(a.out_dir) /
       (sanitize_name(a.model) + "-" + sanitize_name(suite.name) + ".jsonl"))
          .string();
  note(g, "results -> " + out_path);

  llm::CampaignResult result = llm::run_campaign(cfg, suite, out_path);
  if (result.aborted)
    std::cerr << "campaign aborted: " << result.abort_reason << '\n';

  if (g.format == "json") {
    json records = json::array();
    for (const auto& r : result.records) {
      json e{{"promptId", r.prompt_id},
             {"status", llm::request_status_name(r.status)},
             {"attempts", r.attempts},
             {"latencyMs", r.latency_ms}};
      if (!r.error.empty()) e["error"] = r.error;
      if (r.card) e["scorecard"] = io::scorecard_json(*r.card);
      if (r.multi) e["multibody"] = io::multibody_report_json(*r.multi);
      records.push_back(std::move(e));
    }
    json j{{"suite", suite.name},      {"model", a.model},
           {"results", out_path},      {"resumed", result.resumed},
           {"aborted", result.aborted}, {"records", std::move(records)}};
    if (result.aborted) j["abortReason"] = result.abort_reason;
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& r : result.records) {
      std::cout << r.prompt_id << ": " << llm::request_status_name(r.status);
      if (r.card) std::cout << " total=" << r.card->total();
      if (r.multi)
        std::cout << " bodies=" << r.multi->components_found << '/'
                  << r.multi->components_expected;
      if (!r.error.empty()) std::cout << " (" << r.error << ')';
      std::cout << '\n';
    }
    if (result.resumed > 0)
      std::cout << "resumed " << result.resumed << " record(s)\n";
    std::cout << "results: " << out_path << '\n';
  }
  return result.aborted ? kFailure : kSuccess;
}

int cmd_report(const std::string& results_path, const std::string& csv_path,
               const GlobalOpts& g) {
  std::vector<fs::path> files;
  fs::path root(results_path);
  if (fs::is_directory(root)) {
    for (const auto& entry : fs::directory_iterator(root))
      if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(root)) {
    files.push_back(root);
  } else {
    throw std::runtime_error("'" + results_path +
                             "' is not a results directory or file");
  }

  std::vector<scoring::ModelResults> models;
  auto scores_of = [&models](const std::string& name) -> scoring::ModelResults& {
    for (auto& m : models)
      if (m.model == name) return m;
    models.push_back({name, {}});
    return models.back();
  };

  int skipped = 0;
  std::vector<llm::CampaignRecord> multi_records;
  for (const auto& file : files) {
    std::ifstream in(file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      json parsed = json::parse(line, nullptr, /*allow_exceptions=*/false);
      if (parsed.is_discarded()) {
        ++skipped;
        continue;
      }
      try {
        llm::CampaignRecord rec = llm::campaign_record_from_json(parsed);
        if (rec.card)
          scores_of(rec.model).scores.push_back(
              {rec.suite, rec.prompt_id, *rec.card});
        else if (rec.multi)
          multi_records.push_back(std::move(rec));
      } catch (const std::exception&) {
        ++skipped;
      }
    }
  }
  if (skipped > 0)
    note(g, std::to_string(skipped) + " unreadable record(s) skipped");

  scoring::Report rep;
  try {
    rep = scoring::build_report(models);
  } catch (const scoring::MixedSuites& e) {
    std::cerr << e.what() << '\n';
    return kFailure;
  }

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot write '" + csv_path + "'");
    csv << rep.csv;
  }

  if (g.format == "text") {
    std::cout << rep.text;
    if (!multi_records.empty()) {
      if (!rep.text.empty()) std::cout << '\n';
      std::cout << "multi-body results\n";
      for (const auto& r : multi_records) {
        std::cout << r.model << "  " << r.prompt_id << "  bodies "
                  << r.multi->components_found << '/'
                  << r.multi->components_expected;
        if (r.multi->relation_checked)
          std::cout << "  relation "
                    << (r.multi->relation_satisfied ? "satisfied" : "violated");
        std::cout << '\n';
      }
    }
  } else {
    json jmodels = json::array();
    for (const auto& m : models) {
      json scores = json::array();
      for (const auto& s : m.scores)
        scores.push_back({{"suite", s.suite},
                          {"promptId", s.prompt_id},
                          {"scorecard", io::scorecard_json(s.card)}});
      jmodels.push_back({{"model", m.model}, {"scores", std::move(scores)}});
    }
    json out{{"models", std::move(jmodels)}};
    if (!multi_records.empty()) {
      json jm = json::array();
      for (const auto& r : multi_records)
        jm.push_back({{"model", r.model},
                      {"promptId", r.prompt_id},
                      {"multibody", io::multibody_report_json(*r.multi)}});
      out["multiBody"] = std::move(jm);
    }
    std::cout << out.dump(2) << '\n';
  }
  return kSuccess;
}

int cmd_finetune(const std::string& out_path, const std::string& dataset_path,
                 const GlobalOpts& g) {
  llm::emit_finetune_config(out_path, dataset_path);
  if (g.format == "json")
    std::cout << json{{"config", out_path}, {"dataset", dataset_path}}.dump(2)
              << '\n';
  else
    std::cout << "wrote " << out_path << '\n';
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"geometry-script dataset generator and LLM evaluation harness"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GlobalOpts g;
  app.add_option("--format", g.format, "stdout format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--verbose", g.verbose, "progress notes on stderr");
  app.add_option("--seed", g.seed, "generation seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "parallelism cap for generation and campaigns")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* gen = app.add_subcommand("generate-dataset",
                                 "write the instruction/script training set");
  std::string gen_out;
  int gen_ppc = 120;
  gen->add_option("--out", gen_out, "dataset JSON path")->required();
  gen->add_option("--pairs-per-category", gen_ppc, "pairs per category")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* val =
      app.add_subcommand("validate", "parse and evaluate a geometry script");
  std::string val_file;
  val->add_option("file", val_file, "script path ('-' for stdin)")->required();

  auto* mea = app.add_subcommand("measure",
                                 "classify and measure the bodies in a script");
  std::string mea_file;
  mea->add_option("file", mea_file, "script path ('-' for stdin)")->required();

  auto* sco = app.add_subcommand(
      "score", "score a candidate script against a geometry request");
  std::string sco_spec, sco_cand;
  sco->add_option("--spec", sco_spec, "requested geometry (JSON)")->required();
  sco->add_option("--candidate", sco_cand, "candidate script path")->required();

  auto* eva = app.add_subcommand(
      "eval", "run an evaluation campaign against a completion endpoint");
  EvalArgs ea;
  eva->add_option("--endpoint", ea.endpoint,
                  "base URL, e.g. http://localhost:8000")
      ->required();
  eva->add_option("--model", ea.model, "model name sent in the payload")
      ->required();
  eva->add_option("--suite", ea.suite,
                  "suite JSON path or built-in name (single, multi)")
      ->capture_default_str();
  eva->add_option("--template", ea.template_name, "prompt framing")
      ->check(CLI::IsMember({"chat-native", "phi3", "qwen"}))
      ->capture_default_str();
  eva->add_option("--out", ea.out_dir, "results directory")
      ->capture_default_str();
  eva->add_option("--api-key-env", ea.api_key_env,
                  "env var holding the bearer token");
  eva->add_option("--timeout", ea.timeout, "per-request timeout, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eva->add_option("--retries", ea.retries,
                  "retries per prompt on transient failures")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eva->add_option("--temperature", ea.temperature, "sampling temperature")
      ->capture_default_str();
  eva->add_option("--backoff-ms", ea.backoff_ms, "base retry delay")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* rep = app.add_subcommand("report",
                                 "render score tables from campaign results");
  std::string rep_results, rep_csv;
  rep->add_option("--results", rep_results, "results directory or JSONL file")
      ->required();
  rep->add_option("--csv", rep_csv, "also write the long-form CSV here");

  auto* fin = app.add_subcommand("emit-finetune-config",
                                 "write the recommended fine-tuning settings");
  std::string fin_out;
  std::string fin_dataset = "dataset.json";
  fin->add_option("--out", fin_out, "config path")->required();
  fin->add_option("--dataset", fin_dataset, "dataset path to reference")
      ->capture_default_str();

  for (CLI::App* sub : {gen, val, mea, sco, eva, rep, fin}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (app.got_subcommand(gen)) return cmd_generate(gen_out, gen_ppc, g);
    if (app.got_subcommand(val)) return cmd_validate(val_file, g);
    if (app.got_subcommand(mea)) return cmd_measure(mea_file, g);
    if (app.got_subcommand(sco)) return cmd_score(sco_spec, sco_cand, g);
    if (app.got_subcommand(eva)) return cmd_eval(ea, g);
    if (app.got_subcommand(rep)) return cmd_report(rep_results, rep_csv, g);
    if (app.got_subcommand(fin)) return cmd_finetune(fin_out, fin_dataset, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsageError;
}

}  // namespace geogen::cli
