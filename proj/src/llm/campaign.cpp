#include "geogen/llm/campaign.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "geogen/io/json_io.hpp"
#include "geogen/llm/extract.hpp"
#include "geogen/scoring/score.hpp"

namespace geogen::llm {

using nlohmann::json;

json campaign_record_json(const CampaignRecord& record) {
  json j{{"promptId", record.prompt_id},
         {"suite", record.suite},
         {"model", record.model},
         {"instruction", record.instruction},
         {"status", request_status_name(record.status)},
         {"attempts", record.attempts},
         {"latencyMs", record.latency_ms},
         {"completion", record.completion},
         {"script", record.script}};
  if (!record.error.empty()) j["error"] = record.error;
  if (record.card) j["scorecard"] = io::scorecard_json(*record.card);
  if (record.multi) j["multibody"] = io::multibody_report_json(*record.multi);
  return j;
}

CampaignRecord campaign_record_from_json(const json& j) {
  if (!j.is_object() || !j.contains("promptId"))
    throw std::runtime_error("campaign record needs a promptId");
  try {
    CampaignRecord r;
    r.prompt_id = j.at("promptId").get<std::string>();
    r.suite = j.value("suite", "");
    r.model = j.value("model", "");
    r.instruction = j.value("instruction", "");
    auto status = request_status_from_name(j.value("status", ""));
    if (!status) throw std::runtime_error("campaign record has unknown status");
    r.status = *status;
    r.error = j.value("error", "");
    r.attempts = j.value("attempts", 0);
    r.latency_ms = j.value("latencyMs", static_cast<long>(0));
    r.completion = j.value("completion", "");
    r.script = j.value("script", "");
    if (j.contains("scorecard")) r.card = io::scorecard_from_json(j.at("scorecard"));
    if (j.contains("multibody"))
      r.multi = io::multibody_report_from_json(j.at("multibody"));
    return r;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed campaign record: ") +
                             e.what());
  }
}

namespace {

// Records from an earlier run, keyed by prompt id. Reading stops at the
// first unparseable line so a truncated tail is ignored.
std::unordered_map<std::string, CampaignRecord> load_previous(
    const std::string& path, const std::string& suite_name) {
  std::unordered_map<std::string, CampaignRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json parsed = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) break;
    try {
      CampaignRecord rec = campaign_record_from_json(parsed);
      if (rec.suite == suite_name) out.emplace(rec.prompt_id, std::move(rec));
    } catch (const std::exception&) {
      break;
    }
  }
  return out;
}

void score_record(const scoring::SuitePrompt& prompt, CampaignRecord& rec) {
  if (prompt.expect_single)
    rec.card = scoring::score(*prompt.expect_single, rec.script);
  else if (prompt.expect_multi)
    rec.multi = scoring::score_multibody(*prompt.expect_multi, rec.script);
}

}  // namespace

CampaignResult run_campaign(const EndpointConfig& cfg,
                            const scoring::EvalSuite& suite,
                            const std::string& out_path) {
  CampaignResult result;
  const auto& prompts = suite.prompts;

  std::unordered_map<std::string, CampaignRecord> previous;
  if (!out_path.empty()) previous = load_previous(out_path, suite.name);

  std::ofstream sink;
  if (!out_path.empty()) {
    sink.open(out_path, std::ios::app);
    if (!sink) throw std::runtime_error("cannot open '" + out_path + "' for append");
  }

  std::vector<std::optional<CampaignRecord>> slots(prompts.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex sink_mutex;

  auto worker = [&] {
    while (!abort.load()) {
      size_t i = next.fetch_add(1);
      if (i >= prompts.size()) return;
      const scoring::SuitePrompt& prompt = prompts[i];
      if (previous.count(prompt.id)) continue;

      CampaignRecord rec;
      rec.prompt_id = prompt.id;
      rec.suite = suite.name;
      rec.model = cfg.model;
      rec.instruction = prompt.instruction;

      CompletionResult res = request_completion(cfg, prompt.instruction);
      rec.status = res.status;
      rec.error = res.error;
      rec.attempts = res.attempts;
      rec.latency_ms = res.latency_ms;
      if (res.status == RequestStatus::Ok) {
        rec.completion = res.text;
        rec.script = extract_geo(res.text);
      }
      score_record(prompt, rec);

      const bool auth_failure = res.status == RequestStatus::AuthError;
      {
        std::lock_guard<std::mutex> lock(sink_mutex);
        if (auth_failure) {
          if (!abort.exchange(true)) result.abort_reason = rec.error;
        } else if (sink.is_open()) {
          sink << campaign_record_json(rec).dump() << '\n';
          sink.flush();
        }
        slots[i] = std::move(rec);
      }
      if (auth_failure) return;
    }
  };

  size_t threads = static_cast<size_t>(cfg.parallelism < 1 ? 1 : cfg.parallelism);
  if (threads > prompts.size()) threads = prompts.size();
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.aborted = abort.load();
  for (size_t i = 0; i < prompts.size(); ++i) {
    auto prev = previous.find(prompts[i].id);
    if (prev != previous.end()) {
      result.records.push_back(prev->second);
      ++result.resumed;
    } else if (slots[i]) {
      result.records.push_back(std::move(*slots[i]));
    }
  }
  return result;
}

}  // namespace geogen::llm
