#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "geogen/llm/client.hpp"
#include "geogen/scoring/suites.hpp"

namespace geogen::llm {

// Outcome of one suite prompt: the wire exchange plus the scored result.
// Exactly one of `card` / `multi` is set, matching the prompt's expectation.
struct CampaignRecord {
  std::string prompt_id;
  std::string suite;
  std::string model;
  std::string instruction;
  RequestStatus status = RequestStatus::Ok;
  std::string error;
  int attempts = 0;
  long latency_ms = 0;
  std::string completion;  // raw model output (empty on failure)
  std::string script;      // extracted geometry text
  std::optional<scoring::ScoreCard> card;
  std::optional<scoring::MultiBodyReport> multi;
};

struct CampaignResult {
  std::vector<CampaignRecord> records;  // suite prompt order
  bool aborted = false;                 // an auth failure stopped the run
  std::string abort_reason;
  int resumed = 0;  // records carried over from an earlier run
};

nlohmann::json campaign_record_json(const CampaignRecord& record);
// Throws std::runtime_error on a malformed record.
CampaignRecord campaign_record_from_json(const nlohmann::json& j);

// Runs every prompt in the suite against the endpoint with at most
// cfg.parallelism requests in flight, scores each completion against the
// prompt's expectation, and appends one JSONL record per prompt to out_path
// as it finishes (flushed per record, so a killed run leaves a readable
// prefix). Prompts already recorded in out_path for this suite are kept and
// not re-sent. Transport failures are recorded per prompt with zero scores;
// an auth failure stops issuing new requests and is reported via `aborted`
// without being persisted, so a re-run retries that prompt. An empty
// out_path disables persistence.
CampaignResult run_campaign(const EndpointConfig& cfg,
                            const scoring::EvalSuite& suite,
                            const std::string& out_path);

}  // namespace geogen::llm
