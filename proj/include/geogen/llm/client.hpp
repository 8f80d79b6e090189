#pragma once

#include <optional>
#include <string>

#include "geogen/llm/prompt.hpp"

namespace geogen::llm {

struct EndpointConfig {
  std::string base_url;     // scheme://host[:port]
  std::string model;
  std::string api_key_env;  // env var holding the bearer token; empty = none
  PromptStyle style = PromptStyle::ChatNative;
  double temperature = 0.0;
  int timeout_seconds = 60;
  int max_retries = 3;  // retries after the first attempt
  int parallelism = 1;
  int backoff_base_ms = 1000;  // delay before retry k is base * 2^k
};

enum class RequestStatus {
  Ok,
  TransportError,
  Timeout,
  RateLimited,
  AuthError,
  BadRequest,
};

std::string request_status_name(RequestStatus s);
std::optional<RequestStatus> request_status_from_name(const std::string& name);

struct CompletionResult {
  RequestStatus status = RequestStatus::TransportError;
  std::string text;   // completion text when status == Ok
  std::string error;  // failure description otherwise
  int attempts = 0;
  long latency_ms = 0;
};

// One completion round trip. Transport errors, timeouts, 429 and 5xx are
// retried with exponential backoff up to max_retries; 401/403 return
// AuthError immediately and other 4xx return BadRequest without retry.
// A 200 whose body is not a well-formed completion counts as a transport
// error but is not retried (the endpoint answered; resending will not help).
CompletionResult request_completion(const EndpointConfig& cfg,
                                    const std::string& instruction);

}  // namespace geogen::llm
