#include "geogen/llm/client.hpp"

#include <httplib.h>

#include <chrono>
#include <cstdlib>
#include <thread>

namespace geogen::llm {

std::string request_status_name(RequestStatus s) {
  switch (s) {
    case RequestStatus::Ok: return "ok";
    case RequestStatus::TransportError: return "transport-error";
    case RequestStatus::Timeout: return "timeout";
    case RequestStatus::RateLimited: return "rate-limited";
    case RequestStatus::AuthError: return "auth-error";
    case RequestStatus::BadRequest: return "bad-request";
  }
  return "transport-error";
}

std::optional<RequestStatus> request_status_from_name(const std::string& name) {
  for (RequestStatus s :
       {RequestStatus::Ok, RequestStatus::TransportError, RequestStatus::Timeout,
        RequestStatus::RateLimited, RequestStatus::AuthError,
        RequestStatus::BadRequest}) {
    if (request_status_name(s) == name) return s;
  }
  return std::nullopt;
}

CompletionResult request_completion(const EndpointConfig& cfg,
                                    const std::string& instruction) {
  httplib::Client http(cfg.base_url);
  http.set_connection_timeout(cfg.timeout_seconds);
  http.set_read_timeout(cfg.timeout_seconds);
  http.set_write_timeout(cfg.timeout_seconds);
  if (!cfg.api_key_env.empty()) {
    if (const char* key = std::getenv(cfg.api_key_env.c_str()); key && *key)
      http.set_bearer_token_auth(key);
  }

  const std::string body =
      render_payload(cfg.style, cfg.model, instruction, cfg.temperature)
          .dump();
  const char* path = endpoint_path(cfg.style);

  CompletionResult out;
  const auto start = std::chrono::steady_clock::now();
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    if (attempt > 0) {
      auto delay = std::chrono::milliseconds(
          static_cast<long>(cfg.backoff_base_ms) << (attempt - 1));
      std::this_thread::sleep_for(delay);
    }
    ++out.attempts;

    httplib::Result res = http.Post(path, body, "application/json");
    if (!res) {
      bool timed_out = res.error() == httplib::Error::ConnectionTimeout;
      out.status =
          timed_out ? RequestStatus::Timeout : RequestStatus::TransportError;
      out.error = httplib::to_string(res.error());
    } else if (res->status == 401 || res->status == 403) {
      out.status = RequestStatus::AuthError;
      out.error = "endpoint returned HTTP " + std::to_string(res->status);
      break;
    } else if (res->status == 429) {
      out.status = RequestStatus::RateLimited;
      out.error = "endpoint returned HTTP 429";
    } else if (res->status >= 500) {
      out.status = RequestStatus::TransportError;
      out.error = "endpoint returned HTTP " + std::to_string(res->status);
    } else if (res->status >= 400) {
      out.status = RequestStatus::BadRequest;
      out.error = "endpoint returned HTTP " + std::to_string(res->status);
      break;
    } else {
      nlohmann::json parsed =
          nlohmann::json::parse(res->body, nullptr, /*allow_exceptions=*/false);
      std::optional<std::string> text;
      if (!parsed.is_discarded()) text = completion_text(cfg.style, parsed);
      if (text) {
        out.status = RequestStatus::Ok;
        out.text = *text;
        out.error.clear();
      } else {
        out.status = RequestStatus::TransportError;
        out.error = "response body is not a completion";
      }
      break;
    }
  }

  out.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

}  // namespace geogen::llm
