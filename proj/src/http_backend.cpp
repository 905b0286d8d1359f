#include "navcot/http_backend.hpp"

#include <thread>

#include "navcot/errors.hpp"
#include "navcot/http_util.hpp"
#include "navcot/jsonl.hpp"
#include "navcot/rng.hpp"

namespace navcot {

namespace {

std::string extract_message_content(const std::string& body) {
  try {
    const auto doc = json::parse(body);
    return doc.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("completion response: ") + e.what());
  }
}

}  // namespace

HttpBackend::HttpBackend(HttpBackendConfig config)
    : config_(std::move(config)) {
  if (config_.base_url.empty()) {
    throw InvalidConfig("http backend requires an endpoint URL");
  }
}

void HttpBackend::rate_limit() {
  if (config_.requests_per_second <= 0.0) return;
  const auto interval = std::chrono::duration_cast<
      std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(1.0 / config_.requests_per_second));
  std::chrono::steady_clock::time_point wait_until;
  {
    std::lock_guard<std::mutex> lock(rate_mutex_);
    const auto now = std::chrono::steady_clock::now();
    wait_until = next_allowed_ < now ? now : next_allowed_;
    next_allowed_ = wait_until + interval;
  }
  std::this_thread::sleep_until(wait_until);
}

Completion HttpBackend::generate(const std::string& prompt,
                                 const StepContext& /*ctx*/) {
  rate_limit();
  const json payload = {
      {"model", config_.model},
      {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
      {"temperature", config_.temperature},
      {"max_tokens", config_.max_tokens}};
  const auto res = http_post_json_with_retry(
      config_.base_url, config_.path, config_.api_token, payload,
      config_.timeout_sec,
      HttpRetryPolicy{config_.max_retries, config_.initial_backoff_ms});
  if (res.status == 401 || res.status == 403) {
    throw AuthError("completion endpoint rejected credentials (status " +
                    std::to_string(res.status) + ")");
  }
  if (res.status != 200) {
    throw BackendUnavailable("completion endpoint returned status " +
                             std::to_string(res.status));
  }
  return Completion{extract_message_content(res.body), res.retries_used};
}

void HttpBackend::health_check() {
  rate_limit();
  const json payload = {
      {"model", config_.model},
      {"messages", json::array({{{"role", "user"}, {"content", "ping"}}})},
      {"temperature", config_.temperature},
      {"max_tokens", 1}};
  const auto res = http_post_json_with_retry(
      config_.base_url, config_.path, config_.api_token, payload,
      config_.timeout_sec,
      HttpRetryPolicy{config_.max_retries, config_.initial_backoff_ms});
  if (res.status == 401 || res.status == 403) {
    throw AuthError("completion endpoint rejected credentials (status " +
                    std::to_string(res.status) + ")");
  }
  if (res.status != 200) {
    throw BackendUnavailable("health check returned status " +
                             std::to_string(res.status));
  }
}

std::string HttpBackend::descriptor() const {
  // Hash of everything that shapes behavior except the secret token.
  const json fingerprint = {{"url", config_.base_url + config_.path},
                            {"model", config_.model},
                            {"temperature", config_.temperature},
                            {"max_tokens", config_.max_tokens}};
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(fnv1a64(fingerprint.dump())));
  return "http:" + config_.model + "#" + hex;
}

}  // namespace navcot
