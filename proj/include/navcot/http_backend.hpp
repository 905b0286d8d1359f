#pragma once

#include <chrono>
#include <mutex>
#include <string>

#include "navcot/backend.hpp"

namespace navcot {

// Chat-completion-style endpoint client. The request carries model,
// messages (a single user message holding the prompt), temperature, and
// max_tokens; auth is a bearer token, never stored in config files.
struct HttpBackendConfig {
  std::string base_url;  // e.g. http://localhost:8123
  std::string path = "/v1/chat/completions";
  std::string model = "navcot";
  double temperature = 0.0;
  int max_tokens = 512;
  std::string api_token;  // read from NAVCOT_API_TOKEN by the CLI
  int max_retries = 3;
  int initial_backoff_ms = 200;
  int timeout_sec = 60;
  // Shared client-side rate limit across all concurrent episodes; 0 means
  // unlimited.
  double requests_per_second = 0.0;
};

class HttpBackend : public ReasonerBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  Completion generate(const std::string& prompt,
                      const StepContext& ctx) override;

  // Issues a one-token probe; AuthError on rejected credentials,
  // BackendUnavailable when the endpoint cannot be reached.
  void health_check() override;

  std::string descriptor() const override;

 private:
  void rate_limit();

  HttpBackendConfig config_;
  std::mutex rate_mutex_;
  std::chrono::steady_clock::time_point next_allowed_{};
};

}  // namespace navcot
