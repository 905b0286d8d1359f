#pragma once

#include <string>

#include <json.hpp>

namespace navcot {

struct HttpRetryPolicy {
  int max_retries = 3;
  int initial_backoff_ms = 200;
  double backoff_factor = 2.0;
};

struct HttpResponse {
  int status = 0;
  std::string body;
  // Transport retries actually performed before this response came back.
  int retries_used = 0;
};

// POSTs JSON and retries transient failures (connection errors, 408, 429,
// 5xx) with exponential backoff. Non-transient statuses return immediately.
// Throws BackendUnavailable once the retry budget is exhausted.
HttpResponse http_post_json_with_retry(const std::string& base_url,
                                       const std::string& path,
                                       const std::string& bearer_token,
                                       const nlohmann::json& payload,
                                       int timeout_sec,
                                       const HttpRetryPolicy& policy);

}  // namespace navcot
