#include "navcot/http_util.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>

#include "navcot/errors.hpp"

namespace navcot {

namespace {

bool transient_status(int status) {
  return status == 408 || status == 429 || (status >= 500 && status < 600);
}

}  // namespace

HttpResponse http_post_json_with_retry(const std::string& base_url,
                                       const std::string& path,
                                       const std::string& bearer_token,
                                       const nlohmann::json& payload,
                                       int timeout_sec,
                                       const HttpRetryPolicy& policy) {
  httplib::Client client(base_url);
  client.set_connection_timeout(timeout_sec, 0);
  client.set_read_timeout(timeout_sec, 0);
  if (!bearer_token.empty()) client.set_bearer_token_auth(bearer_token);

  const std::string body = payload.dump();
  double backoff_ms = policy.initial_backoff_ms;
  std::string last_error;
  for (int attempt = 0; attempt <= policy.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(static_cast<int>(backoff_ms)));
      backoff_ms *= policy.backoff_factor;
    }
    auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = "connection failure: " + httplib::to_string(res.error());
      continue;
    }
    if (transient_status(res->status)) {
      last_error = "transient status " + std::to_string(res->status);
      continue;
    }
    return HttpResponse{res->status, res->body, attempt};
  }
  throw BackendUnavailable("POST " + base_url + path + " failed after " +
                           std::to_string(policy.max_retries + 1) +
                           " attempts: " + last_error);
}

}  // namespace navcot
