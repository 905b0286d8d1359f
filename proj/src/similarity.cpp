#include "navcot/similarity.hpp"

#include <cmath>

#include "navcot/errors.hpp"
#include "navcot/http_util.hpp"
#include "navcot/jsonl.hpp"
#include "navcot/landmarks.hpp"

namespace navcot {

TableSimilarityProvider::TableSimilarityProvider(
    const std::filesystem::path& table_file)
    : source_(table_file.string()) {
  for (const auto& row : read_jsonl(table_file)) {
    try {
      SimilarityRow r;
      r.episode = row.at("episode").get<std::string>();
      r.t = row.at("t").get<int>();
      r.scores = row.at("scores").get<std::vector<double>>();
      for (double s : r.scores) {
        if (!std::isfinite(s)) {
          throw ParseError(source_ + ": non-finite score for episode " +
                           r.episode + " t " + std::to_string(r.t));
        }
      }
      rows_[{r.episode, r.t}] = std::move(r.scores);
    } catch (const json::exception& e) {
      throw ParseError(source_ + ": bad similarity row: " + e.what());
    }
  }
}

TableSimilarityProvider::TableSimilarityProvider(std::vector<SimilarityRow> rows)
    : source_("<memory>") {
  for (auto& r : rows) {
    rows_[{r.episode, r.t}] = std::move(r.scores);
  }
}

std::optional<std::vector<double>> TableSimilarityProvider::scores(
    const std::string& episode, int t,
    const std::vector<std::string>& /*landmarks*/,
    const std::string& /*gt_caption*/) {
  auto it = rows_.find({episode, t});
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

void save_similarity_table(const std::vector<SimilarityRow>& rows,
                           const std::filesystem::path& table_file) {
  std::vector<json> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back({{"episode", r.episode}, {"t", r.t}, {"scores", r.scores}});
  }
  write_jsonl(table_file, out);
}

std::optional<std::vector<double>> ExactMatchSimilarityProvider::scores(
    const std::string& /*episode*/, int /*t*/,
    const std::vector<std::string>& landmarks,
    const std::string& gt_caption) {
  std::vector<double> out;
  out.reserve(landmarks.size());
  for (const auto& lm : landmarks) {
    out.push_back(landmark_in_text(lm, gt_caption) ? 1.0 : 0.0);
  }
  return out;
}

HttpSimilarityProvider::HttpSimilarityProvider(SimilarityEndpointConfig config)
    : config_(std::move(config)) {}

std::optional<std::vector<double>> HttpSimilarityProvider::scores(
    const std::string& episode, int t,
    const std::vector<std::string>& landmarks,
    const std::string& gt_caption) {
  const json payload = {{"episode", episode},
                        {"t", t},
                        {"landmarks", landmarks},
                        {"target", gt_caption}};
  const auto res = http_post_json_with_retry(
      config_.base_url, config_.path, config_.bearer_token, payload,
      config_.timeout_sec,
      HttpRetryPolicy{config_.max_retries, config_.initial_backoff_ms});
  if (res.status == 404) return std::nullopt;
  if (res.status == 401 || res.status == 403) {
    throw AuthError("similarity endpoint rejected credentials (status " +
                    std::to_string(res.status) + ")");
  }
  if (res.status != 200) {
    throw BackendUnavailable("similarity endpoint returned status " +
                             std::to_string(res.status));
  }
  try {
    return json::parse(res.body).at("scores").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("similarity endpoint response: ") + e.what());
  }
}

std::string HttpSimilarityProvider::descriptor() const {
  return "http:" + config_.base_url + config_.path;
}

}  // namespace navcot
