#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace navcot {

// Per-(episode, timestep) similarity scores, one per landmark, higher means
// more similar to the ground-truth observation at that step.
struct SimilarityRow {
  std::string episode;
  int t = 0;
  std::vector<double> scores;
};

// Pluggable source of landmark-vs-observation similarity. The paper scores
// CLIP embeddings; the harness only needs the numbers, so implementations
// range from a precomputed table to an external embedding endpoint.
class SimilarityProvider {
 public:
  virtual ~SimilarityProvider() = default;

  // Scores for (episode, t): one per entry of `landmarks`, scored against
  // the ground-truth observation whose caption is `gt_caption`. Returns
  // nullopt when the provider has no row for the step.
  virtual std::optional<std::vector<double>> scores(
      const std::string& episode, int t,
      const std::vector<std::string>& landmarks,
      const std::string& gt_caption) = 0;

  virtual std::string descriptor() const = 0;
};

// Precomputed scores loaded from JSON Lines {"episode","t","scores":[...]}.
class TableSimilarityProvider : public SimilarityProvider {
 public:
  explicit TableSimilarityProvider(const std::filesystem::path& table_file);
  explicit TableSimilarityProvider(std::vector<SimilarityRow> rows);

  std::optional<std::vector<double>> scores(
      const std::string& episode, int t,
      const std::vector<std::string>& landmarks,
      const std::string& gt_caption) override;

  std::string descriptor() const override { return "table:" + source_; }

 private:
  std::map<std::pair<std::string, int>, std::vector<double>> rows_;
  std::string source_;
};

void save_similarity_table(const std::vector<SimilarityRow>& rows,
                           const std::filesystem::path& table_file);

// Text-text scorer for worlds with planted landmarks: 1.0 when the landmark
// occurs in the ground-truth caption (word-boundary match), else 0.0.
class ExactMatchSimilarityProvider : public SimilarityProvider {
 public:
  std::optional<std::vector<double>> scores(
      const std::string& episode, int t,
      const std::vector<std::string>& landmarks,
      const std::string& gt_caption) override;

  std::string descriptor() const override { return "exact-match"; }
};

struct SimilarityEndpointConfig {
  std::string base_url;  // e.g. http://localhost:8089
  std::string path = "/similarity";
  std::string bearer_token;
  int max_retries = 3;
  int initial_backoff_ms = 200;
  int timeout_sec = 30;
};

// POSTs {"episode","t","landmarks":[...],"target":caption} and expects
// {"scores":[...]} back. Retries transient failures with exponential
// backoff; a missing row is signalled by HTTP 404 -> nullopt.
class HttpSimilarityProvider : public SimilarityProvider {
 public:
  explicit HttpSimilarityProvider(SimilarityEndpointConfig config);

  std::optional<std::vector<double>> scores(
      const std::string& episode, int t,
      const std::vector<std::string>& landmarks,
      const std::string& gt_caption) override;

  std::string descriptor() const override;

 private:
  SimilarityEndpointConfig config_;
};

}  // namespace navcot
