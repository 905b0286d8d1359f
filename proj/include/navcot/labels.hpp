#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "navcot/episode.hpp"
#include "navcot/graph.hpp"
#include "navcot/observation.hpp"
#include "navcot/prompt.hpp"
#include "navcot/similarity.hpp"

namespace navcot {

// Ground-truth reasoning string for one expert step.
struct CoTLabel {
  std::string episode;
  int t = 0;
  std::string imagination;
  char gt_action = 'A';
  std::string rendered;  // canonical CoT string, strict-parseable
};

// Argmax over scores; ties break to the lowest index (earliest mention in
// the instruction). Throws EmptyLandmarks, and ProviderGap on a length
// mismatch between scores and landmarks.
struct ImaginationChoice {
  std::size_t index = 0;
  std::string imagination;
  bool tied = false;
};
ImaginationChoice select_imagination(const std::vector<std::string>& landmarks,
                                     const std::vector<double>& scores);

// Renders and validates one label. Throws InvalidGtAction when `gt_action`
// is not a label of `step_options`.
CoTLabel build_cot_label(const std::string& episode, int t,
                         const std::string& imagination, char gt_action,
                         const ObservationSet& step_options);

// One expert (teacher-forced) step along a gt_path: the state the agent
// would see, plus the ground-truth action taken from it.
struct ExpertStep {
  int t = 0;
  std::string viewpoint;
  Pose pose;
  ObservationSet observations;
  char gt_action = 'A';  // 'A' on the terminal stop step
  std::string chosen_description;  // text of the gt option ("" for stop)
};

// Walks an episode's gt_path: one step per viewpoint, the last being the
// stop step. Pose follows the runtime convention (initial heading from the
// episode, then heading faces the direction of travel, elevation 0).
std::vector<ExpertStep> expert_walk(const NavGraph& g,
                                    const CaptionTable& captions,
                                    const Episode& ep,
                                    const ObservationOptions& opts = {});

// Where landmark lists come from: a cache file, an extraction endpoint, or
// a planted synthetic table.
class LandmarkSource {
 public:
  virtual ~LandmarkSource() = default;
  // Normalized landmark list for the episode; may be empty.
  virtual std::vector<std::string> landmarks_for(const Episode& ep) = 0;
  virtual std::string descriptor() const = 0;
};

// Landmark cache file: JSON Lines {"episode","landmarks":[...]}.
class CacheLandmarkSource : public LandmarkSource {
 public:
  explicit CacheLandmarkSource(const std::filesystem::path& cache_file);
  explicit CacheLandmarkSource(
      std::map<std::string, std::vector<std::string>> by_episode);

  std::vector<std::string> landmarks_for(const Episode& ep) override;
  std::string descriptor() const override { return "cache:" + source_; }

 private:
  std::map<std::string, std::vector<std::string>> by_episode_;
  std::string source_;
};

void save_landmark_cache(
    const std::map<std::string, std::vector<std::string>>& by_episode,
    const std::filesystem::path& cache_file);

// Extracts landmarks through a completion endpoint, consulting and updating
// a cache file so each instruction is extracted at most once.
class ExtractingLandmarkSource : public LandmarkSource {
 public:
  using CompletionFn = std::function<std::string(const std::string& prompt)>;

  ExtractingLandmarkSource(CompletionFn complete,
                           std::filesystem::path cache_file);

  std::vector<std::string> landmarks_for(const Episode& ep) override;
  std::string descriptor() const override { return "extract+cache"; }

  std::size_t extraction_calls() const { return extraction_calls_; }

 private:
  CompletionFn complete_;
  std::filesystem::path cache_file_;
  std::map<std::string, std::vector<std::string>> by_episode_;
  std::size_t extraction_calls_ = 0;
};

struct LabelStats {
  std::size_t episodes = 0;
  std::size_t labels = 0;
  std::size_t tie_steps = 0;
  std::size_t zero_landmark_episodes = 0;
};

struct LabelResult {
  std::vector<CoTLabel> labels;
  LabelStats stats;
};

// Imagination used when an instruction yields no landmarks; such episodes
// are labeled and flagged rather than dropped.
inline constexpr const char* kNoLandmarkImagination = "forward";

// Builds one label per gt_path entry of every episode: one per move (Eq. 3
// argmax over provider scores against the view toward the next gt
// viewpoint) plus the terminal stop, whose imagination is the last landmark.
// Throws ProviderGap naming (episode, t) on a missing similarity row.
LabelResult label_dataset(const std::vector<Episode>& episodes,
                          const GraphSet& graphs, const CaptionTable& captions,
                          LandmarkSource& landmark_source,
                          SimilarityProvider& provider,
                          const ObservationOptions& opts = {});

// Label file: JSON Lines {"episode","t","imagination","gt_action","rendered"}.
void save_labels(const std::vector<CoTLabel>& labels,
                 const std::filesystem::path& path);
std::vector<CoTLabel> load_labels(const std::filesystem::path& path);

}  // namespace navcot
