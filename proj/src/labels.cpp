#include "navcot/labels.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "navcot/cot.hpp"
#include "navcot/errors.hpp"
#include "navcot/jsonl.hpp"
#include "navcot/landmarks.hpp"

namespace navcot {

ImaginationChoice select_imagination(const std::vector<std::string>& landmarks,
                                     const std::vector<double>& scores) {
  if (landmarks.empty()) {
    throw EmptyLandmarks("select_imagination: no landmarks");
  }
  if (scores.size() != landmarks.size()) {
    throw ProviderGap("score count " + std::to_string(scores.size()) +
                      " does not match landmark count " +
                      std::to_string(landmarks.size()));
  }
  std::size_t best = 0;
  bool tied = false;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) {
      best = k;
      tied = false;
    } else if (scores[k] == scores[best]) {
      tied = true;
    }
  }
  return {best, landmarks[best], tied};
}

CoTLabel build_cot_label(const std::string& episode, int t,
                         const std::string& imagination, char gt_action,
                         const ObservationSet& step_options) {
  if (!step_options.valid_label(gt_action)) {
    throw InvalidGtAction("episode " + episode + " t " + std::to_string(t) +
                          ": action '" + std::string(1, gt_action) +
                          "' not among options " +
                          step_options.valid_labels());
  }
  CoTLabel label{episode, t, imagination, gt_action,
                 format_cot({imagination, gt_action, gt_action})};
  // An imagination that collides with the clause grammar cannot be rendered
  // into a valid label.
  const auto parsed =
      [&]() -> CoTOutput {
    try {
      return parse_cot(label.rendered, step_options.valid_labels(),
                       ParseMode::kStrict);
    } catch (const MalformedOutput& e) {
      throw InvalidConfig("label for episode " + episode + " t " +
                          std::to_string(t) +
                          " does not strict-parse: " + e.what());
    }
  }();
  if (parsed.imagination != imagination || parsed.action != gt_action ||
      parsed.filtered_option != gt_action) {
    throw InvalidConfig("imagination text collides with the label grammar: " +
                        imagination);
  }
  return label;
}

std::vector<ExpertStep> expert_walk(const NavGraph& g,
                                    const CaptionTable& captions,
                                    const Episode& ep,
                                    const ObservationOptions& opts) {
  validate_episode(ep, g);
  std::vector<ExpertStep> steps;
  Pose pose{normalize_heading(ep.start_heading_deg), 0.0};
  for (std::size_t i = 0; i < ep.gt_path.size(); ++i) {
    ExpertStep step;
    step.t = static_cast<int>(i);
    step.viewpoint = ep.gt_path[i];
    step.pose = pose;
    step.observations =
        build_observation_set(g, captions, ep.scan, step.viewpoint, pose, opts);
    if (i + 1 < ep.gt_path.size()) {
      const auto& next = ep.gt_path[i + 1];
      char label = 0;
      for (const auto& [opt_label, nbr] : step.observations.neighbor_by_label) {
        if (nbr == next) {
          label = opt_label;
          break;
        }
      }
      if (label == 0) {
        throw InvalidGtAction("episode " + ep.id + ": gt step " +
                              std::to_string(i) + " target " + next +
                              " is not a navigable option");
      }
      step.gt_action = label;
      for (const auto& opt : step.observations.options) {
        if (opt.option_label == label) {
          step.chosen_description = opt.text;
          break;
        }
      }
      pose.heading_deg = bearing_deg(g.viewpoint(step.viewpoint).position,
                                     g.viewpoint(next).position);
      pose.elevation_deg = 0.0;
    } else {
      step.gt_action = 'A';
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

namespace {

std::vector<std::string> normalize_landmarks(
    const std::vector<std::string>& raw) {
  std::vector<std::string> items;
  std::set<std::string> seen;
  for (const auto& item : raw) {
    std::string norm;
    norm.reserve(item.size());
    for (char c : item) {
      norm.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    // trim
    const auto b = norm.find_first_not_of(" \t\r\n");
    const auto e = norm.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    norm = norm.substr(b, e - b + 1);
    if (seen.insert(norm).second) items.push_back(std::move(norm));
  }
  return items;
}

}  // namespace

CacheLandmarkSource::CacheLandmarkSource(
    const std::filesystem::path& cache_file)
    : source_(cache_file.string()) {
  for (const auto& row : read_jsonl(cache_file)) {
    try {
      by_episode_[row.at("episode").get<std::string>()] = normalize_landmarks(
          row.at("landmarks").get<std::vector<std::string>>());
    } catch (const json::exception& e) {
      throw ParseError(source_ + ": bad landmark row: " + e.what());
    }
  }
}

CacheLandmarkSource::CacheLandmarkSource(
    std::map<std::string, std::vector<std::string>> by_episode)
    : source_("<memory>") {
  for (auto& [ep, items] : by_episode) {
    by_episode_[ep] = normalize_landmarks(items);
  }
}

std::vector<std::string> CacheLandmarkSource::landmarks_for(const Episode& ep) {
  auto it = by_episode_.find(ep.id);
  if (it == by_episode_.end()) {
    throw ProviderGap("no landmark cache entry for episode " + ep.id);
  }
  return it->second;
}

void save_landmark_cache(
    const std::map<std::string, std::vector<std::string>>& by_episode,
    const std::filesystem::path& cache_file) {
  std::vector<json> rows;
  rows.reserve(by_episode.size());
  for (const auto& [ep, landmarks] : by_episode) {
    rows.push_back({{"episode", ep}, {"landmarks", landmarks}});
  }
  write_jsonl(cache_file, rows);
}

ExtractingLandmarkSource::ExtractingLandmarkSource(
    CompletionFn complete, std::filesystem::path cache_file)
    : complete_(std::move(complete)), cache_file_(std::move(cache_file)) {
  if (std::filesystem::exists(cache_file_)) {
    for (const auto& row : read_jsonl(cache_file_)) {
      by_episode_[row.at("episode").get<std::string>()] = normalize_landmarks(
          row.at("landmarks").get<std::vector<std::string>>());
    }
  }
}

std::vector<std::string> ExtractingLandmarkSource::landmarks_for(
    const Episode& ep) {
  auto it = by_episode_.find(ep.id);
  if (it != by_episode_.end()) return it->second;

  ++extraction_calls_;
  const auto completion = complete_(build_landmark_prompt(ep.instruction));
  auto items = normalize_landmarks(parse_landmark_list(completion));
  by_episode_[ep.id] = items;
  save_landmark_cache(by_episode_, cache_file_);
  return items;
}

LabelResult label_dataset(const std::vector<Episode>& episodes,
                          const GraphSet& graphs, const CaptionTable& captions,
                          LandmarkSource& landmark_source,
                          SimilarityProvider& provider,
                          const ObservationOptions& opts) {
  LabelResult result;
  for (const auto& ep : episodes) {
    const auto& g = graphs.for_scan(ep.scan);
    const auto landmarks = landmark_source.landmarks_for(ep);
    const auto steps = expert_walk(g, captions, ep, opts);
    if (landmarks.empty()) ++result.stats.zero_landmark_episodes;

    for (const auto& step : steps) {
      std::string imagination;
      const bool is_stop = step.gt_action == 'A';
      if (landmarks.empty()) {
        imagination = kNoLandmarkImagination;
      } else if (is_stop) {
        // The instruction's final landmark is the destination.
        imagination = landmarks.back();
      } else {
        const auto& next = ep.gt_path[static_cast<std::size_t>(step.t) + 1];
        const auto& gt_caption =
            captions.get(ep.scan, step.viewpoint, next);
        auto scores =
            provider.scores(ep.id, step.t, landmarks, gt_caption);
        if (!scores) {
          throw ProviderGap("no similarity row for episode " + ep.id +
                            " t " + std::to_string(step.t));
        }
        const auto choice = select_imagination(landmarks, *scores);
        if (choice.tied) ++result.stats.tie_steps;
        imagination = choice.imagination;
      }
      result.labels.push_back(build_cot_label(ep.id, step.t, imagination,
                                              step.gt_action,
                                              step.observations));
      ++result.stats.labels;
    }
    ++result.stats.episodes;
  }
  return result;
}

void save_labels(const std::vector<CoTLabel>& labels,
                 const std::filesystem::path& path) {
  std::vector<json> rows;
  rows.reserve(labels.size());
  for (const auto& label : labels) {
    rows.push_back({{"episode", label.episode},
                    {"t", label.t},
                    {"imagination", label.imagination},
                    {"gt_action", std::string(1, label.gt_action)},
                    {"rendered", label.rendered}});
  }
  write_jsonl(path, rows);
}

std::vector<CoTLabel> load_labels(const std::filesystem::path& path) {
  std::vector<CoTLabel> labels;
  for (const auto& row : read_jsonl(path)) {
    try {
      CoTLabel label;
      label.episode = row.at("episode").get<std::string>();
      label.t = row.at("t").get<int>();
      label.imagination = row.at("imagination").get<std::string>();
      const auto action = row.at("gt_action").get<std::string>();
      if (action.size() != 1) {
        throw ParseError(path.string() + ": gt_action must be one letter");
      }
      label.gt_action = action[0];
      label.rendered = row.at("rendered").get<std::string>();
      labels.push_back(std::move(label));
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": bad label row: " + e.what());
    }
  }
  return labels;
}

}  // namespace navcot
