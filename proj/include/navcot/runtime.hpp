#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "navcot/backend.hpp"
#include "navcot/cot.hpp"
#include "navcot/episode.hpp"
#include "navcot/graph.hpp"
#include "navcot/prompt.hpp"

namespace navcot {

enum class FallbackPolicy { kFirstNonstop, kStop };
FallbackPolicy fallback_from_string(const std::string& s);
const std::string& to_string(FallbackPolicy policy);

enum class StopReason { kStopAction, kStepBudget, kBackendFailure };
const std::string& to_string(StopReason reason);

struct RunConfig {
  int max_steps = 15;
  HistoryMode history_mode = HistoryMode::kLast;
  double temperature = 0.0;
  std::uint64_t seed = 0;
  FallbackPolicy fallback = FallbackPolicy::kFirstNonstop;
  InContextExample example = default_example();
  ObservationOptions observation;
};

// Full record of one decision step, for post-hoc inspection.
struct StepRecord {
  int t = 0;
  std::string viewpoint;
  std::string prompt;
  std::string raw_completion;
  bool parsed_ok = false;
  std::string parse_error;
  CoTOutput cot;  // meaningful when parsed_ok
  bool fallback_used = false;
  char chosen_option = 'A';
  std::string result_viewpoint;  // empty when the step stopped
  int transport_retries = 0;
  int malformed_retries = 0;
};

struct EpisodeResult {
  std::string episode;
  Trajectory trajectory;
  std::vector<StepRecord> steps;
  StopReason stop_reason = StopReason::kStopAction;
  std::string error;  // set when stop_reason == kBackendFailure
};

// Runs one closed-loop episode: build options, render prompt, query the
// backend (one retry on malformed output, then the fallback policy), apply
// the action, until stop or the step budget. Throws BackendUnavailable /
// AuthError from the backend and EnvironmentGap on a missing caption.
EpisodeResult run_episode(const NavGraph& g, const CaptionTable& captions,
                          const Episode& ep, ReasonerBackend& backend,
                          const RunConfig& cfg);

// Runs episodes concurrently up to `parallelism`; results ordered by episode
// id and identical to sequential execution for deterministic backends.
// Per-episode failures are reported in their slot, not thrown.
std::vector<EpisodeResult> run_batch(const std::vector<Episode>& episodes,
                                     const GraphSet& graphs,
                                     const CaptionTable& captions,
                                     ReasonerBackend& backend,
                                     const RunConfig& cfg, int parallelism);

// Trace files: a {"meta": ...} header line, then one EpisodeResult per line.
struct RunMeta {
  std::string config_hash;
  std::string backend;
  std::string version;
  nlohmann::json config_echo;
};

void save_traces(const std::vector<EpisodeResult>& results, const RunMeta& meta,
                 const std::filesystem::path& path);

struct TraceFile {
  std::optional<RunMeta> meta;
  std::vector<EpisodeResult> results;
};
TraceFile load_traces(const std::filesystem::path& path);

}  // namespace navcot
