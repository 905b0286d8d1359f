#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "navcot/episode.hpp"
#include "navcot/graph.hpp"
#include "navcot/labels.hpp"
#include "navcot/prompt.hpp"

namespace navcot {

// FI / VIF / AP are the three disentangled single-step pretraining tasks;
// COT is the sequential full chain-of-thought finetuning task.
enum class Task { kFI, kVIF, kAP, kCOT };

Task task_from_string(const std::string& s);
const std::string& to_string(Task task);

struct TrainingRecord {
  std::string input;
  std::string output;
  Task task = Task::kCOT;
  std::string episode;
  int t = 0;
};

struct ExportOptions {
  HistoryMode history_mode = HistoryMode::kLast;
  InContextExample example = default_example();
  // Whether the in-context example is part of each record's input. On by
  // default so the training distribution matches inference prompts.
  bool include_example = true;
  // Character-count proxy for the 400-token training budget (4 chars/token).
  std::size_t input_char_budget = 1600;
  ObservationOptions observation;
};

struct ExportStats {
  std::size_t records = 0;
  std::size_t history_truncated = 0;  // records whose history was shortened
  std::size_t over_budget = 0;        // still over budget with no history
};

struct ExportResult {
  std::vector<TrainingRecord> records;
  ExportStats stats;
};

// One record per (episode, t): the full step prompt as input, the task's
// clause of CoT*_t as output. Records come out in (episode id, t) order.
// Throws LabelGap naming the first uncovered step.
ExportResult export_pretrain(const std::vector<CoTLabel>& labels,
                             const std::vector<Episode>& episodes,
                             const GraphSet& graphs,
                             const CaptionTable& captions, Task task,
                             const ExportOptions& opts = {});

// Teacher-forced sequential dataset: one COT record per expert step.
ExportResult export_finetune(const std::vector<CoTLabel>& labels,
                             const std::vector<Episode>& episodes,
                             const GraphSet& graphs,
                             const CaptionTable& captions,
                             const ExportOptions& opts = {});

// Uniform sample of n episodes without replacement, deterministic per seed;
// output canonicalized to episode-id order. Throws PoolTooSmall.
std::vector<Episode> sample_augmentation(const std::vector<Episode>& pool,
                                         std::size_t n, std::uint64_t seed);

// Returns a human-readable violation per record that breaks its task's
// output contract; empty means the batch is valid.
std::vector<std::string> validate_records(
    const std::vector<TrainingRecord>& records);

// Dataset file: JSON Lines {"input","output","task","episode","t"}, UTF-8,
// LF endings, byte-identical across reruns for identical inputs.
void save_records(const std::vector<TrainingRecord>& records,
                  const std::filesystem::path& path);
std::vector<TrainingRecord> load_records(const std::filesystem::path& path);

}  // namespace navcot
