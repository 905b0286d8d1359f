#include "navcot/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "navcot/cot.hpp"
#include "navcot/errors.hpp"
#include "navcot/jsonl.hpp"
#include "navcot/rng.hpp"

namespace navcot {

Task task_from_string(const std::string& s) {
  if (s == "fi" || s == "FI") return Task::kFI;
  if (s == "vif" || s == "VIF") return Task::kVIF;
  if (s == "ap" || s == "AP") return Task::kAP;
  if (s == "cot" || s == "COT") return Task::kCOT;
  throw InvalidConfig("unknown task: " + s);
}

const std::string& to_string(Task task) {
  static const std::string kNames[] = {"FI", "VIF", "AP", "COT"};
  return kNames[static_cast<int>(task)];
}

namespace {

std::string task_output(const CoTLabel& label, Task task) {
  switch (task) {
    case Task::kFI:
      return "Imagination: " + label.imagination + ".";
    case Task::kVIF:
      return std::string("Filtered observation: ") + label.gt_action +
             " matches the imagination.";
    case Task::kAP:
      return std::string("Action: ") + label.gt_action + ".";
    case Task::kCOT:
      return label.rendered;
  }
  throw InvalidConfig("unreachable task value");
}

std::string render_record_input(const ExportOptions& opts,
                                const NavInput& nav) {
  if (opts.include_example) return render_prompt(opts.example, nav);
  return "Input: " + render_input_block(nav) + "\nOutput:";
}

// Builds all records for one task. Episodes processed in id order so the
// output is stable regardless of input ordering.
ExportResult export_task(const std::vector<CoTLabel>& labels,
                         const std::vector<Episode>& episodes,
                         const GraphSet& graphs, const CaptionTable& captions,
                         Task task, const ExportOptions& opts) {
  std::map<std::pair<std::string, int>, const CoTLabel*> by_step;
  for (const auto& label : labels) {
    by_step[{label.episode, label.t}] = &label;
  }

  std::vector<const Episode*> ordered;
  ordered.reserve(episodes.size());
  for (const auto& ep : episodes) ordered.push_back(&ep);
  std::sort(ordered.begin(), ordered.end(),
            [](const Episode* a, const Episode* b) { return a->id < b->id; });

  ExportResult result;
  for (const Episode* ep : ordered) {
    const auto& g = graphs.for_scan(ep->scan);
    const auto steps = expert_walk(g, captions, *ep, opts.observation);
    std::vector<std::string> history;
    for (const auto& step : steps) {
      auto it = by_step.find({ep->id, step.t});
      if (it == by_step.end()) {
        throw LabelGap("no label for episode " + ep->id + " t " +
                       std::to_string(step.t));
      }
      const CoTLabel& label = *it->second;

      NavInput nav{ep->instruction, step.observations,
                   render_history(history, opts.history_mode)};
      std::string input = render_record_input(opts, nav);
      // Over-budget inputs lose history first: full -> last step -> none.
      if (input.size() > opts.input_char_budget &&
          opts.history_mode != HistoryMode::kNone && !history.empty()) {
        ++result.stats.history_truncated;
        if (opts.history_mode == HistoryMode::kAll) {
          nav.history = render_history(history, HistoryMode::kLast);
          input = render_record_input(opts, nav);
        }
        if (input.size() > opts.input_char_budget) {
          nav.history = render_history({}, HistoryMode::kNone);
          input = render_record_input(opts, nav);
        }
      }
      if (input.size() > opts.input_char_budget) ++result.stats.over_budget;

      result.records.push_back(TrainingRecord{
          std::move(input), task_output(label, task), task, ep->id, step.t});
      ++result.stats.records;

      if (step.gt_action != 'A') history.push_back(step.chosen_description);
    }
  }
  return result;
}

}  // namespace

ExportResult export_pretrain(const std::vector<CoTLabel>& labels,
                             const std::vector<Episode>& episodes,
                             const GraphSet& graphs,
                             const CaptionTable& captions, Task task,
                             const ExportOptions& opts) {
  if (task == Task::kCOT) {
    throw InvalidConfig("export_pretrain expects task FI, VIF, or AP");
  }
  return export_task(labels, episodes, graphs, captions, task, opts);
}

ExportResult export_finetune(const std::vector<CoTLabel>& labels,
                             const std::vector<Episode>& episodes,
                             const GraphSet& graphs,
                             const CaptionTable& captions,
                             const ExportOptions& opts) {
  return export_task(labels, episodes, graphs, captions, Task::kCOT, opts);
}

std::vector<Episode> sample_augmentation(const std::vector<Episode>& pool,
                                         std::size_t n, std::uint64_t seed) {
  if (n > pool.size()) {
    throw PoolTooSmall("requested " + std::to_string(n) + " samples from " +
                       std::to_string(pool.size()) + " episodes");
  }
  std::vector<std::size_t> indices(pool.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  Rng rng(splitmix64(seed));
  // Partial Fisher-Yates: the first n slots become the sample.
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(i),
                        static_cast<std::int64_t>(indices.size()) - 1));
    std::swap(indices[i], indices[j]);
  }
  std::vector<Episode> sample;
  sample.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sample.push_back(pool[indices[i]]);
  std::sort(sample.begin(), sample.end(),
            [](const Episode& a, const Episode& b) { return a.id < b.id; });
  return sample;
}

std::vector<std::string> validate_records(
    const std::vector<TrainingRecord>& records) {
  std::vector<std::string> violations;
  const std::string all_letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  for (const auto& rec : records) {
    const std::string where =
        to_string(rec.task) + " record episode " + rec.episode + " t " +
        std::to_string(rec.t);
    switch (rec.task) {
      case Task::kCOT:
        try {
          parse_cot(rec.output, all_letters, ParseMode::kStrict);
        } catch (const MalformedOutput& e) {
          violations.push_back(where + ": " + e.what());
        }
        break;
      case Task::kFI:
        if (rec.output.rfind("Imagination: ", 0) != 0 ||
            rec.output.back() != '.') {
          violations.push_back(where + ": malformed imagination clause");
        }
        break;
      case Task::kVIF: {
        const std::string prefix = "Filtered observation: ";
        const std::string suffix = " matches the imagination.";
        const bool ok = rec.output.size() == prefix.size() + 1 + suffix.size() &&
                        rec.output.rfind(prefix, 0) == 0 &&
                        std::isupper(static_cast<unsigned char>(
                            rec.output[prefix.size()])) &&
                        rec.output.compare(prefix.size() + 1, suffix.size(),
                                           suffix) == 0;
        if (!ok) violations.push_back(where + ": malformed filtered clause");
        break;
      }
      case Task::kAP: {
        const bool ok = rec.output.size() == 10 &&
                        rec.output.rfind("Action: ", 0) == 0 &&
                        std::isupper(static_cast<unsigned char>(
                            rec.output[8])) &&
                        rec.output[9] == '.';
        if (!ok) violations.push_back(where + ": malformed action clause");
        break;
      }
    }
  }
  return violations;
}

void save_records(const std::vector<TrainingRecord>& records,
                  const std::filesystem::path& path) {
  std::vector<json> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) {
    rows.push_back({{"input", rec.input},
                    {"output", rec.output},
                    {"task", to_string(rec.task)},
                    {"episode", rec.episode},
                    {"t", rec.t}});
  }
  write_jsonl(path, rows);
}

std::vector<TrainingRecord> load_records(const std::filesystem::path& path) {
  std::vector<TrainingRecord> records;
  for (const auto& row : read_jsonl(path)) {
    try {
      records.push_back(TrainingRecord{
          row.at("input").get<std::string>(),
          row.at("output").get<std::string>(),
          task_from_string(row.at("task").get<std::string>()),
          row.at("episode").get<std::string>(), row.at("t").get<int>()});
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": bad record row: " + e.what());
    }
  }
  return records;
}

}  // namespace navcot
