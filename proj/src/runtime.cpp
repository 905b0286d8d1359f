#include "navcot/runtime.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "navcot/cot.hpp"
#include "navcot/errors.hpp"
#include "navcot/jsonl.hpp"

namespace navcot {

FallbackPolicy fallback_from_string(const std::string& s) {
  if (s == "first_nonstop") return FallbackPolicy::kFirstNonstop;
  if (s == "stop") return FallbackPolicy::kStop;
  throw InvalidConfig("unknown fallback policy: " + s);
}

const std::string& to_string(FallbackPolicy policy) {
  static const std::string kNames[] = {"first_nonstop", "stop"};
  return kNames[static_cast<int>(policy)];
}

const std::string& to_string(StopReason reason) {
  static const std::string kNames[] = {"stop_action", "step_budget",
                                       "backend_failure"};
  return kNames[static_cast<int>(reason)];
}

namespace {

StopReason stop_reason_from_string(const std::string& s) {
  if (s == "stop_action") return StopReason::kStopAction;
  if (s == "step_budget") return StopReason::kStepBudget;
  if (s == "backend_failure") return StopReason::kBackendFailure;
  throw ParseError("unknown stop reason: " + s);
}

char fallback_option(const ObservationSet& obs, FallbackPolicy policy) {
  if (policy == FallbackPolicy::kStop || obs.options.size() < 2) return 'A';
  return 'B';  // options are sorted, B is the first non-stop one
}

}  // namespace

EpisodeResult run_episode(const NavGraph& g, const CaptionTable& captions,
                          const Episode& ep, ReasonerBackend& backend,
                          const RunConfig& cfg) {
  if (cfg.max_steps < 1) throw InvalidConfig("max_steps must be >= 1");
  validate_episode(ep, g);

  EpisodeResult result;
  result.episode = ep.id;
  std::string current = ep.gt_path.front();
  Pose pose{normalize_heading(ep.start_heading_deg), 0.0};
  result.trajectory.visited.push_back(current);
  std::vector<std::string> history;

  for (int t = 0; t < cfg.max_steps; ++t) {
    ObservationSet obs;
    try {
      obs = build_observation_set(g, captions, ep.scan, current, pose,
                                  cfg.observation);
    } catch (const MissingCaption& e) {
      throw EnvironmentGap(std::string("episode ") + ep.id + ": " + e.what());
    }

    StepRecord step;
    step.t = t;
    step.viewpoint = current;
    step.prompt = render_prompt(
        cfg.example,
        NavInput{ep.instruction, obs, render_history(history, cfg.history_mode)});
    const StepContext ctx{ep.id, t, obs.valid_labels()};

    // One query plus one retry on malformed output, then the fallback policy.
    for (int attempt = 0; attempt < 2; ++attempt) {
      const auto completion = backend.generate(step.prompt, ctx);
      step.raw_completion = completion.text;
      step.transport_retries += completion.transport_retries;
      try {
        step.cot = parse_cot(completion.text, ctx.valid_options,
                             ParseMode::kLenient);
        step.parsed_ok = true;
        step.parse_error.clear();
        break;
      } catch (const MalformedOutput& e) {
        step.parsed_ok = false;
        step.parse_error = e.what();
        if (attempt == 0) step.malformed_retries = 1;
      }
    }

    if (step.parsed_ok) {
      step.chosen_option = step.cot.action;
    } else {
      step.fallback_used = true;
      step.chosen_option = fallback_option(obs, cfg.fallback);
    }

    if (step.chosen_option == 'A') {
      result.steps.push_back(std::move(step));
      result.trajectory.stopped = true;
      result.stop_reason = StopReason::kStopAction;
      return result;
    }

    const auto& next = obs.neighbor_by_label.at(step.chosen_option);
    step.result_viewpoint = next;
    for (const auto& opt : obs.options) {
      if (opt.option_label == step.chosen_option) {
        history.push_back(opt.text);
        break;
      }
    }
    pose.heading_deg = bearing_deg(g.viewpoint(current).position,
                                   g.viewpoint(next).position);
    pose.elevation_deg = 0.0;
    current = next;
    result.trajectory.visited.push_back(current);
    result.steps.push_back(std::move(step));
  }

  result.trajectory.stopped = false;
  result.stop_reason = StopReason::kStepBudget;
  return result;
}

std::vector<EpisodeResult> run_batch(const std::vector<Episode>& episodes,
                                     const GraphSet& graphs,
                                     const CaptionTable& captions,
                                     ReasonerBackend& backend,
                                     const RunConfig& cfg, int parallelism) {
  if (parallelism < 1) throw InvalidConfig("parallelism must be >= 1");
  backend.health_check();

  std::vector<const Episode*> ordered;
  ordered.reserve(episodes.size());
  for (const auto& ep : episodes) ordered.push_back(&ep);
  std::sort(ordered.begin(), ordered.end(),
            [](const Episode* a, const Episode* b) { return a->id < b->id; });

  std::vector<EpisodeResult> results(ordered.size());
  auto run_one = [&](std::size_t i) {
    const Episode& ep = *ordered[i];
    try {
      results[i] = run_episode(graphs.for_scan(ep.scan), captions, ep,
                               backend, cfg);
    } catch (const NavcotError& e) {
      EpisodeResult failed;
      failed.episode = ep.id;
      failed.trajectory.visited.push_back(ep.gt_path.front());
      failed.stop_reason = StopReason::kBackendFailure;
      failed.error = e.what();
      results[i] = std::move(failed);
    }
  };

  if (parallelism == 1 || ordered.size() <= 1) {
    for (std::size_t i = 0; i < ordered.size(); ++i) run_one(i);
    return results;
  }

  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> workers;
  const auto n_workers = std::min<std::size_t>(
      static_cast<std::size_t>(parallelism), ordered.size());
  workers.reserve(n_workers);
  for (std::size_t w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const auto i = cursor.fetch_add(1);
        if (i >= results.size()) return;
        run_one(i);
      }
    });
  }
  for (auto& worker : workers) worker.join();
  return results;
}

namespace {

json step_to_json(const StepRecord& step) {
  return {{"t", step.t},
          {"viewpoint", step.viewpoint},
          {"prompt", step.prompt},
          {"raw_completion", step.raw_completion},
          {"parsed_ok", step.parsed_ok},
          {"parse_error", step.parse_error},
          {"imagination", step.cot.imagination},
          {"filtered_option", std::string(1, step.cot.filtered_option)},
          {"action", std::string(1, step.cot.action)},
          {"fallback_used", step.fallback_used},
          {"chosen_option", std::string(1, step.chosen_option)},
          {"result_viewpoint", step.result_viewpoint},
          {"transport_retries", step.transport_retries},
          {"malformed_retries", step.malformed_retries}};
}

StepRecord step_from_json(const json& j) {
  StepRecord step;
  step.t = j.at("t").get<int>();
  step.viewpoint = j.at("viewpoint").get<std::string>();
  step.prompt = j.at("prompt").get<std::string>();
  step.raw_completion = j.at("raw_completion").get<std::string>();
  step.parsed_ok = j.at("parsed_ok").get<bool>();
  step.parse_error = j.at("parse_error").get<std::string>();
  step.cot.imagination = j.at("imagination").get<std::string>();
  step.cot.filtered_option = j.at("filtered_option").get<std::string>().at(0);
  step.cot.action = j.at("action").get<std::string>().at(0);
  step.fallback_used = j.at("fallback_used").get<bool>();
  step.chosen_option = j.at("chosen_option").get<std::string>().at(0);
  step.result_viewpoint = j.at("result_viewpoint").get<std::string>();
  step.transport_retries = j.at("transport_retries").get<int>();
  step.malformed_retries = j.at("malformed_retries").get<int>();
  return step;
}

}  // namespace

void save_traces(const std::vector<EpisodeResult>& results, const RunMeta& meta,
                 const std::filesystem::path& path) {
  std::vector<json> rows;
  rows.reserve(results.size() + 1);
  rows.push_back({{"meta",
                   {{"config_hash", meta.config_hash},
                    {"backend", meta.backend},
                    {"version", meta.version},
                    {"config", meta.config_echo}}}});
  for (const auto& result : results) {
    json steps = json::array();
    for (const auto& step : result.steps) steps.push_back(step_to_json(step));
    rows.push_back({{"episode", result.episode},
                    {"visited", result.trajectory.visited},
                    {"stopped", result.trajectory.stopped},
                    {"stop_reason", to_string(result.stop_reason)},
                    {"error", result.error},
                    {"steps", std::move(steps)}});
  }
  write_jsonl(path, rows);
}

TraceFile load_traces(const std::filesystem::path& path) {
  TraceFile file;
  for (const auto& row : read_jsonl(path)) {
    if (row.contains("meta")) {
      const auto& m = row.at("meta");
      RunMeta meta;
      meta.config_hash = m.value("config_hash", "");
      meta.backend = m.value("backend", "");
      meta.version = m.value("version", "");
      meta.config_echo = m.value("config", json::object());
      file.meta = std::move(meta);
      continue;
    }
    try {
      EpisodeResult result;
      result.episode = row.at("episode").get<std::string>();
      result.trajectory.visited =
          row.at("visited").get<std::vector<std::string>>();
      result.trajectory.stopped = row.at("stopped").get<bool>();
      result.stop_reason =
          stop_reason_from_string(row.at("stop_reason").get<std::string>());
      result.error = row.value("error", "");
      for (const auto& s : row.at("steps")) {
        result.steps.push_back(step_from_json(s));
      }
      file.results.push_back(std::move(result));
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": bad trace row: " + e.what());
    }
  }
  return file;
}

}  // namespace navcot
