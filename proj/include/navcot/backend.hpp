#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "navcot/labels.hpp"

namespace navcot {

// Step addressing passed alongside the prompt so deterministic backends can
// key their behavior without parsing the prompt back apart.
struct StepContext {
  std::string episode;
  int t = 0;
  std::string valid_options;  // e.g. "ABC"
};

struct Completion {
  std::string text;
  // Transport-level retries the backend performed for this completion.
  int transport_retries = 0;
};

// Any source of completions for a rendered prompt: live endpoint, ground
// truth oracle, scripted sequence, or seeded random. Implementations must be
// safe to call from concurrent episode runs.
class ReasonerBackend {
 public:
  virtual ~ReasonerBackend() = default;

  virtual Completion generate(const std::string& prompt,
                              const StepContext& ctx) = 0;

  // Name plus config hash, recorded into traces and reports.
  virtual std::string descriptor() const = 0;

  // Called once before a batch; throws (e.g. AuthError) to fail fast.
  virtual void health_check() {}
};

// Replays ground-truth chain-of-thought strings. Throws LabelGap for steps
// it has no label for.
class OracleBackend : public ReasonerBackend {
 public:
  explicit OracleBackend(const std::vector<CoTLabel>& labels);

  Completion generate(const std::string& prompt,
                      const StepContext& ctx) override;
  std::string descriptor() const override { return "oracle"; }

 private:
  std::map<std::pair<std::string, int>, std::string> rendered_;
};

// Emits a fixed sequence of completions, cycling when exhausted.
class ScriptedBackend : public ReasonerBackend {
 public:
  explicit ScriptedBackend(std::vector<std::string> sequence);

  Completion generate(const std::string& prompt,
                      const StepContext& ctx) override;
  std::string descriptor() const override { return "scripted"; }

  std::size_t calls() const;

 private:
  std::vector<std::string> sequence_;
  mutable std::mutex mutex_;
  std::size_t calls_ = 0;
};

// Picks a uniformly random option letter. Seeded per (seed, episode, t), so
// results are independent of call order and identical across parallelism
// settings.
class RandomBackend : public ReasonerBackend {
 public:
  explicit RandomBackend(std::uint64_t seed) : seed_(seed) {}

  Completion generate(const std::string& prompt,
                      const StepContext& ctx) override;
  std::string descriptor() const override;

 private:
  std::uint64_t seed_;
};

}  // namespace navcot
