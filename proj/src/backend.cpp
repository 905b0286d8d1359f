#include "navcot/backend.hpp"

#include "navcot/cot.hpp"
#include "navcot/errors.hpp"
#include "navcot/rng.hpp"

namespace navcot {

OracleBackend::OracleBackend(const std::vector<CoTLabel>& labels) {
  for (const auto& label : labels) {
    rendered_[{label.episode, label.t}] = label.rendered;
  }
}

Completion OracleBackend::generate(const std::string& /*prompt*/,
                                   const StepContext& ctx) {
  auto it = rendered_.find({ctx.episode, ctx.t});
  if (it == rendered_.end()) {
    throw LabelGap("oracle has no label for episode " + ctx.episode + " t " +
                   std::to_string(ctx.t));
  }
  return Completion{it->second, 0};
}

ScriptedBackend::ScriptedBackend(std::vector<std::string> sequence)
    : sequence_(std::move(sequence)) {
  if (sequence_.empty()) {
    throw InvalidConfig("scripted backend needs at least one completion");
  }
}

Completion ScriptedBackend::generate(const std::string& /*prompt*/,
                                     const StepContext& /*ctx*/) {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto& text = sequence_[calls_ % sequence_.size()];
  ++calls_;
  return Completion{text, 0};
}

std::size_t ScriptedBackend::calls() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return calls_;
}

Completion RandomBackend::generate(const std::string& /*prompt*/,
                                   const StepContext& ctx) {
  if (ctx.valid_options.empty()) {
    throw InvalidConfig("random backend: empty option set");
  }
  Rng rng(derive_seed(seed_, ctx.episode, static_cast<std::uint64_t>(ctx.t)));
  const char letter = ctx.valid_options[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(ctx.valid_options.size()) -
                             1))];
  return Completion{format_cot({"random choice", letter, letter}), 0};
}

std::string RandomBackend::descriptor() const {
  return "random#" + std::to_string(seed_);
}

}  // namespace navcot
