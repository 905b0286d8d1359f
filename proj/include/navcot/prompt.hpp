#pragma once

#include <string>
#include <vector>

#include "navcot/observation.hpp"

namespace navcot {

enum class HistoryMode { kNone, kAll, kLast };

HistoryMode history_mode_from_string(const std::string& s);
const std::string& to_string(HistoryMode mode);

// Renders the text that follows "History: " in the prompt. `steps` holds the
// chosen option description of each executed step, oldest first.
//   none -> "none."            (history withheld regardless of steps)
//   last -> "Step k. <descr>." (only the most recent step, true step number)
//   all  -> "Step 1. ... Step k. ..." (every step, numbered from 1)
// Empty `steps` renders "none." in every mode.
std::string render_history(const std::vector<std::string>& steps,
                           HistoryMode mode);

// One worked reasoning example shown before the query. The output block must
// parse as a CoT record against the option letters of its own input block.
struct InContextExample {
  std::string input_block;
  std::string output_block;
};

// The shipped default example; alternates are configuration.
const InContextExample& default_example();

// Option letters appearing in an example's observation list, e.g. "ABC".
std::string example_option_letters(const InContextExample& ex);

// Throws InvalidConfig when the output block does not parse against the
// input block's options.
void validate_example(const InContextExample& ex);

struct NavInput {
  std::string instruction;
  ObservationSet observations;
  std::string history;  // pre-rendered via render_history
};

// Full prompt: example block, then the query navigation input, then a bare
// "Output:" for the model to complete. Byte-deterministic.
std::string render_prompt(const InContextExample& ex, const NavInput& nav);

// The query block alone ("Instruction: ... Observation: [...]. History: ...").
std::string render_input_block(const NavInput& nav);

}  // namespace navcot
