#include "navcot/prompt.hpp"

#include <cctype>

#include "navcot/cot.hpp"
#include "navcot/errors.hpp"

namespace navcot {

HistoryMode history_mode_from_string(const std::string& s) {
  if (s == "none") return HistoryMode::kNone;
  if (s == "all") return HistoryMode::kAll;
  if (s == "last") return HistoryMode::kLast;
  throw InvalidConfig("unknown history mode: " + s);
}

const std::string& to_string(HistoryMode mode) {
  static const std::string kNames[] = {"none", "all", "last"};
  return kNames[static_cast<int>(mode)];
}

std::string render_history(const std::vector<std::string>& steps,
                           HistoryMode mode) {
  if (steps.empty() || mode == HistoryMode::kNone) return "none.";
  if (mode == HistoryMode::kLast) {
    return "Step " + std::to_string(steps.size()) + ". " + steps.back() + ".";
  }
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) out += " ";
    out += "Step " + std::to_string(i + 1) + ". " + steps[i] + ".";
  }
  return out;
}

const InContextExample& default_example() {
  static const InContextExample kExample = {
      "Instruction: Walk towards the mirror and walk through the open door. "
      "Observation: [A. stop, B. go forward to <a bedroom with a bed>, "
      "C. turn right to <an open door leading to a hallway>]. "
      "History: Step 1. go forward to <a wall with a mirror>.",
      "Imagination: open door. Filtered observation: C matches the "
      "imagination. Action: C."};
  return kExample;
}

std::string example_option_letters(const InContextExample& ex) {
  std::string letters;
  const auto open = ex.input_block.find('[');
  const auto close = ex.input_block.find(']', open);
  if (open == std::string::npos || close == std::string::npos) return letters;
  // Labels look like "A. " at the list start or after ", ".
  for (std::size_t i = open + 1; i + 1 < close; ++i) {
    const bool at_start = i == open + 1;
    const bool after_sep = i >= 2 && ex.input_block[i - 2] == ',' &&
                           ex.input_block[i - 1] == ' ';
    if ((at_start || after_sep) &&
        std::isupper(static_cast<unsigned char>(ex.input_block[i])) &&
        ex.input_block[i + 1] == '.') {
      letters.push_back(ex.input_block[i]);
    }
  }
  return letters;
}

void validate_example(const InContextExample& ex) {
  const auto letters = example_option_letters(ex);
  if (letters.empty()) {
    throw InvalidConfig("example input block has no observation options");
  }
  try {
    parse_cot(ex.output_block, letters, ParseMode::kLenient);
  } catch (const MalformedOutput& e) {
    throw InvalidConfig(std::string("example output block does not parse: ") +
                        e.what());
  }
}

std::string render_input_block(const NavInput& nav) {
  std::string s = "Instruction: " + nav.instruction + " Observation: [";
  for (std::size_t i = 0; i < nav.observations.options.size(); ++i) {
    const auto& opt = nav.observations.options[i];
    if (i > 0) s += ", ";
    s += opt.option_label;
    s += ". ";
    s += opt.text;
  }
  s += "]. History: " + nav.history;
  return s;
}

std::string render_prompt(const InContextExample& ex, const NavInput& nav) {
  if (nav.observations.options.empty()) {
    throw InvalidConfig("render_prompt: empty observation set");
  }
  std::string s = "Input: " + ex.input_block + "\n";
  s += "Output: " + ex.output_block + "\n";
  s += "Input: " + render_input_block(nav) + "\n";
  s += "Output:";
  return s;
}

}  // namespace navcot
