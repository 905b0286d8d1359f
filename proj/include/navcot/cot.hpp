#pragma once

#include <string>

namespace navcot {

// Parsed three-part reasoning record: imagination text, filtered option
// letter, action option letter.
struct CoTOutput {
  std::string imagination;
  char filtered_option = 'A';
  char action = 'A';

  friend bool operator==(const CoTOutput& a, const CoTOutput& b) {
    return a.imagination == b.imagination &&
           a.filtered_option == b.filtered_option && a.action == b.action;
  }
};

// Canonical rendering:
// "Imagination: {U}. Filtered observation: {V} matches the imagination.
//  Action: {a}."
std::string format_cot(const CoTOutput& c);

enum class ParseMode {
  // Tolerates keyword case, surrounding whitespace, a missing final period,
  // and a missing imagination or filtered clause (the filtered option falls
  // back to the action letter). Used for live inference.
  kLenient,
  // Exact canonical template only. Used for label validation.
  kStrict,
};

// Extracts the three fields from a raw completion. `valid_options` is the
// step's option letter set, e.g. "ABC". The action letter is read from the
// last "Action:" clause. Throws MalformedOutput (carrying the raw text) when
// no action clause parses or its letter is outside `valid_options`. Never
// crashes on arbitrary byte input.
CoTOutput parse_cot(const std::string& raw, const std::string& valid_options,
                    ParseMode mode = ParseMode::kLenient);

}  // namespace navcot
