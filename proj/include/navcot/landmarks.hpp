#pragma once

#include <string>
#include <vector>

namespace navcot {

// Ordered landmark mentions extracted from one instruction. Items are
// lowercased, trimmed, and deduplicated preserving first occurrence.
struct LandmarkList {
  std::string episode;
  std::vector<std::string> items;
};

// Extraction prompt: task line, the worked numbered-list example, then the
// query instruction. Golden-file stable for a fixed instruction.
std::string build_landmark_prompt(const std::string& instruction);

// Parses a numbered-list completion ("1.rug; 2.statue; 3.wooden table.").
// Accepts ';' or newline separators, optional "k." / "k)" prefixes, and an
// optional leading "Landmarks:" echo; "none" counts as empty. Throws
// MalformedLandmarks when non-empty text yields no item.
std::vector<std::string> parse_landmark_list(const std::string& completion);

// Lowercase word sequence; the unit every landmark comparison uses.
std::vector<std::string> words_of(const std::string& text);

// Whether `landmark`'s words occur contiguously in `text` (word-boundary
// containment, case-insensitive).
bool landmark_in_text(const std::string& landmark, const std::string& text);

}  // namespace navcot
