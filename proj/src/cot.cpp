#include "navcot/cot.hpp"

#include <algorithm>
#include <cctype>

#include "navcot/errors.hpp"

namespace navcot {

namespace {

const std::string kImaginationKey = "imagination:";
const std::string kFilteredKey = "filtered observation:";
const std::string kActionKey = "action:";
const std::string kFilteredTail = " matches the imagination. Action: ";

char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Case-insensitive find; npos when absent.
std::size_t ifind(const std::string& haystack, const std::string& needle,
                  std::size_t from) {
  if (needle.empty() || haystack.size() < needle.size()) {
    return std::string::npos;
  }
  for (std::size_t i = from; i + needle.size() <= haystack.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (lower(haystack[i + j]) != lower(needle[j])) {
        match = false;
        break;
      }
    }
    if (match) return i;
  }
  return std::string::npos;
}

std::size_t ifind_last(const std::string& haystack, const std::string& needle) {
  std::size_t best = std::string::npos;
  std::size_t at = 0;
  while (true) {
    const auto pos = ifind(haystack, needle, at);
    if (pos == std::string::npos) return best;
    best = pos;
    at = pos + 1;
  }
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// First alphabetic character after `pos`, skipping spaces; '\0' when the
// next non-space character is not a letter.
char letter_after(const std::string& s, std::size_t pos) {
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (is_space(s[i])) continue;
    if (std::isalpha(static_cast<unsigned char>(s[i]))) {
      return static_cast<char>(
          std::toupper(static_cast<unsigned char>(s[i])));
    }
    return '\0';
  }
  return '\0';
}

bool option_valid(char letter, const std::string& valid_options) {
  return letter != '\0' &&
         valid_options.find(letter) != std::string::npos;
}

CoTOutput parse_strict(const std::string& raw,
                       const std::string& valid_options) {
  const std::string prefix = "Imagination: ";
  const std::string mid = ". Filtered observation: ";
  if (raw.rfind(prefix, 0) != 0) {
    throw MalformedOutput("strict: missing Imagination clause", raw);
  }
  const auto mid_pos = raw.find(mid, prefix.size());
  if (mid_pos == std::string::npos) {
    throw MalformedOutput("strict: missing Filtered observation clause", raw);
  }
  CoTOutput out;
  out.imagination = raw.substr(prefix.size(), mid_pos - prefix.size());
  std::size_t at = mid_pos + mid.size();
  if (at >= raw.size() || !std::isupper(static_cast<unsigned char>(raw[at]))) {
    throw MalformedOutput("strict: missing filtered option letter", raw);
  }
  out.filtered_option = raw[at];
  ++at;
  if (raw.compare(at, kFilteredTail.size(), kFilteredTail) != 0) {
    throw MalformedOutput("strict: malformed filtered clause", raw);
  }
  at += kFilteredTail.size();
  if (at >= raw.size() || !std::isupper(static_cast<unsigned char>(raw[at]))) {
    throw MalformedOutput("strict: missing action letter", raw);
  }
  out.action = raw[at];
  ++at;
  if (at + 1 != raw.size() || raw[at] != '.') {
    throw MalformedOutput("strict: trailing content after action", raw);
  }
  if (!option_valid(out.filtered_option, valid_options)) {
    throw MalformedOutput("strict: filtered option outside valid set", raw);
  }
  if (!option_valid(out.action, valid_options)) {
    throw MalformedOutput("strict: action outside valid set", raw);
  }
  return out;
}

}  // namespace

std::string format_cot(const CoTOutput& c) {
  std::string s = "Imagination: ";
  s += c.imagination;
  s += ". Filtered observation: ";
  s += c.filtered_option;
  s += " matches the imagination. Action: ";
  s += c.action;
  s += ".";
  return s;
}

CoTOutput parse_cot(const std::string& raw, const std::string& valid_options,
                    ParseMode mode) {
  if (mode == ParseMode::kStrict) return parse_strict(raw, valid_options);

  const std::string s = trim(raw);
  const auto pos_i = ifind(s, kImaginationKey, 0);
  const auto pos_f =
      ifind(s, kFilteredKey,
            pos_i == std::string::npos ? 0 : pos_i + kImaginationKey.size());
  const auto pos_a = ifind_last(s, kActionKey);
  if (pos_a == std::string::npos) {
    throw MalformedOutput("no action clause in completion", raw);
  }

  CoTOutput out;
  out.action = letter_after(s, pos_a + kActionKey.size());
  if (!option_valid(out.action, valid_options)) {
    throw MalformedOutput(std::string("action letter '") +
                              (out.action ? std::string(1, out.action)
                                          : std::string("?")) +
                              "' outside valid options " + valid_options,
                          raw);
  }

  if (pos_i != std::string::npos) {
    auto end = s.size();
    if (pos_f != std::string::npos && pos_f > pos_i) end = std::min(end, pos_f);
    if (pos_a > pos_i) end = std::min(end, pos_a);
    auto text = trim(s.substr(pos_i + kImaginationKey.size(),
                              end - pos_i - kImaginationKey.size()));
    if (!text.empty() && text.back() == '.') text.pop_back();
    out.imagination = trim(text);
  }

  out.filtered_option = out.action;  // fallback when the clause is absent
  if (pos_f != std::string::npos) {
    const char v = letter_after(s, pos_f + kFilteredKey.size());
    if (option_valid(v, valid_options)) out.filtered_option = v;
  }
  return out;
}

}  // namespace navcot
