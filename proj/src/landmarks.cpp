#include "navcot/landmarks.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "navcot/errors.hpp"

namespace navcot {

namespace {

std::string to_lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Strips a "12." / "12)" / "12:" list prefix if present.
std::string strip_number_prefix(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0 || i >= s.size()) return s;
  const char sep = s[i];
  if (sep != '.' && sep != ')' && sep != ':') return s;
  ++i;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

}  // namespace

std::string build_landmark_prompt(const std::string& instruction) {
  std::string p =
      "Extract the landmarks mentioned in the given navigation instruction "
      "as a numbered list.\n";
  p += "Instruction: Walk along the rug past the statue on the wooden "
       "table.\n";
  p += "Landmarks:\n1.rug;\n2.statue;\n3.wooden table.\n";
  p += "Instruction: " + instruction + "\n";
  p += "Landmarks:";
  return p;
}

std::vector<std::string> parse_landmark_list(const std::string& completion) {
  std::string body = trim(completion);
  if (body.empty()) return {};
  // Tolerate the model echoing the "Landmarks:" header.
  const std::string header = "landmarks:";
  if (to_lower(body).rfind(header, 0) == 0) {
    body = trim(body.substr(header.size()));
  }
  const std::string lowered = to_lower(body);
  if (body.empty() || lowered == "none" || lowered == "none.") return {};

  std::vector<std::string> items;
  std::set<std::string> seen;
  std::string piece;
  auto flush = [&] {
    std::string item = trim(strip_number_prefix(trim(piece)));
    piece.clear();
    if (!item.empty() && item.back() == '.') item.pop_back();
    item = to_lower(trim(item));
    if (item.empty()) return;
    if (seen.insert(item).second) items.push_back(item);
  };
  for (char c : body) {
    if (c == ';' || c == '\n' || c == '\r') {
      flush();
    } else {
      piece.push_back(c);
    }
  }
  flush();

  if (items.empty()) {
    throw MalformedLandmarks("no parsable landmark in completion: " +
                             completion);
  }
  return items;
}

std::vector<std::string> words_of(const std::string& text) {
  std::vector<std::string> words;
  std::string word;
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      word.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!word.empty()) {
      words.push_back(std::move(word));
      word.clear();
    }
  }
  if (!word.empty()) words.push_back(std::move(word));
  return words;
}

bool landmark_in_text(const std::string& landmark, const std::string& text) {
  const auto needle = words_of(landmark);
  const auto hay = words_of(text);
  if (needle.empty() || hay.size() < needle.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return true;
  }
  return false;
}

}  // namespace navcot
