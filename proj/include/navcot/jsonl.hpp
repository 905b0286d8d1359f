#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "navcot/errors.hpp"

namespace navcot {

using json = nlohmann::json;

// Reads a JSON Lines file, one object per non-empty line.
inline std::vector<json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<json> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      rows.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " +
                       e.what());
    }
  }
  return rows;
}

// Writes JSON Lines with LF endings; keys come out in nlohmann's sorted
// order, which keeps reruns byte-identical.
inline void write_jsonl(const std::filesystem::path& path,
                        const std::vector<json>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& row : rows) {
    out << row.dump() << "\n";
  }
  if (!out) throw IoError("write failed: " + path.string());
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline void write_json_file(const std::filesystem::path& path, const json& j,
                            int indent = 2) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(indent) << "\n";
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace navcot
