#include "navcot/episode.hpp"

#include "navcot/errors.hpp"
#include "navcot/jsonl.hpp"

namespace navcot {

void validate_episode(const Episode& ep, const NavGraph& g) {
  if (ep.gt_path.empty()) {
    throw GraphInvariantError("episode " + ep.id + ": empty gt_path");
  }
  for (const auto& vp : ep.gt_path) {
    if (!g.contains(vp)) {
      throw UnknownViewpoint("episode " + ep.id + ": unknown viewpoint " + vp);
    }
  }
  for (std::size_t i = 0; i + 1 < ep.gt_path.size(); ++i) {
    if (!g.adjacent(ep.gt_path[i], ep.gt_path[i + 1])) {
      throw GraphInvariantError("episode " + ep.id + ": gt_path entries " +
                                ep.gt_path[i] + " and " + ep.gt_path[i + 1] +
                                " are not adjacent");
    }
  }
}

std::vector<Episode> load_episodes(const std::filesystem::path& path) {
  std::vector<Episode> episodes;
  for (const auto& row : read_jsonl(path)) {
    try {
      Episode ep;
      ep.id = row.at("id").get<std::string>();
      ep.scan = row.at("scan").get<std::string>();
      ep.instruction = row.at("instruction").get<std::string>();
      ep.gt_path = row.at("gt_path").get<std::vector<std::string>>();
      if (row.contains("start_heading")) {
        ep.start_heading_deg = row.at("start_heading").get<double>();
      }
      if (ep.gt_path.empty()) {
        throw ParseError(path.string() + ": episode " + ep.id +
                         " has empty gt_path");
      }
      episodes.push_back(std::move(ep));
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": bad episode row: " + e.what());
    }
  }
  return episodes;
}

void save_episodes(const std::vector<Episode>& episodes,
                   const std::filesystem::path& path) {
  std::vector<json> rows;
  rows.reserve(episodes.size());
  for (const auto& ep : episodes) {
    json row = {{"id", ep.id},
                {"scan", ep.scan},
                {"instruction", ep.instruction},
                {"gt_path", ep.gt_path}};
    if (ep.start_heading_deg != 0.0) {
      row["start_heading"] = ep.start_heading_deg;
    }
    rows.push_back(std::move(row));
  }
  write_jsonl(path, rows);
}

void CaptionTable::put(const std::string& scan, const std::string& from,
                       const std::string& to, const std::string& caption) {
  captions_[{scan, from, to}] = caption;
}

const std::string& CaptionTable::get(const std::string& scan,
                                     const std::string& from,
                                     const std::string& to) const {
  auto it = captions_.find({scan, from, to});
  if (it == captions_.end()) {
    throw MissingCaption("no caption for scan " + scan + " edge " + from +
                         " -> " + to);
  }
  return it->second;
}

bool CaptionTable::has(const std::string& scan, const std::string& from,
                       const std::string& to) const {
  return captions_.count({scan, from, to}) > 0;
}

std::vector<std::tuple<std::string, std::string, std::string, std::string>>
CaptionTable::rows() const {
  std::vector<std::tuple<std::string, std::string, std::string, std::string>>
      out;
  out.reserve(captions_.size());
  for (const auto& [key, caption] : captions_) {
    out.emplace_back(std::get<0>(key), std::get<1>(key), std::get<2>(key),
                     caption);
  }
  return out;
}

CaptionTable load_captions(const std::filesystem::path& path) {
  CaptionTable table;
  for (const auto& row : read_jsonl(path)) {
    try {
      table.put(row.at("scan").get<std::string>(),
                row.at("from_viewpoint").get<std::string>(),
                row.at("to_viewpoint").get<std::string>(),
                row.at("caption").get<std::string>());
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": bad caption row: " + e.what());
    }
  }
  return table;
}

void save_captions(const CaptionTable& table,
                   const std::filesystem::path& path) {
  std::vector<json> rows;
  for (const auto& [scan, from, to, caption] : table.rows()) {
    rows.push_back({{"scan", scan},
                    {"from_viewpoint", from},
                    {"to_viewpoint", to},
                    {"caption", caption}});
  }
  write_jsonl(path, rows);
}

}  // namespace navcot
