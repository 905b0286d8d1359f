#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "navcot/graph.hpp"

namespace navcot {

// One instruction-following task: follow `instruction` from the first to the
// last viewpoint of `gt_path`.
struct Episode {
  std::string id;
  std::string scan;
  std::string instruction;
  std::vector<std::string> gt_path;
  // The agent's initial heading is unspecified by the protocol; optional
  // per-episode override, default 0.
  double start_heading_deg = 0.0;
};

struct Trajectory {
  std::vector<std::string> visited;
  bool stopped = false;
};

// Validates non-empty gt_path with graph-adjacent consecutive entries.
void validate_episode(const Episode& ep, const NavGraph& g);

// Episode file: JSON Lines, one {"id","scan","instruction","gt_path":[ids]}
// per line, plus the optional "start_heading" field.
std::vector<Episode> load_episodes(const std::filesystem::path& path);
void save_episodes(const std::vector<Episode>& episodes,
                   const std::filesystem::path& path);

// One caption per directed navigable edge: the view seen when facing
// neighbor `to` from `from`.
class CaptionTable {
 public:
  void put(const std::string& scan, const std::string& from,
           const std::string& to, const std::string& caption);

  // Throws MissingCaption naming the edge.
  const std::string& get(const std::string& scan, const std::string& from,
                         const std::string& to) const;

  bool has(const std::string& scan, const std::string& from,
           const std::string& to) const;

  std::size_t size() const { return captions_.size(); }

  // Rows in deterministic (scan, from, to) order.
  std::vector<std::tuple<std::string, std::string, std::string, std::string>>
  rows() const;

 private:
  std::map<std::tuple<std::string, std::string, std::string>, std::string>
      captions_;
};

// Caption table file: JSON Lines
// {"scan","from_viewpoint","to_viewpoint","caption"}.
CaptionTable load_captions(const std::filesystem::path& path);
void save_captions(const CaptionTable& table,
                   const std::filesystem::path& path);

}  // namespace navcot
