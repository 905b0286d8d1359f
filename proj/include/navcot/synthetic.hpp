#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "navcot/episode.hpp"
#include "navcot/graph.hpp"

namespace navcot {

struct SyntheticWorldConfig {
  std::uint64_t seed = 1;
  int n_viewpoints = 10;
  // Target average degree of the viewpoint graph.
  int branching = 3;
  int n_episodes = 10;
};

// A desk-scale world with the answers planted: every viewpoint carries a
// unique two-word landmark, every directed edge caption embeds exactly the
// destination's landmark, and every instruction names the landmarks along
// its gt_path in order. Ground-truth labels are therefore derivable without
// any external model.
struct SyntheticWorld {
  std::string scan;
  NavGraph graph;
  CaptionTable captions;
  std::vector<Episode> episodes;
  // Landmarks mentioned by each instruction, in path order (the extraction
  // cache for this world).
  std::map<std::string, std::vector<std::string>> landmarks_by_episode;
  // Landmark planted at each viewpoint; tests use this to check labels.
  std::map<std::string, std::string> landmark_by_viewpoint;
};

// Pure function of its config; identical config gives bit-identical output.
// Throws InvalidConfig (n_viewpoints < 2, branching < 1, vocabulary
// exhausted, or n_episodes < 1).
SyntheticWorld gen_synthetic_world(const SyntheticWorldConfig& cfg);

}  // namespace navcot
