#include "navcot/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "navcot/errors.hpp"
#include "navcot/rng.hpp"

namespace navcot {

namespace {

// Landmark vocabulary. Each viewpoint gets one "adjective noun" pair; the
// words below never appear in caption or instruction filler text, so a
// landmark matches a caption only where it was planted.
const std::vector<std::string> kAdjectives = {
    "red",    "blue",   "green",  "yellow", "purple", "orange",
    "white",  "black",  "silver", "golden", "wooden", "marble",
    "velvet", "wicker", "copper", "ivory"};

const std::vector<std::string> kNouns = {
    "sofa",   "table", "lamp",    "mirror",   "statue", "piano",
    "shelf",  "rug",   "armoire", "fountain", "easel",  "bench",
    "clock",  "vase",  "ladder",  "fireplace"};

const std::vector<std::string> kCaptionTemplates = {
    "a room with a ", "a doorway facing a ", "a corridor beside a "};

std::string viewpoint_id(int index) {
  std::ostringstream os;
  os << "vp";
  if (index < 10) os << "00";
  else if (index < 100) os << "0";
  os << index;
  return os.str();
}

std::string landmark_for(int index) {
  const auto a = static_cast<std::size_t>(index) / kNouns.size();
  const auto n = static_cast<std::size_t>(index) % kNouns.size();
  return kAdjectives[a] + " " + kNouns[n];
}

std::string caption_for(const std::string& from_id, const std::string& to_lm) {
  const auto t = fnv1a64(from_id + "|" + to_lm) % kCaptionTemplates.size();
  return kCaptionTemplates[t] + to_lm;
}

std::string instruction_for(const std::vector<std::string>& landmarks) {
  std::string s = "Walk to the " + landmarks.front();
  if (landmarks.size() == 1) return s + " and stop.";
  for (std::size_t i = 1; i + 1 < landmarks.size(); ++i) {
    s += ", then to the " + landmarks[i];
  }
  return s + ", and stop at the " + landmarks.back() + ".";
}

}  // namespace

SyntheticWorld gen_synthetic_world(const SyntheticWorldConfig& cfg) {
  if (cfg.n_viewpoints < 2) {
    throw InvalidConfig("n_viewpoints must be >= 2");
  }
  if (cfg.branching < 1) throw InvalidConfig("branching must be >= 1");
  if (cfg.n_episodes < 1) throw InvalidConfig("n_episodes must be >= 1");
  const int vocab_cap =
      static_cast<int>(kAdjectives.size() * kNouns.size());
  if (cfg.n_viewpoints > vocab_cap) {
    throw InvalidConfig("n_viewpoints exceeds landmark vocabulary (" +
                        std::to_string(vocab_cap) + ")");
  }

  Rng rng(splitmix64(cfg.seed));
  const int n = cfg.n_viewpoints;

  // Positions spread over a box that grows with n, keeping the 3m success
  // radius small relative to the world.
  const double side = 8.0 * std::sqrt(static_cast<double>(n));
  std::vector<Viewpoint> vps;
  vps.reserve(n);
  for (int i = 0; i < n; ++i) {
    vps.push_back(Viewpoint{viewpoint_id(i),
                            Vec3{rng.uniform(0.0, side), rng.uniform(0.0, side),
                                 rng.uniform(0.0, 2.5)}});
  }

  // Spanning tree over nearest already-placed viewpoint, then extra edges up
  // to the requested average degree.
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<int, int>> have;
  auto add_edge = [&](int a, int b) {
    if (a == b) return false;
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!have.insert(key).second) return false;
    edges.emplace_back(vps[key.first].id, vps[key.second].id);
    return true;
  };
  for (int i = 1; i < n; ++i) {
    int best = 0;
    double best_d = euclidean_distance(vps[i].position, vps[0].position);
    for (int j = 1; j < i; ++j) {
      const double d = euclidean_distance(vps[i].position, vps[j].position);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    add_edge(i, best);
  }
  const auto target_edges = static_cast<std::size_t>(
      std::max<long long>(n - 1, 1LL * n * cfg.branching / 2));
  int attempts = 0;
  while (edges.size() < target_edges && attempts < 50 * n) {
    ++attempts;
    const int a = static_cast<int>(rng.uniform_int(0, n - 1));
    const int b = static_cast<int>(rng.uniform_int(0, n - 1));
    add_edge(a, b);
  }

  SyntheticWorld world;
  world.scan = "syn-" + std::to_string(cfg.seed);
  world.graph = NavGraph(vps, edges);

  for (int i = 0; i < n; ++i) {
    world.landmark_by_viewpoint[vps[i].id] = landmark_for(i);
  }
  for (const auto& vp : world.graph.viewpoints()) {
    for (const auto& nbr : world.graph.neighbors(vp.id)) {
      world.captions.put(world.scan, vp.id, nbr,
                         caption_for(vp.id, world.landmark_by_viewpoint[nbr]));
    }
  }

  // Episodes: random starts, goals picked among far viewpoints when the
  // world allows it, gt_path = shortest path.
  for (int e = 0; e < cfg.n_episodes; ++e) {
    const auto& start = vps[rng.uniform_int(0, n - 1)].id;
    std::vector<std::string> far;
    std::vector<std::string> any;
    for (const auto& vp : world.graph.viewpoints()) {
      if (vp.id == start) continue;
      any.push_back(vp.id);
      const auto path = shortest_path(world.graph, start, vp.id);
      // Between 2 and 10 moves so every episode fits a standard step budget.
      if (path.size() >= 3 && path.size() <= 11 &&
          geodesic_distance(world.graph, start, vp.id) >= 6.0) {
        far.push_back(vp.id);
      }
    }
    const auto& goal = far.empty() ? rng.pick(any) : rng.pick(far);

    Episode ep;
    ep.id = world.scan + "-ep" + std::to_string(e);
    ep.scan = world.scan;
    ep.gt_path = shortest_path(world.graph, start, goal);

    std::vector<std::string> landmarks;
    for (std::size_t i = 1; i < ep.gt_path.size(); ++i) {
      landmarks.push_back(world.landmark_by_viewpoint[ep.gt_path[i]]);
    }
    ep.instruction = instruction_for(landmarks);
    world.landmarks_by_episode[ep.id] = std::move(landmarks);
    world.episodes.push_back(std::move(ep));
  }

  return world;
}

}  // namespace navcot
