#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "navcot/geometry.hpp"

namespace navcot {

struct Viewpoint {
  std::string id;
  Vec3 position;
};

// Weighted viewpoint graph: the world the agent moves through. Immutable
// after construction; edge weight is always the Euclidean distance between
// endpoint positions, recomputed from positions rather than trusted from
// input files.
class NavGraph {
 public:
  NavGraph() = default;

  // Builds and validates: unique finite-position viewpoints, edges between
  // existing distinct ids, connected graph. Throws GraphInvariantError.
  NavGraph(std::vector<Viewpoint> viewpoints,
           std::vector<std::pair<std::string, std::string>> edges);

  const std::vector<Viewpoint>& viewpoints() const { return viewpoints_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const {
    return edges_;
  }

  bool contains(const std::string& id) const;
  const Viewpoint& viewpoint(const std::string& id) const;

  // Neighbor ids in lexicographic order.
  const std::vector<std::string>& neighbors(const std::string& id) const;

  double edge_weight(const std::string& a, const std::string& b) const;
  bool adjacent(const std::string& a, const std::string& b) const;

  std::size_t size() const { return viewpoints_.size(); }

 private:
  std::vector<Viewpoint> viewpoints_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::vector<std::string>> adjacency_;
};

// Graph file format: {"viewpoints": [{"id","x","y","z"}...],
//                     "edges": [["idA","idB"]...]}.
NavGraph load_graph(const std::filesystem::path& graph_file);
void save_graph(const NavGraph& g, const std::filesystem::path& graph_file);

double euclidean_distance(const Viewpoint& a, const Viewpoint& b);

// Shortest-path distance over edge weights.
// Throws UnknownViewpoint for ids not in the graph.
double geodesic_distance(const NavGraph& g, const std::string& a,
                         const std::string& b);

// Shortest path between two viewpoints (inclusive of both endpoints).
std::vector<std::string> shortest_path(const NavGraph& g, const std::string& a,
                                       const std::string& b);

// Graphs keyed by scan id. Episodes name their scan; this resolves it.
class GraphSet {
 public:
  void add(const std::string& scan, NavGraph graph);
  // Throws EnvironmentGap when no graph is registered for the scan.
  const NavGraph& for_scan(const std::string& scan) const;
  std::size_t size() const { return graphs_.size(); }

 private:
  std::map<std::string, NavGraph> graphs_;
};

// Memoizes single-source shortest-path maps. Every metric shares one of
// these per graph; safe to query from concurrent episode evaluations.
class GeodesicEngine {
 public:
  explicit GeodesicEngine(const NavGraph& g) : graph_(&g) {}

  double distance(const std::string& a, const std::string& b) const;
  const NavGraph& graph() const { return *graph_; }

 private:
  const std::unordered_map<std::string, double>& source_map(
      const std::string& source) const;

  const NavGraph* graph_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string,
                             std::unordered_map<std::string, double>>
      cache_;
};

}  // namespace navcot
