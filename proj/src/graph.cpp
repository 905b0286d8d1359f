#include "navcot/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>

#include "navcot/errors.hpp"
#include "navcot/jsonl.hpp"

namespace navcot {

NavGraph::NavGraph(std::vector<Viewpoint> viewpoints,
                   std::vector<std::pair<std::string, std::string>> edges)
    : viewpoints_(std::move(viewpoints)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < viewpoints_.size(); ++i) {
    const auto& vp = viewpoints_[i];
    if (vp.id.empty()) throw GraphInvariantError("empty viewpoint id");
    if (!std::isfinite(vp.position.x) || !std::isfinite(vp.position.y) ||
        !std::isfinite(vp.position.z)) {
      throw GraphInvariantError("non-finite position for viewpoint " + vp.id);
    }
    if (!index_.emplace(vp.id, i).second) {
      throw GraphInvariantError("duplicate viewpoint id " + vp.id);
    }
  }

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [a, b] : edges_) {
    if (!index_.count(a) || !index_.count(b)) {
      throw GraphInvariantError("edge references unknown viewpoint: " + a +
                                " -- " + b);
    }
    if (a == b) throw GraphInvariantError("self-loop at " + a);
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!seen.insert(key).second) continue;  // ignore duplicate edge rows
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& [id, nbrs] : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }

  // Connectivity check (BFS from the first viewpoint).
  if (!viewpoints_.empty()) {
    std::set<std::string> visited;
    std::queue<std::string> frontier;
    frontier.push(viewpoints_.front().id);
    visited.insert(viewpoints_.front().id);
    while (!frontier.empty()) {
      auto cur = frontier.front();
      frontier.pop();
      auto it = adjacency_.find(cur);
      if (it == adjacency_.end()) continue;
      for (const auto& n : it->second) {
        if (visited.insert(n).second) frontier.push(n);
      }
    }
    if (visited.size() != viewpoints_.size()) {
      throw GraphInvariantError(
          "graph is disconnected: " + std::to_string(visited.size()) + " of " +
          std::to_string(viewpoints_.size()) + " viewpoints reachable");
    }
  }
}

bool NavGraph::contains(const std::string& id) const {
  return index_.count(id) > 0;
}

const Viewpoint& NavGraph::viewpoint(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownViewpoint("unknown viewpoint " + id);
  return viewpoints_[it->second];
}

const std::vector<std::string>& NavGraph::neighbors(
    const std::string& id) const {
  if (!contains(id)) throw UnknownViewpoint("unknown viewpoint " + id);
  static const std::vector<std::string> kEmpty;
  auto it = adjacency_.find(id);
  return it == adjacency_.end() ? kEmpty : it->second;
}

double NavGraph::edge_weight(const std::string& a, const std::string& b) const {
  if (!adjacent(a, b)) {
    throw GraphInvariantError("no edge between " + a + " and " + b);
  }
  return euclidean_distance(viewpoint(a).position, viewpoint(b).position);
}

bool NavGraph::adjacent(const std::string& a, const std::string& b) const {
  const auto& nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

NavGraph load_graph(const std::filesystem::path& graph_file) {
  const json doc = read_json_file(graph_file);
  if (!doc.is_object() || !doc.contains("viewpoints") || !doc.contains("edges")) {
    throw ParseError(graph_file.string() +
                     ": expected object with \"viewpoints\" and \"edges\"");
  }
  std::vector<Viewpoint> vps;
  for (const auto& v : doc.at("viewpoints")) {
    try {
      vps.push_back(Viewpoint{v.at("id").get<std::string>(),
                              Vec3{v.at("x").get<double>(),
                                   v.at("y").get<double>(),
                                   v.at("z").get<double>()}});
    } catch (const json::exception& e) {
      throw ParseError(graph_file.string() + ": bad viewpoint entry: " +
                       e.what());
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError(graph_file.string() + ": edge must be [idA, idB]");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return NavGraph(std::move(vps), std::move(edges));
}

void save_graph(const NavGraph& g, const std::filesystem::path& graph_file) {
  json doc;
  doc["viewpoints"] = json::array();
  for (const auto& vp : g.viewpoints()) {
    doc["viewpoints"].push_back({{"id", vp.id},
                                 {"x", vp.position.x},
                                 {"y", vp.position.y},
                                 {"z", vp.position.z}});
  }
  doc["edges"] = json::array();
  for (const auto& [a, b] : g.edges()) {
    doc["edges"].push_back(json::array({a, b}));
  }
  write_json_file(graph_file, doc);
}

double euclidean_distance(const Viewpoint& a, const Viewpoint& b) {
  return euclidean_distance(a.position, b.position);
}

namespace {

// Dijkstra from `source`; returns distance map (and predecessors if asked).
std::unordered_map<std::string, double> dijkstra(
    const NavGraph& g, const std::string& source,
    std::unordered_map<std::string, std::string>* predecessors = nullptr) {
  std::unordered_map<std::string, double> dist;
  dist[source] = 0.0;
  using Entry = std::pair<double, std::string>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  pq.emplace(0.0, source);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    auto it = dist.find(u);
    if (it != dist.end() && d > it->second) continue;
    for (const auto& v : g.neighbors(u)) {
      const double w = g.edge_weight(u, v);
      const double nd = d + w;
      auto dit = dist.find(v);
      if (dit == dist.end() || nd < dit->second) {
        dist[v] = nd;
        if (predecessors) (*predecessors)[v] = u;
        pq.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace

double geodesic_distance(const NavGraph& g, const std::string& a,
                         const std::string& b) {
  if (!g.contains(a)) throw UnknownViewpoint("unknown viewpoint " + a);
  if (!g.contains(b)) throw UnknownViewpoint("unknown viewpoint " + b);
  if (a == b) return 0.0;
  const auto dist = dijkstra(g, a);
  auto it = dist.find(b);
  if (it == dist.end()) {
    // Cannot happen on a validated graph; guards hand-built instances.
    throw GraphInvariantError("no path from " + a + " to " + b);
  }
  return it->second;
}

std::vector<std::string> shortest_path(const NavGraph& g, const std::string& a,
                                       const std::string& b) {
  if (!g.contains(a)) throw UnknownViewpoint("unknown viewpoint " + a);
  if (!g.contains(b)) throw UnknownViewpoint("unknown viewpoint " + b);
  if (a == b) return {a};
  std::unordered_map<std::string, std::string> pred;
  const auto dist = dijkstra(g, a, &pred);
  if (!dist.count(b)) {
    throw GraphInvariantError("no path from " + a + " to " + b);
  }
  std::vector<std::string> path{b};
  while (path.back() != a) path.push_back(pred.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

void GraphSet::add(const std::string& scan, NavGraph graph) {
  graphs_.insert_or_assign(scan, std::move(graph));
}

const NavGraph& GraphSet::for_scan(const std::string& scan) const {
  auto it = graphs_.find(scan);
  if (it == graphs_.end()) {
    throw EnvironmentGap("no graph registered for scan " + scan);
  }
  return it->second;
}

double GeodesicEngine::distance(const std::string& a,
                                const std::string& b) const {
  if (a == b) {
    if (!graph_->contains(a)) throw UnknownViewpoint("unknown viewpoint " + a);
    return 0.0;
  }
  const auto& from_a = source_map(a);
  auto it = from_a.find(b);
  if (it == from_a.end()) {
    if (!graph_->contains(b)) throw UnknownViewpoint("unknown viewpoint " + b);
    throw GraphInvariantError("no path from " + a + " to " + b);
  }
  return it->second;
}

const std::unordered_map<std::string, double>& GeodesicEngine::source_map(
    const std::string& source) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(source);
  if (it != cache_.end()) return it->second;
  if (!graph_->contains(source)) {
    throw UnknownViewpoint("unknown viewpoint " + source);
  }
  return cache_.emplace(source, dijkstra(*graph_, source)).first->second;
}

}  // namespace navcot
