#include "navcot/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "navcot/errors.hpp"

namespace navcot {

double traj_length(const std::vector<std::string>& visited,
                   const NavGraph& g) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < visited.size(); ++i) {
    total += g.edge_weight(visited[i], visited[i + 1]);
  }
  return total;
}

double nav_error(const std::vector<std::string>& visited,
                 const std::string& goal, const GeodesicEngine& geo) {
  if (visited.empty()) throw InvalidConfig("nav_error: empty trajectory");
  return geo.distance(visited.back(), goal);
}

int success(const std::vector<std::string>& visited, const std::string& goal,
            const GeodesicEngine& geo, double d_th) {
  return nav_error(visited, goal, geo) <= d_th ? 1 : 0;
}

int oracle_success(const std::vector<std::string>& visited,
                   const std::string& goal, const GeodesicEngine& geo,
                   double d_th) {
  for (const auto& vp : visited) {
    if (geo.distance(vp, goal) <= d_th) return 1;
  }
  return 0;
}

double spl(int success_flag, double shortest_m, double taken_m) {
  if (success_flag == 0) return 0.0;
  if (shortest_m == 0.0) return 1.0;
  return shortest_m / std::max(shortest_m, taken_m);
}

double dtw(const std::vector<std::string>& p, const std::vector<std::string>& r,
           const GeodesicEngine& geo) {
  if (p.empty() || r.empty()) throw InvalidConfig("dtw: empty path");
  const std::size_t n = p.size();
  const std::size_t m = r.size();
  std::vector<double> prev(m), curr(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double c = geo.distance(p[0], r[j]);
    prev[j] = c + (j == 0 ? 0.0 : prev[j - 1]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double c = geo.distance(p[i], r[j]);
      double best = prev[j];  // insertion: advance in P only
      if (j > 0) {
        best = std::min(best, curr[j - 1]);  // deletion: advance in R only
        best = std::min(best, prev[j - 1]);  // match: advance both
      }
      curr[j] = c + best;
    }
    std::swap(prev, curr);
  }
  return prev[m - 1];
}

double ndtw(const std::vector<std::string>& p,
            const std::vector<std::string>& r, const GeodesicEngine& geo,
            double d_th) {
  return std::exp(-dtw(p, r, geo) /
                  (static_cast<double>(r.size()) * d_th));
}

double cls(const std::vector<std::string>& p, const std::vector<std::string>& r,
           const NavGraph& g, const GeodesicEngine& geo, double d_th) {
  if (p.empty() || r.empty()) throw InvalidConfig("cls: empty path");
  double pc = 0.0;
  for (const auto& ref : r) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& pt : p) {
      nearest = std::min(nearest, geo.distance(ref, pt));
    }
    pc += std::exp(-nearest / d_th);
  }
  pc /= static_cast<double>(r.size());

  const double ref_len = traj_length(r, g);
  if (ref_len == 0.0) return pc;
  const double epl = pc * ref_len;
  const double taken = traj_length(p, g);
  const double ls = epl / (epl + std::abs(epl - taken));
  return pc * ls;
}

double sdtw(int success_flag, double ndtw_value) {
  return success_flag == 0 ? 0.0 : ndtw_value;
}

MetricReport evaluate(const std::vector<EpisodeResult>& results,
                      const std::vector<Episode>& episodes,
                      const GraphSet& graphs,
                      const nlohmann::json& config_echo) {
  std::map<std::string, const Episode*> by_id;
  for (const auto& ep : episodes) by_id[ep.id] = &ep;

  std::map<std::string, GeodesicEngine> engines;
  auto engine_for = [&](const std::string& scan) -> GeodesicEngine& {
    auto it = engines.find(scan);
    if (it != engines.end()) return it->second;
    return engines
        .emplace(std::piecewise_construct, std::forward_as_tuple(scan),
                 std::forward_as_tuple(graphs.for_scan(scan)))
        .first->second;
  };

  MetricReport report;
  report.config_echo = config_echo;
  for (const auto& result : results) {
    auto it = by_id.find(result.episode);
    if (it == by_id.end()) {
      throw MissingEpisode("trace references unknown episode " +
                           result.episode);
    }
    const Episode& ep = *it->second;
    const NavGraph& g = graphs.for_scan(ep.scan);
    const GeodesicEngine& geo = engine_for(ep.scan);
    const auto& visited = result.trajectory.visited;
    const auto& goal = ep.gt_path.back();

    EpisodeMetrics m;
    m.episode = ep.id;
    m.tl = traj_length(visited, g);
    m.ne = nav_error(visited, goal, geo);
    const int sr = success(visited, goal, geo, report.d_th);
    m.sr = sr;
    m.osr = oracle_success(visited, goal, geo, report.d_th);
    m.spl = spl(sr, geo.distance(ep.gt_path.front(), goal), m.tl);
    m.ndtw = ndtw(visited, ep.gt_path, geo, report.d_th);
    m.cls = cls(visited, ep.gt_path, g, geo, report.d_th);
    m.sdtw = sdtw(sr, m.ndtw);
    report.episodes.push_back(std::move(m));
  }

  report.count = report.episodes.size();
  if (report.count > 0) {
    for (const auto& m : report.episodes) {
      report.means.tl += m.tl;
      report.means.ne += m.ne;
      report.means.sr += m.sr;
      report.means.osr += m.osr;
      report.means.spl += m.spl;
      report.means.ndtw += m.ndtw;
      report.means.cls += m.cls;
      report.means.sdtw += m.sdtw;
    }
    const auto n = static_cast<double>(report.count);
    report.means.tl /= n;
    report.means.ne /= n;
    report.means.sr /= n;
    report.means.osr /= n;
    report.means.spl /= n;
    report.means.ndtw /= n;
    report.means.cls /= n;
    report.means.sdtw /= n;
  }
  return report;
}

namespace {

nlohmann::json metrics_to_json(const EpisodeMetrics& m, bool with_id) {
  nlohmann::json j = {{"tl", m.tl},     {"ne", m.ne},   {"sr", m.sr},
                      {"osr", m.osr},   {"spl", m.spl}, {"ndtw", m.ndtw},
                      {"cls", m.cls},   {"sdtw", m.sdtw}};
  if (with_id) j["id"] = m.episode;
  return j;
}

}  // namespace

nlohmann::json report_to_json(const MetricReport& report) {
  nlohmann::json j;
  j["config"] = report.config_echo.is_null() ? nlohmann::json::object()
                                             : report.config_echo;
  j["config"]["d_th"] = report.d_th;
  j["count"] = report.count;
  j["means"] = metrics_to_json(report.means, false);
  j["episodes"] = nlohmann::json::array();
  for (const auto& m : report.episodes) {
    j["episodes"].push_back(metrics_to_json(m, true));
  }
  return j;
}

std::string report_to_text(const MetricReport& report) {
  char line[256];
  std::string out;
  out += "episodes: " + std::to_string(report.count) + "  (d_th = " +
         std::to_string(report.d_th) + " m)\n";
  std::snprintf(line, sizeof(line), "%-28s %7s %7s %6s %6s %6s %6s %6s %6s\n",
                "episode", "TL", "NE", "SR", "OSR", "SPL", "nDTW", "CLS",
                "SDTW");
  out += line;
  for (const auto& m : report.episodes) {
    std::snprintf(line, sizeof(line),
                  "%-28s %7.2f %7.2f %6.2f %6.2f %6.2f %6.2f %6.2f %6.2f\n",
                  m.episode.c_str(), m.tl, m.ne, m.sr, m.osr, m.spl, m.ndtw,
                  m.cls, m.sdtw);
    out += line;
  }
  const auto& m = report.means;
  std::snprintf(line, sizeof(line),
                "%-28s %7.2f %7.2f %6.2f %6.2f %6.2f %6.2f %6.2f %6.2f\n",
                "mean", m.tl, m.ne, m.sr, m.osr, m.spl, m.ndtw, m.cls, m.sdtw);
  out += line;
  return out;
}

}  // namespace navcot
