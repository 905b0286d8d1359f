#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "navcot/episode.hpp"
#include "navcot/graph.hpp"
#include "navcot/runtime.hpp"

namespace navcot {

// Success threshold and the normalization radius shared by every
// path-fidelity metric, meters.
inline constexpr double kSuccessThresholdMeters = 3.0;

// Sum of edge weights along the visited sequence.
double traj_length(const std::vector<std::string>& visited,
                   const NavGraph& g);

// Geodesic distance from the trajectory's endpoint to the goal.
double nav_error(const std::vector<std::string>& visited,
                 const std::string& goal, const GeodesicEngine& geo);

// 1 iff nav_error <= d_th (closed threshold).
int success(const std::vector<std::string>& visited, const std::string& goal,
            const GeodesicEngine& geo,
            double d_th = kSuccessThresholdMeters);

// 1 iff any visited viewpoint comes within d_th of the goal.
int oracle_success(const std::vector<std::string>& visited,
                   const std::string& goal, const GeodesicEngine& geo,
                   double d_th = kSuccessThresholdMeters);

// success * shortest / max(shortest, taken); 0 on failure, 1 when a success
// needed no travel at all.
double spl(int success_flag, double shortest_m, double taken_m);

// Minimum cumulative geodesic point-pair cost over monotone alignments of P
// against R (standard three-move recurrence).
double dtw(const std::vector<std::string>& p, const std::vector<std::string>& r,
           const GeodesicEngine& geo);

// exp(-DTW(P,R) / (|R| * d_th)).
double ndtw(const std::vector<std::string>& p,
            const std::vector<std::string>& r, const GeodesicEngine& geo,
            double d_th = kSuccessThresholdMeters);

// Coverage weighted by length score: PC * LS, where PC averages
// exp(-min-distance / d_th) over the reference and LS penalizes the length
// mismatch against the expected path length EPL = PC * length(R).
double cls(const std::vector<std::string>& p, const std::vector<std::string>& r,
           const NavGraph& g, const GeodesicEngine& geo,
           double d_th = kSuccessThresholdMeters);

double sdtw(int success_flag, double ndtw_value);

struct EpisodeMetrics {
  std::string episode;
  double tl = 0.0;
  double ne = 0.0;
  double sr = 0.0;
  double osr = 0.0;
  double spl = 0.0;
  double ndtw = 0.0;
  double cls = 0.0;
  double sdtw = 0.0;
};

struct MetricReport {
  double d_th = kSuccessThresholdMeters;
  std::size_t count = 0;
  EpisodeMetrics means;  // episode field unused
  std::vector<EpisodeMetrics> episodes;
  nlohmann::json config_echo;  // run parameters, backend descriptor, etc.
};

// Computes the full suite per episode plus arithmetic means. Throws
// MissingEpisode when a trace references an episode that was not supplied.
MetricReport evaluate(const std::vector<EpisodeResult>& results,
                      const std::vector<Episode>& episodes,
                      const GraphSet& graphs,
                      const nlohmann::json& config_echo = {});

nlohmann::json report_to_json(const MetricReport& report);
std::string report_to_text(const MetricReport& report);

}  // namespace navcot
