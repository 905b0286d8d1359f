#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "navcot/direction.hpp"
#include "navcot/episode.hpp"
#include "navcot/graph.hpp"

namespace navcot {

// One labeled action option. Option A is always the stop token; the rest
// describe navigable neighbors.
struct ObservationDescription {
  char option_label = 'A';
  std::optional<DirectionPhrase> direction;  // absent for stop
  std::string caption;                       // empty for stop
  std::string text;                          // "stop" or rendered description
};

// The per-step action space: stop plus one description per neighbor,
// with the label -> neighbor mapping needed to apply an action.
struct ObservationSet {
  std::vector<ObservationDescription> options;
  std::map<char, std::string> neighbor_by_label;  // no entry for 'A'

  bool valid_label(char label) const;
  std::string valid_labels() const;  // e.g. "ABC"
};

struct ObservationOptions {
  DirectionBins bins;
  // When set, appends the raw angles to each description. Off by default:
  // coarse direction is the shipped behavior, fine direction exists to
  // reproduce its ablation.
  bool fine_direction = false;
};

// "<direction> to <<caption>>", e.g. "turn right to <an open door leading
// to a hallway>". Throws EmptyCaption.
std::string describe_observation(DirectionPhrase direction,
                                 const std::string& caption);

// Builds the labeled option list at `current`: option A = stop, neighbors
// sorted by ascending relative heading (ties by id), labeled B, C, ...
// Throws MissingCaption naming the edge.
ObservationSet build_observation_set(const NavGraph& g,
                                     const CaptionTable& captions,
                                     const std::string& scan,
                                     const std::string& current,
                                     const Pose& agent_pose,
                                     const ObservationOptions& opts = {});

}  // namespace navcot
