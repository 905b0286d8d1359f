#pragma once

#include <string>

namespace navcot {

// The six textual directions candidates are described with.
enum class DirectionPhrase {
  kGoForward,
  kTurnLeft,
  kTurnRight,
  kTurnAround,
  kGoUp,
  kGoDown,
};

const std::string& to_string(DirectionPhrase phrase);

// Angular bin boundaries, degrees. Defaults partition the circle
// symmetrically; boundary angles resolve to the clockwise-earlier bin.
struct DirectionBins {
  double elevation_up = 30.0;     // delta_elevation above this -> go up
  double elevation_down = -30.0;  // below this -> go down
  double forward_half = 45.0;     // |delta_heading| <= this -> go forward
  double side_limit = 135.0;      // beyond this -> turn around
};

// Total over delta_heading in (-180, 180] and any finite delta_elevation;
// elevation dominates, then the heading bins.
DirectionPhrase map_direction(double delta_heading_deg,
                              double delta_elevation_deg,
                              const DirectionBins& bins = {});

}  // namespace navcot
