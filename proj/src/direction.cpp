#include "navcot/direction.hpp"

#include <array>
#include <cmath>

namespace navcot {

const std::string& to_string(DirectionPhrase phrase) {
  static const std::array<std::string, 6> kPhrases = {
      "go forward", "turn left", "turn right", "turn around", "go up",
      "go down"};
  return kPhrases[static_cast<std::size_t>(phrase)];
}

DirectionPhrase map_direction(double delta_heading_deg,
                              double delta_elevation_deg,
                              const DirectionBins& bins) {
  if (delta_elevation_deg > bins.elevation_up) return DirectionPhrase::kGoUp;
  if (delta_elevation_deg < bins.elevation_down) {
    return DirectionPhrase::kGoDown;
  }
  const double h = delta_heading_deg;
  if (std::abs(h) <= bins.forward_half) return DirectionPhrase::kGoForward;
  if (h > bins.forward_half && h <= bins.side_limit) {
    return DirectionPhrase::kTurnRight;
  }
  if (h < -bins.forward_half && h >= -bins.side_limit) {
    return DirectionPhrase::kTurnLeft;
  }
  return DirectionPhrase::kTurnAround;
}

}  // namespace navcot
