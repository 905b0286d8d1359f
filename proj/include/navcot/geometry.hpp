#pragma once

#include <cmath>
#include <string>

namespace navcot {

// Positions are meters in a right-handed frame with +z up.
// Heading 0 points along +y and increases clockwise viewed from above,
// so heading 90 points along +x. One convention, used everywhere.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// Agent orientation. Heading in [0, 360), elevation in [-90, 90] degrees.
struct Pose {
  double heading_deg = 0.0;
  double elevation_deg = 0.0;
};

double euclidean_distance(const Vec3& a, const Vec3& b);

// Wraps any angle into [0, 360).
double normalize_heading(double deg);

// Wraps any angle into (-180, 180].
double normalize_signed(double deg);

// Compass bearing (degrees, [0, 360)) of the horizontal displacement from
// `from` to `to`. Returns 0 when the displacement is purely vertical.
double bearing_deg(const Vec3& from, const Vec3& to);

// Relative direction of `to` as seen from `from` under `pose`:
// delta_heading in (-180, 180] is the signed turn needed to face the target,
// delta_elevation is atan2(vertical offset, horizontal range) in degrees.
// Throws DegeneratePositions when the two positions coincide.
struct RelativeDirection {
  double delta_heading_deg = 0.0;
  double delta_elevation_deg = 0.0;
};

RelativeDirection relative_direction(const Vec3& from, const Pose& pose,
                                     const Vec3& to);

}  // namespace navcot
