#include "navcot/geometry.hpp"

#include <numbers>

#include "navcot/errors.hpp"

namespace navcot {

namespace {
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kEps = 1e-12;
}  // namespace

double euclidean_distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double normalize_heading(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  return r;
}

double normalize_signed(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r > 180.0) r -= 360.0;
  if (r <= -180.0) r += 360.0;
  return r;
}

double bearing_deg(const Vec3& from, const Vec3& to) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  if (std::abs(dx) < kEps && std::abs(dy) < kEps) return 0.0;
  // Heading 0 = +y, clockwise from above: angle measured from +y toward +x.
  return normalize_heading(std::atan2(dx, dy) * kRadToDeg);
}

RelativeDirection relative_direction(const Vec3& from, const Pose& pose,
                                     const Vec3& to) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double dz = to.z - from.z;
  const double horizontal = std::sqrt(dx * dx + dy * dy);
  if (horizontal < kEps && std::abs(dz) < kEps) {
    throw DegeneratePositions("relative_direction: identical positions");
  }

  RelativeDirection rel;
  if (horizontal < kEps) {
    // Straight up or down; heading change is meaningless, report none.
    rel.delta_heading_deg = 0.0;
    rel.delta_elevation_deg = dz > 0.0 ? 90.0 : -90.0;
    return rel;
  }
  rel.delta_heading_deg =
      normalize_signed(bearing_deg(from, to) - pose.heading_deg);
  rel.delta_elevation_deg = std::atan2(dz, horizontal) * kRadToDeg;
  return rel;
}

}  // namespace navcot
