#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "navcot/errors.hpp"
#include "navcot/geometry.hpp"
#include "navcot/rng.hpp"

using namespace navcot;

TEST_CASE("euclidean distance basics") {
  CHECK(euclidean_distance(Vec3{1, 2, 3}, Vec3{1, 2, 3}) == 0.0);
  CHECK(euclidean_distance(Vec3{0, 0, 0}, Vec3{3, 4, 0}) == doctest::Approx(5.0));
}

TEST_CASE("euclidean distance matches component-square oracle on random pairs") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-5, 5)};
    const Vec3 b{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(-5, 5)};
    const double expect = std::sqrt((a.x - b.x) * (a.x - b.x) +
                                    (a.y - b.y) * (a.y - b.y) +
                                    (a.z - b.z) * (a.z - b.z));
    CHECK(euclidean_distance(a, b) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
  }
}

TEST_CASE("angle normalization") {
  CHECK(normalize_heading(-90.0) == doctest::Approx(270.0));
  CHECK(normalize_heading(720.0) == doctest::Approx(0.0));
  CHECK(normalize_signed(190.0) == doctest::Approx(-170.0));
  CHECK(normalize_signed(180.0) == doctest::Approx(180.0));
  CHECK(normalize_signed(-180.0) == doctest::Approx(180.0));
}

TEST_CASE("relative direction: dead ahead and level") {
  // Heading 0 faces +y.
  const auto rel =
      relative_direction(Vec3{0, 0, 0}, Pose{0.0, 0.0}, Vec3{0, 5, 0});
  CHECK(rel.delta_heading_deg == doctest::Approx(0.0));
  CHECK(rel.delta_elevation_deg == doctest::Approx(0.0));
}

TEST_CASE("relative direction: same height gives zero elevation") {
  const auto rel =
      relative_direction(Vec3{1, 1, 2}, Pose{33.0, 0.0}, Vec3{4, -2, 2});
  CHECK(rel.delta_elevation_deg == doctest::Approx(0.0));
}

TEST_CASE("relative direction rejects identical positions") {
  CHECK_THROWS_AS(
      relative_direction(Vec3{1, 2, 3}, Pose{0, 0}, Vec3{1, 2, 3}),
      DegeneratePositions);
}

TEST_CASE("relative direction matches independent trig oracle") {
  Rng rng(4242);
  for (int i = 0; i < 500; ++i) {
    const Vec3 from{rng.uniform(-20, 20), rng.uniform(-20, 20),
                    rng.uniform(-3, 3)};
    Vec3 to{rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-3, 3)};
    if (std::abs(to.x - from.x) < 1e-6 && std::abs(to.y - from.y) < 1e-6) {
      to.x += 1.0;
    }
    const double heading = rng.uniform(0, 360);

    const auto rel = relative_direction(from, Pose{heading, 0.0}, to);

    // Oracle: rotate the displacement into the agent frame and read angles
    // from the rotated components directly.
    const double rad = heading * M_PI / 180.0;
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    // Agent frame: forward = (sin h, cos h), right = (cos h, -sin h).
    const double fwd = dx * std::sin(rad) + dy * std::cos(rad);
    const double right = dx * std::cos(rad) - dy * std::sin(rad);
    const double expect_dh = std::atan2(right, fwd) * 180.0 / M_PI;
    const double horiz = std::hypot(dx, dy);
    const double expect_de =
        std::atan2(to.z - from.z, horiz) * 180.0 / M_PI;

    CHECK(rel.delta_heading_deg ==
          doctest::Approx(expect_dh).epsilon(1e-9));
    CHECK(rel.delta_elevation_deg ==
          doctest::Approx(expect_de).epsilon(1e-9));
    CHECK(rel.delta_heading_deg > -180.0);
    CHECK(rel.delta_heading_deg <= 180.0);
  }
}

TEST_CASE("straight up maps to +90 elevation") {
  const auto rel =
      relative_direction(Vec3{0, 0, 0}, Pose{10, 0}, Vec3{0, 0, 5});
  CHECK(rel.delta_elevation_deg == doctest::Approx(90.0));
  CHECK(rel.delta_heading_deg == doctest::Approx(0.0));
}
