#include "doctest.h"

#include "vacfocus/segments.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace vacfocus::segments;

namespace {
constexpr double kPi = std::numbers::pi;
const SegmentMirror kOrdered = SegmentMirror::make(0.5, 0.3, 1.0, 2.0);
}  // namespace

TEST_CASE("construction") {
  CHECK(kOrdered.table_ordering());
  CHECK_THROWS_AS(SegmentMirror::make(0.5, 0.3, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(SegmentMirror::make(3.0, 0.3, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(SegmentMirror::make(0.5, 1.5, 1.0, 2.0), std::invalid_argument);
  const auto v = vertices(kOrdered);
  CHECK(v[0].y == 0.0);
  CHECK(std::hypot(v[1].x, v[1].y) == doctest::Approx(1.0));
  CHECK(std::atan2(v[2].y, v[2].x) == doctest::Approx(2.0));
}

TEST_CASE("named bands of the six-case table") {
  CHECK(classify_incident(kOrdered, kPi - 2.0 + 0.3) == RayCount{0, 0, 0});
  CHECK(classify_incident(kOrdered, 0.5) == RayCount{1, 0, 0});
  CHECK(classify_incident(kOrdered, 1.0 + 0.6 - kPi + 0.2) == RayCount{1, 2, 0});
  const auto b = six_case_boundaries(kOrdered);
  CHECK(b.front() == doctest::Approx(-kPi));
  CHECK(b.back() == doctest::Approx(kPi));
  for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(b[i] < b[i + 1]);
}

TEST_CASE("six-case table agrees with the tracer inside every class") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mirrors = 0;
  while (mirrors < 30) {
    const double t2 = 0.5 + 2.4 * u(rng);
    const double t1 = t2 * (0.2 + 0.6 * u(rng));
    const double a1 = 0.05 + (kPi - t1 - 0.1) * u(rng);
    const double a2 = a1 - 0.45 * std::min(t1, t2 - t1) * u(rng);
    SegmentMirror m;
    try {
      m = SegmentMirror::make(a1, a2, t1, t2);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!m.table_ordering()) continue;
    ++mirrors;
    const auto b = six_case_boundaries(m);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      for (double f : {0.1, 0.5, 0.9}) {
        const double theta = b[i] + f * (b[i + 1] - b[i]);
        const auto expected = six_case_table(m, theta);
        REQUIRE(expected.has_value());
        CHECK(classify_incident(m, theta) == *expected);
      }
    }
  }
}

TEST_CASE("removed mirror") {
  const auto c = census(SegmentMirror::removed());
  CHECK(c.incident_only == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(c.total() == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(c.no_incident == 0.0);
}

TEST_CASE("single flat segment") {
  const auto m = SegmentMirror::make(0.4, 0.4, 0.8, 1.9);
  const auto c = census(m);
  CHECK(c.two_reflected == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c.reflected_weighted == doctest::Approx(c.no_incident).epsilon(1e-12));
}

TEST_CASE("weighted compensation and conservation") {
  const auto c = census(kOrdered);
  CHECK(c.total() == doctest::Approx(2 * kPi).epsilon(1e-14));
  // Every reflected ray makes up for one blocked direct ray.
  CHECK(c.shadowed == 0.0);
  CHECK(c.reflected_weighted == doctest::Approx(c.no_incident).epsilon(1e-12));
  CHECK(c.ray_total + c.shadowed == doctest::Approx(2 * kPi).epsilon(1e-12));

  const auto s = census(kOrdered, CensusMode::sampled, 20000);
  CHECK(std::abs(s.ray_total + s.shadowed - 2 * kPi) < 2 * kPi / 1e4);
  CHECK_THROWS_AS(census(kOrdered, CensusMode::sampled, 10), std::invalid_argument);
}

TEST_CASE("shadowed reflections on unordered mirrors") {
  // A steep upper segment can hide part of the lower one.
  const auto m = SegmentMirror::make(2.0, -0.5, 0.8, 1.6);
  const auto c = census(m);
  CHECK(c.reflected_weighted + c.shadowed == doctest::Approx(c.no_incident).epsilon(1e-12));
  CHECK(c.total() == doctest::Approx(2 * kPi).epsilon(1e-14));
}
