#include "doctest.h"

#include "vacfocus/geometry.hpp"
#include "vacfocus/multiray.hpp"

#include <cmath>
#include <numbers>

using namespace vacfocus::geometry;

namespace {
constexpr double kPi = std::numbers::pi;
const ParabolicMirror kUnit = ParabolicMirror::make(1.0, 1.0);
}  // namespace

TEST_CASE("parabola points") {
  CHECK(parabola_point(kUnit, 0.0) == 0.5);
  CHECK(parabola_point(kUnit, 1.0) == 0.0);
  CHECK(parabola_point(ParabolicMirror::make(2.0, 0.5), 1.0) == 0.75);
  CHECK_THROWS_AS(parabola_point(ParabolicMirror::make(1.0, 0.0), 2.0), std::invalid_argument);
}

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(ParabolicMirror::make(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ParabolicMirror::make(1.0, 2.1), std::invalid_argument);
  CHECK_THROWS_AS(AxialPoint::make(0.0), std::invalid_argument);
  CHECK(kUnit.rim_height() == doctest::Approx(std::tan(kUnit.rim_angle() / 2)));
}

TEST_CASE("reflection points near the focus") {
  const auto tiny = AxialPoint::make(1e-12);
  const Point2 up = reflection_point(kUnit, tiny, kPi / 2);
  CHECK(std::abs(up.x) < 1e-11);
  CHECK(up.y == doctest::Approx(1.0).epsilon(1e-11));
  const Point2 crit = reflection_point(kUnit, tiny, kPi / 3);
  CHECK(crit.y == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-11));
  CHECK(std::hypot(crit.x, crit.y) == doctest::Approx(2.0 / 3).epsilon(1e-11));

  const Point2 p = reflection_point(kUnit, AxialPoint::make(0.01), kPi / 3);
  CHECK(p.y == doctest::Approx(0.56869).epsilon(2e-4));
  CHECK(parabola_point(kUnit, p.y) == doctest::Approx(p.x).epsilon(1e-12));
}

TEST_CASE("first-order incident angle") {
  const auto p = AxialPoint::make(0.01);
  CHECK(incident_angle_first_order(kUnit, p, kPi / 3) ==
        doctest::Approx(0.01 * 3 * std::sqrt(3.0) / 4).epsilon(1e-12));
  // sec θ′/(sec θ′ − 1) → 1 at π/2, so the first-order angle is a/b there.
  CHECK(incident_angle_first_order(kUnit, p, kPi / 2) == doctest::Approx(0.01).epsilon(1e-12));
  const auto near = AxialPoint::make(1e-3);
  CHECK(exact_incident_angle(kUnit, near, kPi / 3) ==
        doctest::Approx(incident_angle_first_order(kUnit, near, kPi / 3)).epsilon(1e-2));
}

TEST_CASE("first-order error is second order in a/b") {
  auto err = [](double a) {
    const auto p = AxialPoint::make(a);
    return std::abs(exact_incident_angle(kUnit, p, kPi / 4) -
                    incident_angle_first_order(kUnit, p, kPi / 4));
  };
  CHECK(err(0.01) / err(0.005) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("path lengths") {
  CHECK(path_length(kUnit, AxialPoint::make(1e-14), 1.0).ell == doctest::Approx(1.0).epsilon(1e-13));
  const auto p = AxialPoint::make(0.01);
  CHECK(path_length(kUnit, p, kPi / 3).ell == doctest::Approx(0.985).epsilon(1e-14));
  CHECK(path_length(kUnit, p, kPi / 2).ell == doctest::Approx(0.99).epsilon(1e-14));
  const auto exact = reflect_exact(kUnit, p, 1.2);
  CHECK(std::abs(exact.ell - path_length(kUnit, p, 1.2).ell) < 1e-4);
  CHECK(exact.ell == doctest::Approx(exact.s1 + exact.s2).epsilon(1e-14));
}

TEST_CASE("path differences") {
  CHECK(path_difference(AxialPoint::make(1.0), 1.1, 1.1) == 0.0);
  const double t1 = kPi / 3 + 0.1;
  const double t2 = kPi / 3 + vacfocus::multiray::conjugate_of(0.1);
  const double d1 = path_difference(AxialPoint::make(1.0), t1, t2);
  CHECK(d1 == doctest::Approx(std::cos(t1) - std::cos(t2)).epsilon(1e-14));
  CHECK(path_difference(AxialPoint::make(2.0), t1, t2) == 2 * d1);
  CHECK(path_difference(AxialPoint::make(1.0), t2, t1) == -d1);
}
