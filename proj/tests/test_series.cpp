#include "doctest.h"

#include "vacfocus/multiray.hpp"
#include "vacfocus/oracles.hpp"
#include "vacfocus/qsqrt3.hpp"
#include "vacfocus/series.hpp"

#include <cmath>
#include <numbers>

using namespace vacfocus;
using multiray::conjugate_of;

namespace {
QSqrt3 q(long long num, long long den, long long snum = 0, long long sden = 1) {
  return {Rational(num, den), Rational(snum, sden)};
}
QSqrt3 s3(long long num, long long den) { return {Rational(0), Rational(num, den)}; }
}  // namespace

TEST_CASE("QSqrt3 field arithmetic") {
  const QSqrt3 x = q(1, 2, 3, 4);
  CHECK(x * x.inverse() == QSqrt3(1));
  CHECK(QSqrt3::sqrt3() * QSqrt3::sqrt3() == QSqrt3(3));
  CHECK((x - x).is_zero());
  CHECK(x.norm() == Rational(1, 4) - 3 * Rational(9, 16));
  CHECK(x.to_double() == doctest::Approx(0.5 + 0.75 * std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("incident-angle curve peaks at pi/3") {
  CHECK(multiray::critical_angle() == doctest::Approx(std::numbers::pi / 3).epsilon(1e-15));
  CHECK(std::abs(multiray::locate_incident_angle_maximum() - std::numbers::pi / 3) < 1e-8);
  const long double arg = oracles::golden_section_argmax(
      [](long double t) { return std::sin(t) * (1 + std::cos(t)); }, 0.1L, 1.5L);
  CHECK(std::abs(static_cast<double>(arg) - std::numbers::pi / 3) < 1e-8);
  const double h = 1e-5;
  const double c = std::numbers::pi / 3;
  const double slope =
      (multiray::scaled_incident_angle(c + h) - multiray::scaled_incident_angle(c - h)) / (2 * h);
  CHECK(std::abs(slope) < 1e-8);
}

TEST_CASE("theta_scaled leading value and truncation order") {
  CHECK(multiray::theta_scaled(0.0) == doctest::Approx(3 * std::sqrt(3.0) / 4).epsilon(1e-15));
  const auto& t = multiray::series_table().theta;
  auto tail = [&](double xi) {
    double s = 0.0;
    for (int k = 6; k >= 0; --k) s = s * xi + t[static_cast<std::size_t>(k)].to_double();
    return multiray::theta_scaled(xi) - s;
  };
  // O(ξ⁷): halving ξ divides the remainder by about 2⁷.
  const double ratio = tail(0.1) / tail(0.05);
  CHECK(ratio == doctest::Approx(128.0).epsilon(0.05));
}

TEST_CASE("theta series coefficients are exact") {
  const auto c = multiray::derive_series_coefficients(6);
  const std::vector<QSqrt3> expected = {s3(3, 4), QSqrt3(0), s3(-3, 4), q(1, 4),
                                        s3(3, 16), q(-1, 16), s3(-11, 480)};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CAPTURE(k);
    CHECK(c.theta[k] == expected[k]);
  }
}

TEST_CASE("conjugate series coefficients are exact") {
  const auto c = multiray::derive_series_coefficients(5);
  CHECK(c.conjugate[0].is_zero());
  CHECK(c.conjugate[1] == QSqrt3(-1));
  // The reversion gives √3/9 here; see the ledger for the printed √3/3.
  CHECK(c.conjugate[2] == s3(1, 9));
  CHECK(c.conjugate[3] == q(-1, 27));
  CHECK(c.conjugate[4] == s3(35, 972));
  CHECK(c.conjugate[5] == q(-97, 2916));
}

TEST_CASE("conjugate series composed with itself is the identity") {
  const auto c = multiray::derive_series_coefficients(8);
  const Series<QSqrt3> inner(c.conjugate);
  const auto twice = compose(c.conjugate, inner);
  CHECK(twice[1] == QSqrt3(1));
  for (std::size_t k = 2; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(twice[k].is_zero());
  }
}

TEST_CASE("root-found conjugate") {
  CHECK(conjugate_of(0.1) == doctest::Approx(oracles::conjugate_high_precision(0.1)).epsilon(1e-12));
  CHECK(conjugate_of(0.1) == doctest::Approx(-0.0981066).epsilon(1e-6));
  CHECK(std::abs(conjugate_of(0.01) + 0.01 - std::sqrt(3.0) / 9 * 1e-4) < 1e-7);
  for (double xi : {1e-6, 1e-4, 0.03, 0.2, 0.5, -0.2}) {
    CAPTURE(xi);
    const double x2 = conjugate_of(xi);
    CHECK(multiray::theta_scaled(x2) == doctest::Approx(multiray::theta_scaled(xi)).epsilon(1e-12));
    CHECK(conjugate_of(x2) == doctest::Approx(xi).epsilon(1e-10));
  }
  CHECK(conjugate_of(1e-7) / 1e-7 == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("conjugate_pair and sub-critical mirrors") {
  CHECK_FALSE(multiray::conjugate_pair(0.05, 0.0).has_value());
  const auto p = multiray::conjugate_pair(0.1, 0.2);
  REQUIRE(p.has_value());
  CHECK(p->delta_ell_over_a ==
        doctest::Approx(std::cos(std::numbers::pi / 3 + p->xi1) -
                        std::cos(std::numbers::pi / 3 + p->xi2))
            .epsilon(1e-12));
  CHECK_THROWS_AS(multiray::conjugate_angle(0.3, 0.2), std::invalid_argument);
}

TEST_CASE("truncated conjugate series converges at sixth order") {
  CHECK(multiray::conjugate_series(0.0, 5) == 0.0);
  const double e1 = std::abs(multiray::conjugate_series(0.04, 5) - conjugate_of(0.04));
  const double e2 = std::abs(multiray::conjugate_series(0.02, 5) - conjugate_of(0.02));
  const double slope = std::log2(e1 / e2);
  CHECK(slope == doctest::Approx(6.0).epsilon(0.1));
}

TEST_CASE("Taylor-fit oracle agrees with the exact expansion") {
  const auto fit2 = oracles::taylor_fit_coefficients(2, 4);
  CHECK(fit2[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(fit2[2] == doctest::Approx(23.0 / 324).epsilon(1e-10));
  const auto fit4 = oracles::taylor_fit_coefficients(4, 4);
  CHECK(fit4[4] == doctest::Approx(4051.0 / 524880).epsilon(1e-10));
}
