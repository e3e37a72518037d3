#include "doctest.h"

#include "vacfocus/oracles.hpp"
#include "vacfocus/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace vacfocus::quadrature;
namespace oracles = vacfocus::oracles;

TEST_CASE("Gauss-Kronrod on smooth and endpoint-singular integrands") {
  const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-14));
  const auto s = integrate([](double x) { return std::log(x); }, 0.0, 1.0, {1e-14, 1e-12, 4000});
  CHECK(s.value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("Richardson removes the leading error terms") {
  std::vector<double> samples;
  for (double h : {0.1, 0.05, 0.025}) samples.push_back(2.0 + 3 * h * h + h * h * h * h);
  const auto e = richardson(samples, 0.5, 2, 2);
  CHECK(e.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("omega moments") {
  CHECK(omega_moment(1, 1.0) == -1.0);
  CHECK(omega_moment(3, 1.0) == 6.0);
  CHECK(omega_moment(1, 2.0) == -0.25);
  const double gap = omega_moment_regulated(1, 2.0, 1e-3) - oracles::omega_moment_regulated_closed(1, 2.0, 1e-3);
  INFO("gap " << gap);
  CHECK(omega_moment_regulated(1, 2.0, 1e-3) ==
        doctest::Approx(oracles::omega_moment_regulated_closed(1, 2.0, 1e-3)).epsilon(1e-10));
  const double a = 1e-3;
  const double closed = (a * a - 4.0) / ((a * a + 4.0) * (a * a + 4.0));
  CHECK(oracles::omega_moment_regulated_closed(1, 2.0, a) == doctest::Approx(closed).epsilon(1e-14));
  CHECK(omega_moment_numeric(1, 1.0).value == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(omega_moment_numeric(3, 1.0).value == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("Bessel moments") {
  CHECK(bessel_moment(1, 1.0) == doctest::Approx(1.0 / 3));
  CHECK(bessel_moment(2, 1.0) == doctest::Approx(4.0 / 15));
  CHECK(bessel_moment(1, 2.0) == doctest::Approx(1.0 / 12));
  CHECK(bessel_moment_regulated(1, 1.2, 1.0) ==
        doctest::Approx(oracles::bessel_moment1_regulated_closed(1.2, 1.0)).epsilon(1e-10));
  CHECK(bessel_moment_numeric(1, 2.0).value == doctest::Approx(1.0 / 12).epsilon(1e-5));
  CHECK(bessel_moment_numeric(2, 1.0).value == doctest::Approx(4.0 / 15).epsilon(1e-5));
}

TEST_CASE("K0") {
  CHECK(k0_bessel(1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-14));
  CHECK(k0_bessel(10.0) == doctest::Approx(1.7780062316167652e-5).epsilon(1e-13));
  const double x = 1e-6;
  CHECK(k0_bessel(x) == doctest::Approx(-std::log(x / 2) - std::numbers::egamma).epsilon(1e-10));
  for (double v : {0.3, 1.9, 2.1, 5.0, 11.5}) {
    CAPTURE(v);
    CHECK(k0_bessel(v) == doctest::Approx(oracles::k0_series_high_precision(v)).epsilon(1e-13));
  }
  CHECK(k0_bessel(40.0) == doctest::Approx(std::cyl_bessel_k(0.0, 40.0)).epsilon(1e-13));
}

TEST_CASE("smoothstep is C4") {
  const Jet at0 = smoothstep(0.0);
  const Jet at1 = smoothstep(1.0);
  CHECK(at0[0] == 0.0);
  CHECK(at1[0] == 1.0);
  for (int k = 1; k <= 4; ++k) {
    CHECK(at0[static_cast<std::size_t>(k)] == 0.0);
    CHECK(std::abs(at1[static_cast<std::size_t>(k)]) < 1e-12);
  }
  CHECK(smoothstep(0.5)[0] == doctest::Approx(0.5));
}

TEST_CASE("log kernel integral of a polynomial under a taper") {
  SmoothIntegrand x2{[](double x) { return x * x; },
                     [](double x) { return Jet{x * x, 2 * x, 2.0, 0.0, 0.0}; }, false};
  const auto f = with_taper(x2, -1.0, 1.0, 0.2);
  REQUIRE(f.tapered);
  const auto ibp = log_kernel_integral(f, 2, -1.0, 1.0);
  const auto hadamard = oracles::excision_finite_part(f, 2, 1.0);
  CHECK(ibp.value == doctest::Approx(hadamard.value).epsilon(1e-8));
  CHECK(ibp.value == doctest::Approx(oracles::trapezoid_log_kernel(f, 2, 1.0, 10000, {0.6})).epsilon(1e-6));

  // Parity: the even integrand gives twice the half-interval value.
  const auto half = integrate(
      [&](double x) { return std::log(x * x) * f.derivatives(x, 1e-3)[2]; }, 0.0, 1.0,
      {1e-15, 1e-13, 4000});
  CHECK(ibp.value == doctest::Approx(-0.5 * 2 * half.value).epsilon(1e-9));
}

TEST_CASE("quartic kernel against the trapezoid oracle") {
  SmoothIntegrand x4{[](double x) { return x * x * x * x; },
                     [](double x) {
                       return Jet{x * x * x * x, 4 * x * x * x, 12 * x * x, 24 * x, 24.0};
                     },
                     false};
  const auto f = with_taper(x4, -1.0, 1.0, 0.2);
  const auto ibp = log_kernel_integral(f, 4, -1.0, 1.0);
  CHECK(ibp.value == doctest::Approx(oracles::trapezoid_log_kernel(f, 4, 1.0, 10000, {0.6})).epsilon(1e-6));
  CHECK(ibp.value == doctest::Approx(oracles::excision_finite_part(f, 4, 1.0).value).epsilon(1e-6));
}

TEST_CASE("untapered integrands are rejected") {
  SmoothIntegrand raw{[](double x) { return x; }, {}, false};
  CHECK_THROWS(log_kernel_integral(raw, 2, -1.0, 1.0));
}
