#include "doctest.h"

#include "vacfocus/multiray.hpp"
#include "vacfocus/observables.hpp"
#include "vacfocus/oracles.hpp"

#include <cmath>
#include <numbers>

using namespace vacfocus;
using namespace vacfocus::observables;

namespace {
constexpr double kPi = std::numbers::pi;
double shape(double xi0) { return xi0 * (1.0 - std::log(xi0)); }
}  // namespace

TEST_CASE("expansion coefficients") {
  const auto& s = integrand_series();
  CHECK(s.A[0] == QSqrt3(Rational(1, 3)));
  CHECK(s.A[2] == QSqrt3(Rational(23, 324)));
  CHECK(s.B[4] == QSqrt3(Rational(4051, 524880)));
  // Odd terms carry √3; the float fit sees the same numbers.
  const auto fit = oracles::taylor_fit_coefficients(2, 6);
  for (std::size_t k = 0; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(s.A[k].to_double() == doctest::Approx(fit[k]).epsilon(1e-9));
  }
  CHECK(expansion_coefficients(20).A.size() > 20);
}

TEST_CASE("pair integrand near zero matches the direct ratio") {
  for (double xi : {0.05, 0.15, -0.2}) {
    CAPTURE(xi);
    const double x2 = multiray::conjugate_of(xi);
    const double direct = std::pow(xi / multiray::delta_cos(xi, x2), 2);
    CHECK(pair_integrand(2, xi)[0] == doctest::Approx(direct).epsilon(1e-12));
    CHECK(pair_integrand(4, xi)[0] == doctest::Approx(direct * direct).epsilon(1e-12));
  }
}

TEST_CASE("closed-form prefactors") {
  const double ce = closed_form_coefficient(ObservableKind::E_sq, Geometry::revolution);
  CHECK(ce == doctest::Approx(4051.0 / (4 * 2187 * 5 * kPi * kPi)).epsilon(1e-15));
  CHECK(ce == doctest::Approx(9.384e-3).epsilon(5e-3));
  const double cc = closed_form_coefficient(ObservableKind::E_sq, Geometry::cylinder);
  CHECK(cc == doctest::Approx(16204.0 / (6561 * 25 * kPi * kPi * kPi)).epsilon(1e-14));
  CHECK(cc == doctest::Approx(3.186e-3).epsilon(5e-3));
  CHECK(closed_form_coefficient(ObservableKind::phi_sq, Geometry::revolution) ==
        doctest::Approx(-23.0 / (648 * kPi * kPi)).epsilon(1e-15));
}

TEST_CASE("closed-form values and geometry ratios") {
  const auto p = phi_sq(Geometry::revolution, 1.0, 0.01, Method::closed_form);
  CHECK(p.value == doctest::Approx(-23.0 / (648 * kPi * kPi) * shape(0.01)).epsilon(1e-14));
  CHECK(p.value == doctest::Approx(-2.02e-4).epsilon(5e-3));
  const auto pc = phi_sq(Geometry::cylinder, 1.0, 0.01, Method::closed_form);
  CHECK(pc.value / p.value == doctest::Approx(4 / (3 * kPi)).epsilon(1e-15));
  const auto e = E_sq(Geometry::revolution, 1.0, 0.01, Method::closed_form);
  const auto ec = E_sq(Geometry::cylinder, 1.0, 0.01, Method::closed_form);
  CHECK(ec.value / e.value == doctest::Approx(16 / (15 * kPi)).epsilon(1e-15));
  const auto e2 = E_sq(Geometry::revolution, 2.0, 0.01, Method::closed_form);
  CHECK(e2.value == doctest::Approx(e.value / 16).epsilon(1e-15));
  CHECK(p.value < 0.0);
  CHECK(e.value > 0.0);
  CHECK(e.error > 0.0);
}

TEST_CASE("sub-critical and invalid inputs") {
  const auto z = E_sq(Geometry::revolution, 1.0, 0.0, Method::closed_form);
  CHECK(z.status == Status::sub_critical);
  CHECK(z.value == 0.0);
  CHECK_THROWS_AS(E_sq(Geometry::revolution, -1.0, 0.1, Method::closed_form), std::invalid_argument);
  CHECK_THROWS_AS(phi_sq(Geometry::revolution, 1.0, 2.2, Method::closed_form), std::invalid_argument);
}

TEST_CASE("numeric quadrature tracks the asymptotic form") {
  const auto ne = E_sq(Geometry::revolution, 1.0, 0.05, Method::numeric_quadrature);
  const auto ce = E_sq(Geometry::revolution, 1.0, 0.05, Method::closed_form);
  CHECK(ne.value / ce.value == doctest::Approx(1.0).epsilon(0.02));
  const auto np = phi_sq(Geometry::revolution, 1.0, 0.05, Method::numeric_quadrature);
  const auto cp = phi_sq(Geometry::revolution, 1.0, 0.05, Method::closed_form);
  CHECK(np.value / cp.value == doctest::Approx(1.0).epsilon(0.02));
  CHECK(np.value < 0.0);
  const auto nc = E_sq(Geometry::cylinder, 1.0, 0.05, Method::numeric_quadrature);
  CHECK(nc.value / ne.value == doctest::Approx(16 / (15 * kPi)).epsilon(1e-12));
}

TEST_CASE("halving the taper width stays inside the quoted error") {
  for (double xi0 : {0.03, 0.1, 0.25}) {
    CAPTURE(xi0);
    NumericControls wide;
    NumericControls narrow;
    narrow.taper_width = wide.taper_width / 2;
    const auto w = E_sq(Geometry::revolution, 1.0, xi0, Method::numeric_quadrature, wide);
    const auto n = E_sq(Geometry::revolution, 1.0, xi0, Method::numeric_quadrature, narrow);
    CHECK(std::abs(w.value - n.value) < w.error);
  }
}

TEST_CASE("flat plate and related quantities") {
  CHECK(flat_plate_E_sq(1.0).value == doctest::Approx(3 / (16 * kPi * kPi)).epsilon(1e-15));
  CHECK(flat_plate_E_sq(1.0).value == doctest::Approx(1.90e-2).epsilon(5e-3));
  CHECK(flat_plate_E_sq(2.0).value == doctest::Approx(1.1874e-3).epsilon(1e-4));
  const auto near = E_sq(Geometry::revolution, 1.0, 0.1, Method::closed_form);
  const double ratio = near.value / flat_plate_E_sq(1.0).value;
  CHECK(ratio > 0.0);
  CHECK(ratio < 1.0);

  const auto e = E_sq(Geometry::revolution, 1.0, 0.1, Method::closed_form);
  CHECK(related_quantity(e, ObservableKind::rho_EM).value == e.value);
  CHECK(related_quantity(e, ObservableKind::B_sq).value == e.value);
  const auto rs = related_quantity(e, ObservableKind::rho_scalar);
  CHECK(rs.value == e.value / 2);
  CHECK(related_quantity(rs, ObservableKind::phidot_sq).value == rs.value);
  CHECK_THROWS_AS(related_quantity(e, ObservableKind::phi_sq), std::invalid_argument);
}
