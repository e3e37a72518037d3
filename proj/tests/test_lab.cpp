#include "doctest.h"

#include "vacfocus/lab.hpp"

#include <cmath>
#include <numbers>

using namespace vacfocus::lab;
using vacfocus::observables::Geometry;

namespace {
constexpr double kMicron = 1e-4;
const AtomSpec kNa = sodium();
const LambdaCoefficient kLambda{Geometry::revolution, 0.0, 1e-3};
}  // namespace

TEST_CASE("presets and constants") {
  CHECK(atom_preset("Na").mass == 3.8e-23);
  CHECK_THROWS_AS(atom_preset("Xe"), std::invalid_argument);
  CHECK_THROWS_AS(AtomSpec::make("x", -1.0, 1.0), std::invalid_argument);
  CHECK(PhysicalConstants{}.hbar_c() == doctest::Approx(3.1615e-17).epsilon(1e-4));
}

TEST_CASE("Casimir-Polder potential") {
  const double v = casimir_polder_potential(kNa, kLambda, kMicron);
  CHECK(v == doctest::Approx(-4.74e-26).epsilon(2e-3));
  AtomSpec heavy = kNa;
  heavy.polarizability *= 2;
  CHECK(casimir_polder_potential(heavy, kLambda, kMicron) == doctest::Approx(2 * v));
  const auto plate = LambdaCoefficient::flat_plate();
  CHECK(plate.value == doctest::Approx(3 / (16 * std::numbers::pi * std::numbers::pi)));
  CHECK(plate.geometry == Geometry::flat_plate);
}

TEST_CASE("deflection") {
  const double d = deflection_ratio(kNa, kLambda, kMicron, 1e-3);
  CHECK(d == doctest::Approx(0.25).epsilon(0.02));
  CHECK(deflection_ratio(kNa, kLambda, kMicron, 2e-3) == doctest::Approx(4 * d));
  CHECK(deflection_ratio(kNa, kLambda, 2 * kMicron, 1e-3) == doctest::Approx(d / 64));
}

TEST_CASE("levitation height") {
  const double h = levitation_height(kNa, kLambda);
  CHECK(h / kMicron == doctest::Approx(0.55).epsilon(0.02));
  const LambdaCoefficient big{Geometry::revolution, 0.0, 32e-3};
  CHECK(levitation_height(kNa, big) == doctest::Approx(2 * h));
  CHECK(h > ValidityFloor{}.lambda_p);
}

TEST_CASE("trap temperature") {
  const PhysicalConstants k;
  const double a = 0.1 * kMicron;
  const double t = trap_temperature(kNa, kLambda, a);
  CHECK(t == doctest::Approx(kNa.polarizability * 1e-3 * k.hbar_c() / (3 * k.k_B * std::pow(a, 4))));
  CHECK(t == doctest::Approx(2.3e-6).epsilon(0.02));
  CHECK(kQuotedTrapTemperature / t > 5.0);
  CHECK(trap_temperature(kNa, kLambda, 2 * a) == doctest::Approx(t / 16));
  const LambdaCoefficient twice{Geometry::revolution, 0.0, 2e-3};
  CHECK(trap_temperature(kNa, twice, a) == doctest::Approx(2 * t));
}

TEST_CASE("phase shift") {
  const double xi0 = 0.05;
  const double shape = xi0 * (1 - std::log(xi0));
  const double p = phase_shift(kNa, kMicron, 1e-3, xi0);
  CHECK(p / shape == doctest::Approx(0.143).epsilon(2e-3));
  CHECK(phase_shift(kNa, kMicron, 2e-3, xi0) == doctest::Approx(2 * p));
  CHECK(phase_shift(kNa, 2 * kMicron, 1e-3, xi0) == doctest::Approx(p / 16));
}

TEST_CASE("plasma-wavelength floor") {
  const double below = 0.05 * kMicron;
  CHECK_THROWS_AS(casimir_polder_potential(kNa, kLambda, below), BelowPlasmaFloor);
  CHECK_THROWS_AS(trap_temperature(kNa, kLambda, below), BelowPlasmaFloor);
  const ValidityFloor open{1e-5, true};
  CHECK(casimir_polder_potential(kNa, kLambda, below, {}, open) < 0.0);
}
