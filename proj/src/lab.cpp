#include "vacfocus/lab.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vacfocus::lab {

namespace {

void check_distance(double a, const ValidityFloor& floor) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("distance must be positive");
  }
  if (a < floor.lambda_p && !floor.allow_below) {
    throw BelowPlasmaFloor("distance " + std::to_string(a) +
                           " cm is below the plasma-wavelength floor " +
                           std::to_string(floor.lambda_p) + " cm");
  }
}

void check_lambda(const LambdaCoefficient& lambda) {
  if (!(lambda.value > 0.0)) {
    throw std::invalid_argument("Lambda must be positive");
  }
}

}  // namespace

AtomSpec AtomSpec::make(std::string name, double mass, double polarizability) {
  if (!(mass > 0.0) || !(polarizability > 0.0)) {
    throw std::invalid_argument("atom mass and polarizability must be positive");
  }
  return {std::move(name), mass, polarizability};
}

AtomSpec sodium() { return AtomSpec::make("Na", 3.8e-23, 3.0e-22); }

AtomSpec atom_preset(const std::string& name) {
  if (name == "Na" || name == "sodium") return sodium();
  throw std::invalid_argument("unknown atom preset '" + name + "'");
}

LambdaCoefficient LambdaCoefficient::closed_form(observables::Geometry g, double xi0) {
  if (g == observables::Geometry::flat_plate) return flat_plate();
  if (!(xi0 > 0.0)) {
    throw std::invalid_argument("closed-form Lambda needs xi0 > 0");
  }
  const double c = observables::closed_form_coefficient(observables::ObservableKind::E_sq, g);
  return {g, xi0, c * xi0 * (1.0 - std::log(xi0))};
}

LambdaCoefficient LambdaCoefficient::flat_plate() {
  return {observables::Geometry::flat_plate, 0.0, 3.0 / (16 * std::numbers::pi * std::numbers::pi)};
}

LambdaCoefficient LambdaCoefficient::from_observable(const observables::VacuumObservable& e) {
  if (e.kind == observables::ObservableKind::phi_sq) {
    throw std::invalid_argument("Lambda needs an E-class observable");
  }
  const double a2 = e.a * e.a;
  return {e.geometry, e.xi0, e.value * a2 * a2};
}

double casimir_polder_potential(const AtomSpec& atom, const LambdaCoefficient& lambda, double a,
                                const PhysicalConstants& k, const ValidityFloor& floor) {
  check_distance(a, floor);
  const double a2 = a * a;
  return -0.5 * atom.polarizability * lambda.value * k.hbar_c() / (a2 * a2);
}

double deflection_ratio(const AtomSpec& atom, const LambdaCoefficient& lambda, double a,
                        double t, const PhysicalConstants& k, const ValidityFloor& floor) {
  check_distance(a, floor);
  if (!(t >= 0.0)) {
    throw std::invalid_argument("time must be non-negative");
  }
  // |F| = 4|V|/a; Δa = ½(F/m)t².
  const double force = 4.0 * std::abs(casimir_polder_potential(atom, lambda, a, k, floor)) / a;
  return 0.5 * force / atom.mass * t * t / a;
}

double levitation_height(const AtomSpec& atom, const LambdaCoefficient& lambda,
                         const PhysicalConstants& k) {
  check_lambda(lambda);
  return std::pow(2.0 * atom.polarizability * lambda.value * k.hbar_c() / (atom.mass * k.g),
                  0.2);
}

double trap_temperature(const AtomSpec& atom, const LambdaCoefficient& lambda, double a,
                        const PhysicalConstants& k, const ValidityFloor& floor) {
  const double v = casimir_polder_potential(atom, lambda, a, k, floor);
  return 2.0 * std::abs(v) / (3.0 * k.k_B);
}

double phase_shift(const AtomSpec& atom, double a, double t, double xi0,
                   const PhysicalConstants& k, const ValidityFloor& floor) {
  check_distance(a, floor);
  const LambdaCoefficient lambda =
      LambdaCoefficient::closed_form(observables::Geometry::cylinder, xi0);
  const double a2 = a * a;
  return 0.5 * t * atom.polarizability * lambda.value * k.c / (a2 * a2);
}

}  // namespace vacfocus::lab
