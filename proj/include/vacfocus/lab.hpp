#pragma once

#include "vacfocus/observables.hpp"

#include <string>

namespace vacfocus::lab {

/// CGS values. `version` tags every output row.
struct PhysicalConstants {
  double hbar = 1.054571817e-27;  // erg s
  double c = 2.99792458e10;       // cm/s
  double k_B = 1.380649e-16;      // erg/K
  double g = 980.665;             // cm/s²
  std::string version = "CODATA2018-cgs";

  double hbar_c() const { return hbar * c; }
};

/// Static polarizability in the Heaviside–Lorentz convention, which is 4π
/// times the Gaussian value.
struct AtomSpec {
  std::string name;
  double mass = 0.0;            // g
  double polarizability = 0.0;  // cm³

  static AtomSpec make(std::string name, double mass, double polarizability);
};

AtomSpec sodium();
/// Built-in presets by name ("Na"); throws std::invalid_argument otherwise.
AtomSpec atom_preset(const std::string& name);

/// Dimensionless Λ with ⟨E²⟩ = Λ·ħc/a⁴.
struct LambdaCoefficient {
  observables::Geometry geometry = observables::Geometry::revolution;
  double xi0 = 0.0;
  double value = 0.0;

  /// Closed-form Λ = c·ξ₀(1 − ln ξ₀) for the parabolic geometries.
  static LambdaCoefficient closed_form(observables::Geometry g, double xi0);
  /// Λ = 3/(16π²) for a conducting plate.
  static LambdaCoefficient flat_plate();
  /// Λ read off an E_sq observable, value·a⁴.
  static LambdaCoefficient from_observable(const observables::VacuumObservable& e_sq);
};

/// Geometric optics is trusted only above the plasma wavelength λ_P.
struct ValidityFloor {
  double lambda_p = 1e-5;  // cm (0.1 µm)
  bool allow_below = false;
};

class BelowPlasmaFloor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// V = −½ α ⟨E²⟩ with ⟨E²⟩ = Λħc/a⁴, in erg.
double casimir_polder_potential(const AtomSpec& atom, const LambdaCoefficient& lambda, double a,
                                const PhysicalConstants& k = {}, const ValidityFloor& floor = {});

/// Δa/a = αΛħc t²/(m a⁶): constant force at the initial a for a time t.
double deflection_ratio(const AtomSpec& atom, const LambdaCoefficient& lambda, double a,
                        double t, const PhysicalConstants& k = {},
                        const ValidityFloor& floor = {});

/// Height where |∂V/∂a| = mg: a = (2αΛħc/(mg))^{1/5}.
double levitation_height(const AtomSpec& atom, const LambdaCoefficient& lambda,
                         const PhysicalConstants& k = {});

/// T with (3/2)k_B T = |V|, i.e. αΛħc/(3k_B a⁴).
double trap_temperature(const AtomSpec& atom, const LambdaCoefficient& lambda, double a,
                        const PhysicalConstants& k = {}, const ValidityFloor& floor = {});

/// Δφ = (t/2)·α·Λ_pc·c/a⁴ for the parabolic cylinder; ħ cancels.
double phase_shift(const AtomSpec& atom, double a, double t, double xi0,
                   const PhysicalConstants& k = {}, const ValidityFloor& floor = {});

/// Temperature quoted in the literature for Na, Λ = 10⁻³, a = 0.1 µm. The
/// direct evaluation above is about ten times smaller.
inline constexpr double kQuotedTrapTemperature = 2e-5;  // K

}  // namespace vacfocus::lab
