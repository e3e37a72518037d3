#pragma once

#include "vacfocus/qsqrt3.hpp"
#include "vacfocus/quadrature.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace vacfocus::observables {

enum class ObservableKind { phi_sq, phidot_sq, E_sq, B_sq, rho_scalar, rho_EM };
enum class Geometry { revolution, cylinder, flat_plate };
enum class Method { closed_form, numeric_quadrature };
enum class Status { ok, sub_critical };

const char* to_string(ObservableKind k);
const char* to_string(Geometry g);
const char* to_string(Method m);
const char* to_string(Status s);
Geometry geometry_from_string(const std::string& name);
Method method_from_string(const std::string& name);

/// Renormalized vacuum expectation value in ħ = c = 1 units: a⁻² for the
/// scalar-field class, a⁻⁴ for the E-class.
struct VacuumObservable {
  ObservableKind kind = ObservableKind::phi_sq;
  Geometry geometry = Geometry::revolution;
  double a = 0.0;    ///< distance from the focus (z for the flat plate)
  double xi0 = 0.0;  ///< rim excess; 0 for the flat plate
  double value = 0.0;
  /// Closed form: size of the first dropped term. Numeric: quadrature error
  /// plus taper sensitivity.
  double error = 0.0;
  Method method = Method::closed_form;
  Status status = Status::ok;
};

/// Taylor coefficients about ξ₁ = 0 of
///   A(ξ₁) = ξ₁²/[cos(π/3+ξ₁) − cos(π/3+ξ₂)]²  and  B(ξ₁) = A(ξ₁)².
struct ExpansionCoefficients {
  std::vector<QSqrt3> A;
  std::vector<QSqrt3> B;
};

/// Exact composition of the conjugate series; `order` is the highest power
/// kept. Throws std::invalid_argument when the multiray series is too short.
ExpansionCoefficients expansion_coefficients(std::size_t order);

/// Cached table used by the numeric integrands.
inline constexpr std::size_t kIntegrandSeriesOrder = 19;
const ExpansionCoefficients& integrand_series();

/// ξ₁/Δcos raised to `power` (2 for A, 4 for B) with derivatives 0..4.
/// Uses the exact series near ξ₁ = 0 and Taylor jets through the conjugate
/// map elsewhere.
quadrature::Jet pair_integrand(int power, double xi);

struct NumericControls {
  /// Taper ramp width as a fraction of ξ₀, centred on each rim edge.
  double taper_width = 0.1;
  quadrature::QuadOptions quad{1e-15, 1e-11, 4000};
};

/// ∫ ln ξ² F⁽ⁿ⁾ over [−ξ₀, ξ₀] with the rim edges smoothed by the taper; F = A
/// for n = 2 and B for n = 4. Surface terms are dropped by construction.
quadrature::QuadResult log_kernel_pair_integral(int n, double xi0, double taper_width,
                                                const quadrature::QuadOptions& opts = {});

/// Geometry factor relative to the parabola of revolution: 1, 4/(3π) for the
/// scalar class on the cylinder, 16/(15π) for the E-class.
double geometry_factor(ObservableKind kind, Geometry g);

/// c in value ≈ c·ξ₀(1 − ln ξ₀)/aⁿ: −23/(648π²) for phi_sq and
/// 4051/(2²·3⁷·5·π²) for E_sq (revolution), times the geometry factor.
double closed_form_coefficient(ObservableKind kind, Geometry g);

/// ⟨φ²⟩ near the focus. ξ₀ = 0 returns 0 flagged sub-critical.
VacuumObservable phi_sq(Geometry g, double a, double xi0, Method method,
                        const NumericControls& controls = {});

/// ⟨E²⟩ near the focus, both polarizations.
VacuumObservable E_sq(Geometry g, double a, double xi0, Method method,
                      const NumericControls& controls = {});

/// 3/(16π²z⁴) for a perfectly conducting plate.
VacuumObservable flat_plate_E_sq(double z);

/// ⟨E²⟩ = ⟨B²⟩ = ρ_EM = 2⟨φ̇²⟩ = 2ρ_scalar. Throws std::invalid_argument when
/// asked to convert between phi_sq and the E-class.
VacuumObservable related_quantity(const VacuumObservable& base, ObservableKind kind);

}  // namespace vacfocus::observables
