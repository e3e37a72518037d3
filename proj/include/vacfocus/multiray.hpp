#pragma once

#include "vacfocus/qsqrt3.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vacfocus::multiray {

/// Rim excess ξ is measured from the critical reflection angle π/3.
inline constexpr double kCriticalAngle = 1.0471975511965976;  // π/3

/// Angle that maximizes the incident-angle curve. Returns π/3 after checking
/// that the numerically located maximum agrees.
double critical_angle();

/// Numerically located maximum of θ(θ′)·b/a on (0, π/2), from the sign
/// change of its derivative.
double locate_incident_angle_maximum();

/// Incident angle in units of a/b as a function of the reflection angle,
/// sin³θ′ secθ′/(secθ′ − 1) = sinθ′(1 + cosθ′).
double scaled_incident_angle(double theta_prime);

/// Same curve at θ′ = π/3 + ξ; equals 3√3/4 at ξ = 0.
double theta_scaled(double xi);

/// theta_scaled(ξ) − 3√3/4 without cancellation near ξ = 0.
double theta_scaled_offset(double xi);

/// d/dξ of theta_scaled.
double theta_scaled_derivative(double xi);

/// cos(π/3 + ξ₁) − cos(π/3 + ξ₂) evaluated as a product (no cancellation).
double delta_cos(double xi1, double xi2);

/// Two reflection angles π/3 + ξ₁ and π/3 + ξ₂ sharing one incident angle.
struct ConjugateRayPair {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double theta_shared = 0.0;      ///< common incident angle in units of a/b
  double delta_ell_over_a = 0.0;  ///< Δℓ/a = cos θ₁′ − cos θ₂′
};

/// Conjugate of ξ₁ ∈ (0, ξ₀]: the root ξ₂ ∈ (−ξ₁, 0) of
/// theta_scaled(ξ₂) = theta_scaled(ξ₁). Throws std::invalid_argument when ξ₁
/// is outside (0, ξ₀].
double conjugate_angle(double xi1, double xi0);

/// Conjugate of any ξ ∈ (−π/3, 2π/3), ξ ≠ 0, without a rim constraint. For
/// ξ > 0 the result lies in (−ξ, 0); for ξ < 0 it is positive.
double conjugate_of(double xi);

/// The pair through ξ₁ when both rays hit a mirror with rim excess ξ₀;
/// empty for a sub-critical mirror (ξ₀ = 0) or when either ray misses.
std::optional<ConjugateRayPair> conjugate_pair(double xi1, double xi0);

/// Exact expansion coefficients in ℚ(√3).
struct SeriesCoefficients {
  /// theta[k]: coefficient of ξ^k in theta_scaled(ξ).
  std::vector<QSqrt3> theta;
  /// conjugate[k]: coefficient of ξ₁^k in ξ₂(ξ₁); conjugate[0] = 0.
  std::vector<QSqrt3> conjugate;

  std::size_t order() const { return conjugate.size() - 1; }
};

/// Taylor-expands theta_scaled about ξ = 0 and reverts the conjugacy
/// condition order by order. `order` is the highest power of ξ₁ kept in the
/// conjugate series (≥ 2); theta is expanded one order further.
SeriesCoefficients derive_series_coefficients(std::size_t order);

/// Process-wide table, derived once on first use.
inline constexpr std::size_t kSeriesTableOrder = 16;
const SeriesCoefficients& series_table();

/// ξ₂ from the conjugate series truncated after ξ₁^order.
double conjugate_series(double xi1, std::size_t order);

}  // namespace vacfocus::multiray
