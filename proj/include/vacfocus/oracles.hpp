#pragma once

// Independent reference computations used by the verification suites and the
// unit tests. None of these share code paths with the quantities they check.

#include "vacfocus/quadrature.hpp"

#include <functional>
#include <vector>

namespace vacfocus::oracles {

/// Monomial coefficients c₀..c_degree of (ξ/Δcos)^power about ξ = 0, from a
/// 50-digit Chebyshev fit over root-found conjugate pairs.
std::vector<double> taylor_fit_coefficients(int power, int degree);

/// Conjugate ξ₂ of ξ₁ by 50-digit Newton iteration on the incident-angle
/// curve, rounded to double.
double conjugate_high_precision(double xi1);

/// Golden-section maximum of f on [lo, hi] in long double.
long double golden_section_argmax(const std::function<long double(long double)>& f,
                                  long double lo, long double hi);

/// Re[n!/(α − iΔℓ)^{n+1}], the regulated frequency moment in closed form.
double omega_moment_regulated_closed(int n, double delta_ell, double alpha);

/// [α/√(α²−β²)·arccosh(α/β) − 1]/(α² − β²), the regulated first Bessel moment.
double bessel_moment1_regulated_closed(double alpha, double beta);

/// Hadamard finite part of ∫_{−L}^{L} f/xⁿ by excising (−ε, ε), adding the
/// divergent counterterms and extrapolating ε → 0 over ε = L/10·2⁻ᵏ.
quadrature::Extrapolation excision_finite_part(const quadrature::SmoothIntegrand& f, int n,
                                               double L, int levels = 5);

/// −kₙ ∫_{−L}^{L} ln x² f⁽ⁿ⁾ by the trapezoid rule after x = ±L t⁴, with one
/// Richardson step against the half-resolution sum. A taper
/// leaves f⁽ⁿ⁾ with kinks; listing them in `kinks` (as |x|) puts them on
/// panel ends so the rule keeps its h² convergence.
double trapezoid_log_kernel(const quadrature::SmoothIntegrand& f, int n, double L,
                            int points = 10000, const std::vector<double>& kinks = {});

/// K₀(x) from its power series summed in 50-digit arithmetic (x ≤ 12).
double k0_series_high_precision(double x);

}  // namespace vacfocus::oracles
