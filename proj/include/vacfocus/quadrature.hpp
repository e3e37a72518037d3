#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace vacfocus::quadrature {

// ---------------------------------------------------------------------------
// Smooth integration

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

struct QuadOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

/// Globally adaptive 15-point Gauss–Kronrod on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadOptions& opts = {});

// ---------------------------------------------------------------------------
// Extrapolation

struct Extrapolation {
  double value = 0.0;
  double error = 0.0;
  std::vector<double> samples;  ///< raw estimates, one per regulator value
};

/// Richardson table for samples taken at h₀, h₀r, h₀r², … whose error expands
/// in powers first_power, first_power + power_step, …
Extrapolation richardson(std::span<const double> samples, double ratio, int first_power,
                         int power_step);

/// Geometric regulator schedule: start, start·ratio, …, `levels` values.
struct RegulatorSchedule {
  double start = 0.1;
  double ratio = 0.5;
  int levels = 4;

  std::vector<double> values() const;
};

// ---------------------------------------------------------------------------
// Regulated frequency moments ∫₀^∞ ωⁿ cos(ωΔℓ) e^{−αω} dω

/// α → 0 limit: −1/Δℓ² for n = 1 and 6/Δℓ⁴ for n = 3. Δℓ = 0 is the
/// coincident-ray divergence and throws std::domain_error.
double omega_moment(int n, double delta_ell);

/// The regulated integral at finite α, by panel quadrature over half periods.
double omega_moment_regulated(int n, double delta_ell, double alpha);

/// Regulated integral at α = |Δℓ|·s for each s in the schedule, extrapolated
/// to α → 0 in powers of α².
Extrapolation omega_moment_numeric(int n, double delta_ell, const RegulatorSchedule& schedule = {});

// ---------------------------------------------------------------------------
// Bessel moments ∫₀^∞ x^p e^{−αx} K₀(βx) dx as α → β

/// 1/(3β²) for p = 1 and 4/(15β³) for p = 2.
double bessel_moment(int p, double beta);

/// The integral at finite α ≥ β, by adaptive quadrature.
double bessel_moment_regulated(int p, double alpha, double beta);

/// Integral at α = β(1 + δ) for each δ in the schedule, extrapolated to
/// δ → 0 in powers of δ.
Extrapolation bessel_moment_numeric(int p, double beta, const RegulatorSchedule& schedule = {});

/// Modified Bessel function of the second kind, order zero, for x > 0.
double k0_bessel(double x);

// ---------------------------------------------------------------------------
// Log-kernel regularization of ∫ f(x)/xⁿ dx

/// Value and derivatives 0..4 at one point.
using Jet = std::array<double, 5>;

/// Integrand with optional analytic derivatives. When `jet` is empty the
/// derivatives come from sixth-order central differences.
struct SmoothIntegrand {
  std::function<double(double)> value;
  std::function<Jet(double)> jet;
  /// Set when f and its first four derivatives vanish at both ends of the
  /// integration interval, so integration by parts leaves no surface terms.
  bool tapered = false;

  Jet derivatives(double x, double step) const;
};

/// C⁴ window: 0 outside [lo_outer, hi_outer], 1 on [lo_inner, hi_inner],
/// degree-9 smoothstep ramps in between. A zero-width ramp is a hard edge.
struct EdgeWindow {
  double lo_outer = 0.0;
  double lo_inner = 0.0;
  double hi_inner = 0.0;
  double hi_outer = 0.0;

  /// Ramps over the outer `fraction` of [lo, hi] at each end.
  static EdgeWindow inside(double lo, double hi, double fraction);
  /// Ramps of total width fraction·|edge| centred on each edge.
  static EdgeWindow centred(double lo, double hi, double fraction);

  Jet jet(double x) const;
  double operator()(double x) const { return jet(x)[0]; }
};

/// Degree-9 smoothstep 126t⁵ − 420t⁶ + 540t⁷ − 315t⁸ + 70t⁹ and derivatives.
Jet smoothstep(double t);

/// f·w with the Leibniz rule applied to analytic derivatives when f has them.
SmoothIntegrand with_taper(SmoothIntegrand f, const EdgeWindow& window);
/// Shorthand for the default taper over the outer fraction of [lo, hi].
SmoothIntegrand with_taper(SmoothIntegrand f, double lo, double hi, double fraction = 0.1);

/// Central-difference derivatives of orders 0..4, sixth order in the step.
Jet central_differences(const std::function<double(double)>& f, double x, double step);

/// ∫_lo^hi ln(x²) g(x) dx for lo ≤ 0 ≤ hi, by subtracting g(0) on each side
/// and adding the analytic ∫ ln x² = 2L(ln L − 1).
QuadResult log_weighted_integral(const std::function<double(double)>& g, double lo, double hi,
                                 const QuadOptions& opts = {});

/// Regularized ∫ f/xⁿ over [lo, hi] ∋ 0 for n ∈ {2, 4}:
///   n = 2: −½ ∫ ln x² f″,    n = 4: −(1/12) ∫ ln x² f⁗.
/// Requires a tapered integrand (vanishing surface terms).
QuadResult log_kernel_integral(const SmoothIntegrand& f, int n, double lo, double hi,
                               const QuadOptions& opts = {});

/// Hard-interval form with the surface terms dropped: −kₙ ∫ ln x² f⁽ⁿ⁾ w over
/// the window's support, where w smooths the two edges. f need not vanish at
/// the edges; the window cuts the differentiated integrand instead.
QuadResult log_kernel_integral(const SmoothIntegrand& f, int n, const EdgeWindow& window,
                               const QuadOptions& opts = {});

}  // namespace vacfocus::quadrature
