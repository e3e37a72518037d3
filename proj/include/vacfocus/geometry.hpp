#pragma once

#include <numbers>

namespace vacfocus::geometry {

enum class MirrorKind { revolution, cylinder };

const char* to_string(MirrorKind kind);
MirrorKind mirror_kind_from_string(const char* name);

/// Parabola x = (b² − y²)/(2b) with its focus at the origin and vertex at
/// x = b/2. The reflecting surface extends out to the rim angle π/3 + ξ₀
/// measured from the +x axis.
struct ParabolicMirror {
  double b = 1.0;
  double xi0 = 0.0;
  MirrorKind kind = MirrorKind::revolution;

  /// Validated construction: b > 0 and 0 ≤ ξ₀ < 2π/3.
  static ParabolicMirror make(double b, double xi0, MirrorKind kind = MirrorKind::revolution);

  double rim_angle() const { return std::numbers::pi / 3 + xi0; }
  /// Height of the rim above the axis, b·tan(rim/2).
  double rim_height() const;
};

/// Observation point on the symmetry axis, a distance a from the focus.
struct AxialPoint {
  double a = 0.0;

  static AxialPoint make(double a);

  /// First-order (in a/b) formulas are trusted below this ratio; beyond it
  /// callers should warn, not fail.
  static constexpr double kFirstOrderThreshold = 1e-2;
  bool first_order_valid(const ParabolicMirror& m,
                         double threshold = kFirstOrderThreshold) const {
    return a / m.b <= threshold;
  }
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Exact reflected-ray geometry for one reflection angle θ′.
struct ReflectionSolution {
  double theta_prime = 0.0;  ///< reflected-ray angle from the +x axis
  double theta = 0.0;        ///< incident angle, θ = θ′ − π + 2α
  double x_i = 0.0;
  double y_i = 0.0;
  double alpha_t = 0.0;  ///< tangent angle, tan α = b / y_i
  double s1 = 0.0;       ///< reflection point to (a, 0)
  double s2 = 0.0;       ///< line x = a to the reflection point, along the incident ray
  double ell = 0.0;      ///< s1 + s2
};

/// First-order path segments after the ray first crosses x = a.
struct PathLength {
  double s1 = 0.0;
  double s2 = 0.0;
  double ell = 0.0;
};

inline constexpr double kOnParabolaTolerance = 1e-12;  // relative to b
inline constexpr double kAngleTolerance = 1e-10;

/// x on the parabola at height y; rejects |y| beyond the rim.
double parabola_point(const ParabolicMirror& m, double y);

/// Exact intersection of the ray leaving (a, 0) at angle θ′ with the mirror.
Point2 reflection_point(const ParabolicMirror& m, const AxialPoint& p, double theta_prime);

/// Full exact solution (angles, segments, path) without any a/b expansion.
ReflectionSolution reflect_exact(const ParabolicMirror& m, const AxialPoint& p,
                                 double theta_prime);

double incident_angle_first_order(const ParabolicMirror& m, const AxialPoint& p,
                                  double theta_prime);

double exact_incident_angle(const ParabolicMirror& m, const AxialPoint& p, double theta_prime);

/// ℓ = b − a(1 + cos θ′) and its two segments, to first order in a/b.
PathLength path_length(const ParabolicMirror& m, const AxialPoint& p, double theta_prime);

/// Δℓ = a(cos θ₁′ − cos θ₂′).
double path_difference(const AxialPoint& p, double theta1_prime, double theta2_prime);

}  // namespace vacfocus::geometry
