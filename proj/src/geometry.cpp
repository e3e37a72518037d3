#include "vacfocus/geometry.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace vacfocus::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

void check_reflection_angle(const ParabolicMirror& m, double theta_prime) {
  if (!(theta_prime > 0.0) || theta_prime > m.rim_angle() + kAngleTolerance) {
    throw std::invalid_argument("reflection angle " + std::to_string(theta_prime) +
                                " outside (0, rim] with rim " + std::to_string(m.rim_angle()));
  }
}

}  // namespace

const char* to_string(MirrorKind kind) {
  return kind == MirrorKind::revolution ? "revolution" : "cylinder";
}

MirrorKind mirror_kind_from_string(const char* name) {
  if (std::strcmp(name, "revolution") == 0) return MirrorKind::revolution;
  if (std::strcmp(name, "cylinder") == 0) return MirrorKind::cylinder;
  throw std::invalid_argument(std::string("unknown mirror geometry '") + name + "'");
}

ParabolicMirror ParabolicMirror::make(double b, double xi0, MirrorKind kind) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument("mirror focal parameter b must be positive");
  }
  if (!(xi0 >= 0.0) || !(xi0 < 2 * kPi / 3)) {
    throw std::invalid_argument("rim excess xi0 must lie in [0, 2pi/3)");
  }
  return {b, xi0, kind};
}

double ParabolicMirror::rim_height() const { return b * std::tan(0.5 * rim_angle()); }

AxialPoint AxialPoint::make(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("axial distance a must be positive");
  }
  return {a};
}

double parabola_point(const ParabolicMirror& m, double y) {
  if (std::abs(y) > m.rim_height() * (1 + 1e-15)) {
    throw std::invalid_argument("height " + std::to_string(y) + " lies beyond the mirror rim");
  }
  return (m.b * m.b - y * y) / (2 * m.b);
}

Point2 reflection_point(const ParabolicMirror& m, const AxialPoint& p, double theta_prime) {
  check_reflection_angle(m, theta_prime);
  const double ratio = p.a / m.b;
  const double c = std::cos(theta_prime);
  const double s = std::sin(theta_prime);
  // Distance r from (a, 0) along θ′ solves r²s² + 2bcr + 2ab − b² = 0; this is
  // the rationalized root on the y_i > 0 side.
  const double disc = 1.0 - 2.0 * ratio * s * s;
  if (disc < 0.0) {
    throw std::domain_error("reflected ray does not meet the mirror (negative discriminant)");
  }
  const double denom = c + std::sqrt(disc);
  const double r = m.b * (1.0 - 2.0 * ratio) / denom;
  if (!(denom > 0.0) || !(r > 0.0) || !std::isfinite(r)) {
    throw std::domain_error("reflected ray does not meet the mirror");
  }
  return {p.a + r * c, r * s};
}

ReflectionSolution reflect_exact(const ParabolicMirror& m, const AxialPoint& p,
                                 double theta_prime) {
  const Point2 q = reflection_point(m, p, theta_prime);
  ReflectionSolution sol;
  sol.theta_prime = theta_prime;
  sol.x_i = q.x;
  sol.y_i = q.y;
  sol.alpha_t = std::atan2(m.b, q.y);
  sol.theta = theta_prime - kPi + 2 * sol.alpha_t;
  sol.s1 = std::hypot(q.x - p.a, q.y);
  sol.s2 = (q.x - p.a) / std::cos(sol.theta);
  sol.ell = sol.s1 + sol.s2;
  return sol;
}

double incident_angle_first_order(const ParabolicMirror& m, const AxialPoint& p,
                                  double theta_prime) {
  if (!(theta_prime > 0.0) || !(theta_prime < kPi)) {
    throw std::invalid_argument("first-order incident angle needs 0 < theta' < pi");
  }
  // sin³θ′ secθ′ / (secθ′ − 1) = sinθ′ (1 + cosθ′); the right side has no
  // removable singularity at θ′ = π/2.
  return (p.a / m.b) * std::sin(theta_prime) * (1.0 + std::cos(theta_prime));
}

double exact_incident_angle(const ParabolicMirror& m, const AxialPoint& p, double theta_prime) {
  return reflect_exact(m, p, theta_prime).theta;
}

PathLength path_length(const ParabolicMirror& m, const AxialPoint& p, double theta_prime) {
  check_reflection_angle(m, theta_prime);
  const double c = std::cos(theta_prime);
  // Common bracket b[1 − cosθ′ − (a/b) sin²θ′]/sin²θ′, written without the
  // 0/0 at small θ′: (1 − cos)/sin² = 1/(1 + cos).
  const double common = m.b / (1.0 + c) - p.a;
  PathLength out;
  out.s1 = common;
  out.s2 = c * common;
  out.ell = m.b - p.a * (1.0 + c);
  return out;
}

double path_difference(const AxialPoint& p, double theta1_prime, double theta2_prime) {
  return p.a * (std::cos(theta1_prime) - std::cos(theta2_prime));
}

}  // namespace vacfocus::geometry
