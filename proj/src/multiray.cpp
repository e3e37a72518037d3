#include "vacfocus/multiray.hpp"

#include "vacfocus/roots.hpp"
#include "vacfocus/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vacfocus::multiray {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kBracketGap = 1e-15;

double scaled_incident_angle_derivative(double theta_prime) {
  return std::cos(theta_prime) + std::cos(2 * theta_prime);
}

}  // namespace

double scaled_incident_angle(double theta_prime) {
  return std::sin(theta_prime) * (1.0 + std::cos(theta_prime));
}

double theta_scaled(double xi) { return scaled_incident_angle(kCriticalAngle + xi); }

double theta_scaled_offset(double xi) {
  const double sh = std::sin(0.5 * xi);
  const double s = std::sin(xi);
  return -kSqrt3 * sh * sh - 0.5 * kSqrt3 * s * s + s * sh * sh;
}

double theta_scaled_derivative(double xi) {
  return scaled_incident_angle_derivative(kCriticalAngle + xi);
}

double delta_cos(double xi1, double xi2) {
  return -2.0 * std::sin(kCriticalAngle + 0.5 * (xi1 + xi2)) * std::sin(0.5 * (xi1 - xi2));
}

double locate_incident_angle_maximum() {
  return bracketed_root(scaled_incident_angle_derivative, 0.1, 0.5 * kPi, 0.0).x;
}

double critical_angle() {
  const double located = locate_incident_angle_maximum();
  if (std::abs(located - kCriticalAngle) > 1e-12) {
    throw std::logic_error("incident-angle maximum not at pi/3: " + std::to_string(located));
  }
  return kCriticalAngle;
}

double conjugate_of(double xi) {
  if (xi == 0.0 || !(xi > -kPi / 3) || !(xi < 2 * kPi / 3)) {
    throw std::invalid_argument("conjugate_of: xi must be nonzero and in (-pi/3, 2pi/3)");
  }
  const double target = theta_scaled_offset(xi);
  auto residual = [target](double y) { return theta_scaled_offset(y) - target; };
  double lo = 0.0;
  double hi = 0.0;
  if (xi > 0.0) {
    lo = std::max(-xi, -kPi / 3) + kBracketGap;
    hi = -kBracketGap;
  } else {
    lo = kBracketGap;
    hi = 2 * kPi / 3 - kBracketGap;
  }
  return bracketed_root(residual, lo, hi, 0.0).x;
}

double conjugate_angle(double xi1, double xi0) {
  if (!(xi1 > 0.0) || xi1 > xi0) {
    throw std::invalid_argument("conjugate_angle: need 0 < xi1 <= xi0 (xi1=" +
                                std::to_string(xi1) + ", xi0=" + std::to_string(xi0) + ")");
  }
  return conjugate_of(xi1);
}

std::optional<ConjugateRayPair> conjugate_pair(double xi1, double xi0) {
  if (!(xi0 > 0.0) || xi1 == 0.0 || xi1 > xi0 || !(xi1 > -kPi / 3)) {
    return std::nullopt;
  }
  const double xi2 = conjugate_of(xi1);
  if (xi2 > xi0) {
    return std::nullopt;
  }
  return ConjugateRayPair{xi1, xi2, theta_scaled(xi1), delta_cos(xi1, xi2)};
}

SeriesCoefficients derive_series_coefficients(std::size_t order) {
  if (order < 2) {
    throw std::invalid_argument("derive_series_coefficients: order must be at least 2");
  }
  const std::size_t n = order + 1;
  // sin and cos about π/3 are exact in ℚ(√3).
  const QSqrt3 sin_c(0, Rational(1, 2));
  const QSqrt3 cos_c(Rational(1, 2));
  auto [sin_t, cos_t] = sin_cos_taylor(sin_c, cos_c, n);
  const Series<QSqrt3> s(sin_t);
  Series<QSqrt3> one_plus_c(cos_t);
  one_plus_c[0] += QSqrt3(1);
  const Series<QSqrt3> theta = s * one_plus_c;

  std::vector<QSqrt3> g = theta.coefficients();
  g[0] = QSqrt3(0);
  const Series<QSqrt3> g_series(g);
  const QSqrt3 two_g2 = QSqrt3(2) * g[2];

  // ξ₂ = −ξ₁ + Σ c_k ξ₁^k. The ξ₁^{k+1} coefficient of g(ξ₂) − g(ξ₁) depends
  // on c_k only through −2g₂c_k, so each pass fixes one more coefficient.
  Series<QSqrt3> xi2(n);
  xi2[1] = QSqrt3(-1);
  for (std::size_t k = 2; k <= order; ++k) {
    const Series<QSqrt3> residual = compose(g, xi2) - g_series;
    xi2[k] = residual[k + 1] / two_g2;
  }

  SeriesCoefficients out;
  out.theta = theta.coefficients();
  out.conjugate.assign(xi2.coefficients().begin(), xi2.coefficients().begin() + order + 1);
  return out;
}

const SeriesCoefficients& series_table() {
  static const SeriesCoefficients table = derive_series_coefficients(kSeriesTableOrder);
  return table;
}

double conjugate_series(double xi1, std::size_t order) {
  const auto& table = series_table();
  if (order < 1 || order > table.order()) {
    throw std::invalid_argument("conjugate_series: order must be in [1, " +
                                std::to_string(table.order()) + "]");
  }
  double sum = 0.0;
  for (std::size_t k = order; k >= 1; --k) {
    sum = (sum + table.conjugate[k].to_double()) * xi1;
  }
  return sum;
}

}  // namespace vacfocus::multiray
