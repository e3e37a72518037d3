#include "vacfocus/observables.hpp"

#include "vacfocus/multiray.hpp"
#include "vacfocus/series.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vacfocus::observables {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCritical = multiray::kCriticalAngle;
/// Below this |ξ₁| the integrand comes from the exact series; above it from
/// jets through the root-found conjugate, whose ξ₁/Δcos quotient loses
/// about 1e-14/ξ₁⁴ to cancellation.
constexpr double kSeriesSwitch = 0.1;

bool is_e_class(ObservableKind k) { return k != ObservableKind::phi_sq; }

/// Factor converting ⟨E²⟩ into the other E-class quantities.
double e_class_weight(ObservableKind k) {
  switch (k) {
    case ObservableKind::E_sq:
    case ObservableKind::B_sq:
    case ObservableKind::rho_EM:
      return 1.0;
    case ObservableKind::phidot_sq:
    case ObservableKind::rho_scalar:
      return 0.5;
    case ObservableKind::phi_sq:
      break;
  }
  throw std::invalid_argument("phi_sq is not an E-class quantity");
}

/// value = c·½·M·Jₙ/aⁿ, where Jₙ is the regularized ∫dξ₁/Δcosⁿ, M the
/// frequency moment at unit Δℓ and ½ undoes the double counting of pairs.
struct Prefactor {
  double c = 0.0;
  double moment = 0.0;
};

Prefactor prefactor(ObservableKind kind, Geometry g) {
  const bool e = is_e_class(kind);
  switch (g) {
    case Geometry::revolution:
      return e ? Prefactor{1.0 / (2 * kPi * kPi), quadrature::omega_moment(3, 1.0)}
               : Prefactor{1.0 / (4 * kPi * kPi), quadrature::omega_moment(1, 1.0)};
    case Geometry::cylinder:
      // One transverse integral over the cylinder axis turns the frequency
      // moments into K₀ moments; the (−4, 24) weights come from the ω-power.
      return e ? Prefactor{1.0 / (2 * kPi * kPi * kPi), 24.0 * quadrature::bessel_moment(2, 1.0)}
               : Prefactor{1.0 / (4 * kPi * kPi * kPi), -4.0 * quadrature::bessel_moment(1, 1.0)};
    case Geometry::flat_plate:
      break;
  }
  throw std::invalid_argument("flat_plate has no conjugate-pair prefactor");
}

double kernel_constant(int n) { return n == 2 ? 0.5 : 1.0 / 12.0; }

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// ∫_{−ξ₀}^{ξ₀} ln ξ² ξʲ dξ for even j.
double log_power_integral(int j, double xi0) {
  const double p = j + 1.0;
  return 4.0 * std::pow(xi0, p) / p * (std::log(xi0) - 1.0 / p);
}

/// Taylor coefficients of sinθ′(1 + cosθ′) = sinθ′ + ½ sin2θ′ about θ′ = φ.
std::vector<double> incident_curve_taylor(double phi, std::size_t order) {
  auto [s1, c1] = sin_cos_taylor(std::sin(phi), std::cos(phi), order);
  auto [s2, c2] = sin_cos_taylor(std::sin(2 * phi), std::cos(2 * phi), order);
  std::vector<double> g(order + 1);
  double scale = 0.5;
  for (std::size_t k = 0; k <= order; ++k) {
    g[k] = s1[k] + scale * s2[k];
    scale *= 2.0;
  }
  return g;
}

quadrature::Jet jet_from_series(const std::vector<double>& c, double xi) {
  quadrature::Jet j{};
  for (std::size_t d = 0; d <= 4; ++d) {
    double sum = 0.0;
    for (std::size_t m = c.size(); m-- > d;) {
      double falling = 1.0;
      for (std::size_t i = 0; i < d; ++i) falling *= static_cast<double>(m - i);
      sum = sum * xi + falling * c[m];
    }
    j[d] = sum;
  }
  return j;
}

quadrature::Jet jet_from_conjugate(int power, double x1) {
  constexpr std::size_t order = 4;
  const double x2 = multiray::conjugate_of(x1);
  const double phi1 = kCritical + x1;
  const double phi2 = kCritical + x2;
  const std::vector<double> g1 = incident_curve_taylor(phi1, order);
  const std::vector<double> g2 = incident_curve_taylor(phi2, order);

  // ξ₂(x₁ + t) = x₂ + δ(t), fixed order by order from g(φ₂ + δ) = g(φ₁ + t).
  Series<double> delta(order);
  for (std::size_t k = 1; k <= order; ++k) {
    const Series<double> lhs = compose(g2, delta);
    delta[k] = (g1[k] - lhs[k]) / g2[1];
  }

  auto [s1, c1] = sin_cos_taylor(std::sin(phi1), std::cos(phi1), order);
  auto [s2, c2] = sin_cos_taylor(std::sin(phi2), std::cos(phi2), order);
  Series<double> d = Series<double>(c1) - compose(c2, delta);
  d[0] = multiray::delta_cos(x1, x2);

  const Series<double> u = Series<double>::variable(order, x1) * d.inverse();
  const Series<double> f = u.pow(static_cast<unsigned>(power));
  quadrature::Jet j{};
  for (std::size_t k = 0; k <= order; ++k) j[k] = f[k] * factorial(static_cast<int>(k));
  return j;
}

const std::vector<double>& series_doubles(int power) {
  static const auto table = [] {
    const ExpansionCoefficients& e = integrand_series();
    std::array<std::vector<double>, 2> t;
    for (const auto& c : e.A) t[0].push_back(c.to_double());
    for (const auto& c : e.B) t[1].push_back(c.to_double());
    return t;
  }();
  return table[power == 2 ? 0 : 1];
}

// Through ξ⁶: enough for the closed form and its next-term error bar, and
// cheap enough that closed-form calls never wait for the full table.
const std::vector<double>& closed_form_doubles(int power) {
  static const auto table = [] {
    const ExpansionCoefficients e = expansion_coefficients(6);
    std::array<std::vector<double>, 2> t;
    for (const auto& c : e.A) t[0].push_back(c.to_double());
    for (const auto& c : e.B) t[1].push_back(c.to_double());
    return t;
  }();
  return table[power == 2 ? 0 : 1];
}

void check_inputs(double a, double xi0) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("distance a must be positive");
  }
  if (!(xi0 >= 0.0) || !(xi0 < 2 * kPi / 3)) {
    throw std::invalid_argument("rim excess xi0 must lie in [0, 2pi/3)");
  }
}

VacuumObservable evaluate(ObservableKind kind, Geometry g, double a, double xi0, Method method,
                          const NumericControls& controls) {
  check_inputs(a, xi0);
  if (g == Geometry::flat_plate) {
    throw std::invalid_argument("flat_plate: use flat_plate_E_sq");
  }
  VacuumObservable out{kind, g, a, xi0, 0.0, 0.0, method, Status::ok};
  if (xi0 == 0.0) {
    out.status = Status::sub_critical;
    return out;
  }
  const int n = is_e_class(kind) ? 4 : 2;
  const Prefactor pf = prefactor(kind, g);
  const double scale = pf.c * 0.5 * pf.moment / std::pow(a, n);

  if (method == Method::closed_form) {
    const auto& f = closed_form_doubles(n);
    // Only the ξ^{m−n} pieces with m − n even survive the symmetric interval.
    auto term = [&](int m) {
      return -kernel_constant(n) * f[m] * factorial(m) / factorial(m - n) *
             log_power_integral(m - n, xi0);
    };
    out.value = scale * term(n);
    out.error = std::abs(scale * term(n + 2));
    return out;
  }

  const double tau = controls.taper_width;
  if (!(tau >= 0.0) || !(2 * tau < 1.0)) {
    throw std::invalid_argument("taper width must lie in [0, 0.5)");
  }
  if (xi0 * (1.0 + tau) >= kCritical) {
    throw std::domain_error("numeric quadrature needs xi0*(1 + 2*taper) below pi/3");
  }
  const auto r1 = log_kernel_pair_integral(n, xi0, tau, controls.quad);
  const auto r2 = log_kernel_pair_integral(n, xi0, 2 * tau, controls.quad);
  out.value = scale * r1.value;
  out.error = std::abs(scale) * (r1.error + std::abs(r2.value - r1.value));
  return out;
}

}  // namespace

const char* to_string(ObservableKind k) {
  switch (k) {
    case ObservableKind::phi_sq: return "phi_sq";
    case ObservableKind::phidot_sq: return "phidot_sq";
    case ObservableKind::E_sq: return "E_sq";
    case ObservableKind::B_sq: return "B_sq";
    case ObservableKind::rho_scalar: return "rho_scalar";
    case ObservableKind::rho_EM: return "rho_EM";
  }
  return "?";
}

const char* to_string(Geometry g) {
  switch (g) {
    case Geometry::revolution: return "revolution";
    case Geometry::cylinder: return "cylinder";
    case Geometry::flat_plate: return "flat_plate";
  }
  return "?";
}

const char* to_string(Method m) {
  return m == Method::closed_form ? "closed_form" : "numeric_quadrature";
}

const char* to_string(Status s) { return s == Status::ok ? "ok" : "sub_critical"; }

Geometry geometry_from_string(const std::string& name) {
  if (name == "revolution") return Geometry::revolution;
  if (name == "cylinder") return Geometry::cylinder;
  if (name == "flat_plate") return Geometry::flat_plate;
  throw std::invalid_argument("unknown geometry '" + name + "'");
}

Method method_from_string(const std::string& name) {
  if (name == "closed_form") return Method::closed_form;
  if (name == "numeric" || name == "numeric_quadrature") return Method::numeric_quadrature;
  throw std::invalid_argument("unknown method '" + name + "'");
}

ExpansionCoefficients expansion_coefficients(std::size_t order) {
  if (order < 4) {
    throw std::invalid_argument("expansion_coefficients: order must be at least 4");
  }
  // Δcos/ξ₁ to order N needs the conjugate series to order N + 1.
  const std::size_t n = order + 1;
  // A fresh derivation at the needed order; low orders cost milliseconds.
  const multiray::SeriesCoefficients table = multiray::derive_series_coefficients(n);

  const QSqrt3 sin_c(0, Rational(1, 2));
  const QSqrt3 cos_c(Rational(1, 2));
  auto [sin_t, cos_t] = sin_cos_taylor(sin_c, cos_c, n);
  const Series<QSqrt3> xi2(
      std::vector<QSqrt3>(table.conjugate.begin(), table.conjugate.begin() + n + 1));
  const Series<QSqrt3> d = Series<QSqrt3>(cos_t) - compose(cos_t, xi2);
  const Series<QSqrt3> u = d.divide_by_variable().inverse();
  const Series<QSqrt3> a = u * u;
  const Series<QSqrt3> b = a * a;
  return {a.coefficients(), b.coefficients()};
}

const ExpansionCoefficients& integrand_series() {
  static const ExpansionCoefficients table = expansion_coefficients(kIntegrandSeriesOrder);
  return table;
}

quadrature::Jet pair_integrand(int power, double xi) {
  if (power != 2 && power != 4) {
    throw std::invalid_argument("pair_integrand: power must be 2 or 4");
  }
  if (std::abs(xi) <= kSeriesSwitch) {
    return jet_from_series(series_doubles(power), xi);
  }
  return jet_from_conjugate(power, xi);
}

quadrature::QuadResult log_kernel_pair_integral(int n, double xi0, double taper_width,
                                                const quadrature::QuadOptions& opts) {
  if (!(xi0 > 0.0)) {
    throw std::invalid_argument("log_kernel_pair_integral: xi0 must be positive");
  }
  quadrature::SmoothIntegrand f;
  f.value = [n](double x) { return pair_integrand(n, x)[0]; };
  f.jet = [n](double x) { return pair_integrand(n, x); };
  const auto window = quadrature::EdgeWindow::centred(-xi0, xi0, taper_width);
  return quadrature::log_kernel_integral(f, n, window, opts);
}

double geometry_factor(ObservableKind kind, Geometry g) {
  if (g == Geometry::revolution) return 1.0;
  if (g == Geometry::flat_plate) {
    throw std::invalid_argument("geometry_factor: flat_plate is not a parabolic geometry");
  }
  const Prefactor cyl = prefactor(kind, Geometry::cylinder);
  const Prefactor rev = prefactor(kind, Geometry::revolution);
  return (cyl.c * cyl.moment) / (rev.c * rev.moment);
}

double closed_form_coefficient(ObservableKind kind, Geometry g) {
  const int n = is_e_class(kind) ? 4 : 2;
  const Prefactor pf = prefactor(kind, g);
  // 4ξ₀(ln ξ₀ − 1) = −4·ξ₀(1 − ln ξ₀).
  const double base = pf.c * 0.5 * pf.moment * -kernel_constant(n) * closed_form_doubles(n)[n] *
                      factorial(n) * -4.0;
  return is_e_class(kind) ? base * e_class_weight(kind) : base;
}

VacuumObservable phi_sq(Geometry g, double a, double xi0, Method method,
                        const NumericControls& controls) {
  return evaluate(ObservableKind::phi_sq, g, a, xi0, method, controls);
}

VacuumObservable E_sq(Geometry g, double a, double xi0, Method method,
                      const NumericControls& controls) {
  return evaluate(ObservableKind::E_sq, g, a, xi0, method, controls);
}

VacuumObservable flat_plate_E_sq(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("flat_plate_E_sq: z must be positive");
  }
  const double z2 = z * z;
  return {ObservableKind::E_sq, Geometry::flat_plate, z, 0.0, 3.0 / (16 * kPi * kPi * z2 * z2),
          0.0, Method::closed_form, Status::ok};
}

VacuumObservable related_quantity(const VacuumObservable& base, ObservableKind kind) {
  if (is_e_class(base.kind) != is_e_class(kind)) {
    throw std::invalid_argument(std::string("cannot convert ") + to_string(base.kind) + " to " +
                                to_string(kind));
  }
  VacuumObservable out = base;
  out.kind = kind;
  if (is_e_class(kind)) {
    const double f = e_class_weight(kind) / e_class_weight(base.kind);
    out.value *= f;
    out.error *= f;
  }
  return out;
}

}  // namespace vacfocus::observables
