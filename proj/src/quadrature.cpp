#include "vacfocus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

namespace vacfocus::quadrature {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

// Kronrod abscissae (descending) and weights; Gauss-7 weights sit on the odd
// Kronrod nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    resk += kWgk[j] * (f1[j] + f2[j]);
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) {
      resg += kWg[j / 2] * (f1[j] + f2[j]);
    }
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  resk *= half;
  resasc *= std::abs(half);
  resabs *= std::abs(half);
  double err = std::abs((resk - resg * half));
  // Error scaling as in QUADPACK qk15.
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double round = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, round);
  return {lo, hi, resk, err};
}

void check_order(int n, const char* what) {
  if (n != 1 && n != 3) {
    throw std::invalid_argument(std::string(what) + ": frequency moment order must be 1 or 3");
  }
}

void check_bessel_order(int p) {
  if (p != 1 && p != 2) {
    throw std::invalid_argument("bessel moment order must be 1 or 2");
  }
}

// Polynomial helpers for the smoothstep.
constexpr std::array<double, 10> kSmoothstep = {0, 0, 0, 0, 0, 126, -420, 540, -315, 70};

double poly_derivative_at(const std::array<double, 10>& c, int order, double t) {
  double r = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= order; --k) {
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= (k - j);
    r = r * t + c[k] * falling;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadOptions& opts) {
  if (lo == hi) return {};
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("integrate: interval must be finite");
  }
  std::priority_queue<Panel> heap;
  Panel first = gk15(f, lo, hi);
  double total = first.value;
  double total_err = first.error;
  heap.push(first);
  int evals = 15;
  int intervals = 1;
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) &&
         intervals < opts.max_intervals) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid == worst.lo || mid == worst.hi) {
      heap.push(worst);
      break;
    }
    Panel left = gk15(f, worst.lo, mid);
    Panel right = gk15(f, mid, worst.hi);
    evals += 30;
    ++intervals;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  double value = 0.0;
  double error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, evals};
}

// ---------------------------------------------------------------------------

Extrapolation richardson(std::span<const double> samples, double ratio, int first_power,
                         int power_step) {
  if (samples.empty()) {
    throw std::invalid_argument("richardson: no samples");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("richardson: ratio must lie in (0, 1)");
  }
  const std::size_t n = samples.size();
  std::vector<std::vector<double>> t(n);
  for (std::size_t k = 0; k < n; ++k) {
    t[k].resize(k + 1);
    t[k][0] = samples[k];
    for (std::size_t j = 1; j <= k; ++j) {
      const double p = first_power + static_cast<double>(j - 1) * power_step;
      const double factor = std::pow(ratio, -p) - 1.0;
      t[k][j] = t[k][j - 1] + (t[k][j - 1] - t[k - 1][j - 1]) / factor;
    }
  }
  Extrapolation out;
  out.samples.assign(samples.begin(), samples.end());
  out.value = t[n - 1][n - 1];
  if (n == 1) {
    out.error = std::abs(out.value);
  } else {
    out.error = std::max(std::abs(out.value - t[n - 1][n - 2]), std::abs(out.value - t[n - 2][n - 2]));
  }
  return out;
}

std::vector<double> RegulatorSchedule::values() const {
  if (!(start > 0.0) || !(ratio > 0.0 && ratio < 1.0) || levels < 1) {
    throw std::invalid_argument("regulator schedule must be decreasing with at least one level");
  }
  std::vector<double> v(static_cast<std::size_t>(levels));
  double x = start;
  for (auto& e : v) {
    e = x;
    x *= ratio;
  }
  return v;
}

// ---------------------------------------------------------------------------

double omega_moment(int n, double delta_ell) {
  check_order(n, "omega_moment");
  if (delta_ell == 0.0) {
    throw std::domain_error("omega_moment: coincident rays (delta_ell = 0) diverge");
  }
  const double d2 = delta_ell * delta_ell;
  return n == 1 ? -1.0 / d2 : 6.0 / (d2 * d2);
}

double omega_moment_regulated(int n, double delta_ell, double alpha) {
  check_order(n, "omega_moment_regulated");
  if (delta_ell == 0.0 || !(alpha > 0.0)) {
    throw std::domain_error("omega_moment_regulated: need delta_ell != 0 and alpha > 0");
  }
  const double k = std::abs(delta_ell);
  const double panel = kPi / k;
  // ∫ωⁿe^{−αω} = n!/α^{n+1} bounds the cancellation; stop once the envelope
  // is negligible against it.
  const double envelope_scale = (n == 1 ? 1.0 : 6.0) / std::pow(alpha, n + 1);
  double sum = 0.0;
  double compensation = 0.0;
  const double peak = n / alpha;
  for (long m = 0;; ++m) {
    const double w0 = static_cast<double>(m) * panel;
    const double sign = m % 2 ? -1.0 : 1.0;
    // k·w0 is a multiple of π, so cos(kw) = ±cos(ku) with u = w − w0. This
    // keeps the cosine argument small and free of rounding at large w.
    auto integrand = [&](double u) {
      const double w = w0 + u;
      return sign * std::pow(w, n) * std::cos(u * k) * std::exp(-alpha * w);
    };
    const Panel p = gk15(integrand, 0.0, panel);
    const double y = p.value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    const double w1 = w0 + panel;
    if (w1 > peak && std::pow(w1, n) * std::exp(-alpha * w1) * panel < 1e-18 * envelope_scale * alpha) {
      break;
    }
  }
  return sum;
}

Extrapolation omega_moment_numeric(int n, double delta_ell, const RegulatorSchedule& schedule) {
  check_order(n, "omega_moment_numeric");
  std::vector<double> samples;
  for (double s : schedule.values()) {
    samples.push_back(omega_moment_regulated(n, delta_ell, s * std::abs(delta_ell)));
  }
  return richardson(samples, schedule.ratio, 2, 2);
}

// ---------------------------------------------------------------------------

double bessel_moment(int p, double beta) {
  check_bessel_order(p);
  if (!(beta > 0.0)) {
    throw std::domain_error("bessel_moment: beta must be positive");
  }
  return p == 1 ? 1.0 / (3.0 * beta * beta) : 4.0 / (15.0 * beta * beta * beta);
}

double bessel_moment_regulated(int p, double alpha, double beta) {
  check_bessel_order(p);
  if (!(beta > 0.0) || !(alpha >= beta)) {
    throw std::domain_error("bessel_moment_regulated: need alpha >= beta > 0");
  }
  // Substitute u = βx: β^{−(p+1)} ∫ u^p e^{−(α/β)u} K₀(u) du.
  const double ratio = alpha / beta;
  auto integrand = [&](double u) {
    return std::pow(u, p) * std::exp(-ratio * u) * k0_bessel(u);
  };
  QuadOptions opts{1e-16, 1e-14, 4000};
  // The integrand decays like e^{−(1+α/β)u}; u = 60 is far past double range.
  double total = 0.0;
  for (auto [lo, hi] : {std::pair{0.0, 1.0}, std::pair{1.0, 8.0}, std::pair{8.0, 60.0}}) {
    total += integrate(integrand, lo, hi, opts).value;
  }
  return total / std::pow(beta, p + 1);
}

Extrapolation bessel_moment_numeric(int p, double beta, const RegulatorSchedule& schedule) {
  check_bessel_order(p);
  std::vector<double> samples;
  for (double d : schedule.values()) {
    samples.push_back(bessel_moment_regulated(p, beta * (1.0 + d), beta));
  }
  return richardson(samples, schedule.ratio, 1, 1);
}

double k0_bessel(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("k0_bessel: x must be positive");
  }
  if (x <= 2.0) {
    // K₀ = −(ln(x/2) + γ) I₀ + Σ_{k≥1} (x²/4)^k H_k/(k!)²
    const double q = 0.25 * x * x;
    double term = 1.0;
    double i0 = 1.0;
    double tail = 0.0;
    double harmonic = 0.0;
    for (int k = 1; k < 60; ++k) {
      term *= q / (static_cast<double>(k) * k);
      harmonic += 1.0 / k;
      i0 += term;
      tail += term * harmonic;
      if (term < 1e-18 * i0) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0 + tail;
  }
  if (x < 30.0) {
    // Steed's continued fraction (Temme's CF2) for ν = 0.
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 10000; ++i) {
      a -= 2 * i;
      c = -a * c / (i + 1.0);
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < 1e-17) break;
    }
    return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  }
  // Hankel asymptotic series; at x ≥ 30 the smallest term is far below 1e-16.
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(odd * odd) / (k * 8.0 * x);
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

// ---------------------------------------------------------------------------

Jet smoothstep(double t) {
  Jet j{};
  if (t <= 0.0) return j;
  if (t >= 1.0) {
    j[0] = 1.0;
    return j;
  }
  for (int k = 0; k <= 4; ++k) j[k] = poly_derivative_at(kSmoothstep, k, t);
  return j;
}

EdgeWindow EdgeWindow::inside(double lo, double hi, double fraction) {
  if (!(hi > lo) || !(fraction >= 0.0 && fraction < 0.5)) {
    throw std::invalid_argument("EdgeWindow::inside: need lo < hi and fraction in [0, 0.5)");
  }
  const double w = fraction * (hi - lo);
  return {lo, lo + w, hi - w, hi};
}

EdgeWindow EdgeWindow::centred(double lo, double hi, double fraction) {
  if (!(hi > lo) || !(fraction >= 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("EdgeWindow::centred: need lo < hi and fraction in [0, 1)");
  }
  const double wl = 0.5 * fraction * std::abs(lo);
  const double wh = 0.5 * fraction * std::abs(hi);
  return {lo - wl, lo + wl, hi - wh, hi + wh};
}

Jet EdgeWindow::jet(double x) const {
  Jet j{};
  if (x <= lo_outer || x >= hi_outer) return j;
  if (x < lo_inner) {
    const double w = lo_inner - lo_outer;
    const Jet s = smoothstep((x - lo_outer) / w);
    double scale = 1.0;
    for (int k = 0; k <= 4; ++k) {
      j[k] = s[k] * scale;
      scale /= w;
    }
    return j;
  }
  if (x > hi_inner) {
    const double w = hi_outer - hi_inner;
    const Jet s = smoothstep((hi_outer - x) / w);
    double scale = 1.0;
    for (int k = 0; k <= 4; ++k) {
      j[k] = s[k] * scale;
      scale /= -w;
    }
    return j;
  }
  j[0] = 1.0;
  return j;
}

Jet central_differences(const std::function<double(double)>& f, double x, double h) {
  // Sixth-order stencils on x ± kh, k ≤ 4.
  static constexpr std::array<double, 9> d1 = {0, -1.0 / 60, 3.0 / 20, -3.0 / 4, 0,
                                               3.0 / 4, -3.0 / 20, 1.0 / 60, 0};
  static constexpr std::array<double, 9> d2 = {0, 1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18,
                                               3.0 / 2, -3.0 / 20, 1.0 / 90, 0};
  static constexpr std::array<double, 9> d3 = {-7.0 / 240, 3.0 / 10, -169.0 / 120, 61.0 / 30, 0,
                                               -61.0 / 30, 169.0 / 120, -3.0 / 10, 7.0 / 240};
  static constexpr std::array<double, 9> d4 = {7.0 / 240, -2.0 / 5, 169.0 / 60, -122.0 / 15,
                                               91.0 / 8, -122.0 / 15, 169.0 / 60, -2.0 / 5,
                                               7.0 / 240};
  std::array<double, 9> v{};
  for (int k = -4; k <= 4; ++k) v[k + 4] = f(x + k * h);
  Jet j{};
  j[0] = v[4];
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int i = 0; i < 9; ++i) {
    s1 += d1[i] * v[i];
    s2 += d2[i] * v[i];
    s3 += d3[i] * v[i];
    s4 += d4[i] * v[i];
  }
  j[1] = s1 / h;
  j[2] = s2 / (h * h);
  j[3] = s3 / (h * h * h);
  j[4] = s4 / (h * h * h * h);
  return j;
}

Jet SmoothIntegrand::derivatives(double x, double step) const {
  if (jet) return jet(x);
  if (!value) {
    throw std::invalid_argument("SmoothIntegrand: no value function");
  }
  return central_differences(value, x, step);
}

SmoothIntegrand with_taper(SmoothIntegrand f, const EdgeWindow& window) {
  SmoothIntegrand out;
  auto base_value = f.value;
  out.value = [base_value, window](double x) { return base_value(x) * window(x); };
  if (f.jet) {
    auto base_jet = f.jet;
    out.jet = [base_jet, window](double x) {
      static constexpr int binom[5][5] = {
          {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
      const Jet a = base_jet(x);
      const Jet w = window.jet(x);
      Jet r{};
      for (int n = 0; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) r[n] += binom[n][k] * a[k] * w[n - k];
      }
      return r;
    };
  }
  out.tapered = true;
  return out;
}

SmoothIntegrand with_taper(SmoothIntegrand f, double lo, double hi, double fraction) {
  return with_taper(std::move(f), EdgeWindow::inside(lo, hi, fraction));
}

QuadResult log_weighted_integral(const std::function<double(double)>& g, double lo, double hi,
                                 const QuadOptions& opts) {
  if (!(lo <= 0.0 && hi >= 0.0) || !(hi > lo)) {
    throw std::invalid_argument("log_weighted_integral: interval must contain 0");
  }
  const double g0 = g(0.0);
  if (!std::isfinite(g0)) {
    throw std::domain_error("log_weighted_integral: integrand not finite at 0");
  }
  auto side = [&](double sign, double length) -> QuadResult {
    if (length == 0.0) return {};
    auto remainder = [&](double u) {
      return std::log(u * u) * (g(sign * u) - g0);
    };
    QuadResult r = integrate(remainder, 0.0, length, opts);
    r.value += g0 * 2.0 * length * (std::log(length) - 1.0);
    return r;
  };
  const QuadResult left = side(-1.0, -lo);
  const QuadResult right = side(1.0, hi);
  return {left.value + right.value, left.error + right.error,
          left.evaluations + right.evaluations + 1};
}

namespace {

double log_kernel_constant(int n) {
  if (n != 2 && n != 4) {
    throw std::invalid_argument("log_kernel_integral: pole order must be 2 or 4");
  }
  return n == 2 ? -0.5 : -1.0 / 12.0;
}

std::function<double(double)> nth_derivative(const SmoothIntegrand& f, int n, double step) {
  return [&f, n, step](double x) {
    const double d = f.derivatives(x, step)[static_cast<std::size_t>(n)];
    if (!std::isfinite(d)) {
      throw std::domain_error("log_kernel_integral: derivative evaluation failed at x = " +
                              std::to_string(x));
    }
    return d;
  };
}

}  // namespace

QuadResult log_kernel_integral(const SmoothIntegrand& f, int n, double lo, double hi,
                               const QuadOptions& opts) {
  const double k = log_kernel_constant(n);
  if (!(lo < 0.0 && hi > 0.0)) {
    throw std::invalid_argument("log_kernel_integral: interval must contain 0 in its interior");
  }
  if (!f.tapered) {
    throw std::invalid_argument(
        "log_kernel_integral: integrand must be tapered so that surface terms vanish");
  }
  QuadResult r = log_weighted_integral(nth_derivative(f, n, (hi - lo) * 1e-3), lo, hi, opts);
  r.value *= k;
  r.error *= std::abs(k);
  return r;
}

QuadResult log_kernel_integral(const SmoothIntegrand& f, int n, const EdgeWindow& window,
                               const QuadOptions& opts) {
  const double k = log_kernel_constant(n);
  const double lo = window.lo_outer;
  const double hi = window.hi_outer;
  if (!(lo < 0.0 && hi > 0.0)) {
    throw std::invalid_argument("log_kernel_integral: interval must contain 0 in its interior");
  }
  const auto derivative = nth_derivative(f, n, (window.hi_inner - window.lo_inner) * 1e-3);
  auto g = [&](double x) {
    const double w = window(x);
    return w == 0.0 ? 0.0 : derivative(x) * w;
  };
  QuadResult r = log_weighted_integral(g, lo, hi, opts);
  r.value *= k;
  r.error *= std::abs(k);
  return r;
}

}  // namespace vacfocus::quadrature
