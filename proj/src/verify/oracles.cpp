#include "vacfocus/oracles.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace vacfocus::oracles {

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

const Big& big_pi() {
  static const Big v = boost::math::constants::pi<Big>();
  return v;
}

Big critical() { return big_pi() / 3; }

Big incident_curve(const Big& y) {
  const Big phi = critical() + y;
  return sin(phi) * (1 + cos(phi));
}

Big incident_curve_slope(const Big& y) {
  const Big phi = critical() + y;
  return cos(phi) + cos(2 * phi);
}

Big conjugate_big(const Big& x) {
  const Big target = incident_curve(x);
  Big y = -x;
  const Big eps = Big("1e-48");
  for (int it = 0; it < 100; ++it) {
    const Big step = (incident_curve(y) - target) / incident_curve_slope(y);
    y -= step;
    if (abs(step) < eps * abs(x)) break;
  }
  return y;
}

Big pair_value(int power, const Big& x) {
  const Big y = conjugate_big(x);
  const Big d = cos(critical() + x) - cos(critical() + y);
  return pow(x / d, power);
}

}  // namespace

double conjugate_high_precision(double xi1) {
  if (xi1 == 0.0 || std::abs(xi1) > 0.9) {
    throw std::invalid_argument("conjugate_high_precision: need 0 < |xi1| <= 0.9");
  }
  return static_cast<double>(conjugate_big(Big(xi1)));
}

std::vector<double> taylor_fit_coefficients(int power, int degree) {
  if (degree < 0 || degree > 30) {
    throw std::invalid_argument("taylor_fit_coefficients: degree must be in [0, 30]");
  }
  constexpr int N = 48;
  const Big r("0.25");
  std::vector<Big> values(N);
  for (int j = 0; j < N; ++j) {
    const Big node = r * cos(big_pi() * (j + Big("0.5")) / N);
    values[j] = pair_value(power, node);
  }
  std::vector<Big> cheb(N);
  for (int k = 0; k < N; ++k) {
    Big s = 0;
    for (int j = 0; j < N; ++j) s += values[j] * cos(big_pi() * k * (j + Big("0.5")) / N);
    cheb[k] = s * 2 / N;
  }
  cheb[0] /= 2;

  // T_k coefficient rows by T_{k+1} = 2tT_k − T_{k−1}.
  std::vector<std::vector<Big>> t(N, std::vector<Big>(N, Big(0)));
  t[0][0] = 1;
  if (N > 1) t[1][1] = 1;
  for (int k = 1; k + 1 < N; ++k) {
    for (int i = 0; i < N; ++i) {
      Big v = -t[k - 1][i];
      if (i > 0) v += 2 * t[k][i - 1];
      t[k + 1][i] = v;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(degree) + 1);
  Big scale = 1;
  for (int i = 0; i <= degree; ++i) {
    Big m = 0;
    for (int k = i; k < N; ++k) m += cheb[k] * t[k][i];
    out[static_cast<std::size_t>(i)] = static_cast<double>(m / scale);
    scale *= r;
  }
  return out;
}

long double golden_section_argmax(const std::function<long double(long double)>& f,
                                  long double lo, long double hi) {
  const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double c = hi - inv_phi * (hi - lo);
  long double d = lo + inv_phi * (hi - lo);
  long double fc = f(c);
  long double fd = f(d);
  for (int it = 0; it < 200 && hi - lo > 1e-18L; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5L * (lo + hi);
}

double omega_moment_regulated_closed(int n, double delta_ell, double alpha) {
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  const std::complex<double> z(alpha, -delta_ell);
  return (fact / std::pow(z, n + 1)).real();
}

double bessel_moment1_regulated_closed(double alpha, double beta) {
  const double d = alpha * alpha - beta * beta;
  return (alpha / std::sqrt(d) * std::acosh(alpha / beta) - 1.0) / d;
}

quadrature::Extrapolation excision_finite_part(const quadrature::SmoothIntegrand& f, int n,
                                               double L, int levels) {
  if (n != 2 && n != 4) {
    throw std::invalid_argument("excision_finite_part: n must be 2 or 4");
  }
  const double step = L * 1e-3;
  const quadrature::Jet at0 = f.derivatives(0.0, step);
  auto even = [&](double x) { return (f.value(x) + f.value(-x)) / std::pow(x, n); };
  const quadrature::QuadOptions opts{1e-15, 1e-14, 20000};
  std::vector<double> samples;
  double eps = 0.1 * L;
  for (int k = 0; k < levels; ++k, eps *= 0.5) {
    double v = quadrature::integrate(even, eps, L, opts).value;
    if (n == 2) {
      v -= 2.0 * at0[0] / eps;
    } else {
      v -= 2.0 * at0[0] / (3.0 * eps * eps * eps) + at0[2] / eps;
    }
    samples.push_back(v);
  }
  return quadrature::richardson(samples, 0.5, 1, 2);
}

double trapezoid_log_kernel(const quadrature::SmoothIntegrand& f, int n, double L, int points,
                            const std::vector<double>& kinks) {
  const double step = L * 1e-3;
  const double k = n == 2 ? 0.5 : 1.0 / 12.0;
  // Panel ends in t, where x = L t⁴.
  std::vector<double> ends = {0.0};
  for (double x : kinks) {
    if (x > 0.0 && x < L) ends.push_back(std::pow(x / L, 0.25));
  }
  ends.push_back(1.0);
  std::sort(ends.begin(), ends.end());
  auto side = [&](double sign) {
    // The t³ ln t factor kills the endpoint singularity.
    auto g = [&](double t) {
      if (t == 0.0) return 0.0;
      const double x = L * t * t * t * t;
      return std::log(x * x) * f.derivatives(sign * x, step)[static_cast<std::size_t>(n)] * 4.0 *
             L * t * t * t;
    };
    // Trapezoid sums on h and 2h share nodes; one Richardson step removes h².
    double fine = 0.0;
    double coarse = 0.0;
    for (std::size_t p = 0; p + 1 < ends.size(); ++p) {
      const double lo = ends[p];
      const double hi = ends[p + 1];
      const int m = 2 * std::max(1, static_cast<int>(std::lround(0.5 * points * (hi - lo))));
      const double h = (hi - lo) / m;
      double even = 0.5 * (g(lo) + g(hi));
      double odd = 0.0;
      for (int i = 1; i < m; ++i) (i % 2 ? odd : even) += g(lo + i * h);
      fine += (even + odd) * h;
      coarse += even * 2.0 * h;
    }
    return (4.0 * fine - coarse) / 3.0;
  };
  return -k * (side(1.0) + side(-1.0));
}

double k0_series_high_precision(double x) {
  if (!(x > 0.0) || x > 12.0) {
    throw std::invalid_argument("k0_series_high_precision: need 0 < x <= 12");
  }
  const Big bx(x);
  const Big q = bx * bx / 4;
  Big term = 1;
  Big i0 = 1;
  Big tail = 0;
  Big harmonic = 0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (Big(k) * k);
    harmonic += Big(1) / k;
    i0 += term;
    tail += term * harmonic;
    if (term < Big("1e-60")) break;
  }
  const Big gamma = boost::math::constants::euler<Big>();
  return static_cast<double>(-(log(bx / 2) + gamma) * i0 + tail);
}

}  // namespace vacfocus::oracles
