#include "cli.hpp"

#include "vacfocus/geometry.hpp"
#include "vacfocus/multiray.hpp"
#include "vacfocus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <thread>

namespace vacfocus::cli {

namespace {

constexpr double kMicron = 1e-4;  // cm

// Runs every task and concatenates the results in task order. The first
// exception (in task order) is rethrown.
std::vector<Row> parallel_rows(const std::vector<std::function<std::vector<Row>()>>& tasks) {
  std::vector<std::vector<Row>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, tasks.size() ? tasks.size() : 1);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < tasks.size(); i += workers) {
        try {
          results[i] = tasks[i]();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  std::vector<Row> out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    std::move(results[i].begin(), results[i].end(), std::back_inserter(out));
  }
  return out;
}

Value optional_value(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

geometry::MirrorKind mirror_kind(observables::Geometry g) {
  if (g == observables::Geometry::flat_plate) {
    throw ConfigError("geometry", "trace needs a parabolic geometry");
  }
  return g == observables::Geometry::cylinder ? geometry::MirrorKind::cylinder
                                              : geometry::MirrorKind::revolution;
}

std::vector<Row> trace_rows(const RunConfig& cfg, double a, double xi0) {
  const auto mirror = geometry::ParabolicMirror::make(cfg.b, xi0, mirror_kind(cfg.geometry));
  const auto point = geometry::AxialPoint::make(a);
  const double lo = std::numbers::pi / 6;
  const double hi = mirror.rim_angle();
  std::vector<Row> rows;
  for (int i = 0; i < cfg.trace_points; ++i) {
    const double tp = lo + (hi - lo) * i / (cfg.trace_points - 1);
    const auto sol = geometry::reflect_exact(mirror, point, tp);
    const double xi = tp - multiray::kCriticalAngle;

    std::string status = "ok";
    std::optional<double> conj;
    std::optional<double> dell;
    if (xi0 == 0.0) {
      status = "sub_critical";
    } else if (xi == 0.0) {
      conj = tp;
      dell = 0.0;
    } else {
      const double xi2 = multiray::conjugate_of(xi);
      if (xi2 <= xi0) {
        conj = multiray::kCriticalAngle + xi2;
        dell = a * multiray::delta_cos(xi, xi2);
      } else {
        status = "no_conjugate";
      }
    }
    Row r;
    r.add("command", std::string("trace"))
        .add("geometry", std::string(observables::to_string(cfg.geometry)))
        .add("b", cfg.b)
        .add("xi0", xi0)
        .add("a", a)
        .add("theta_prime_rad", tp)
        .add("theta_rad", sol.theta)
        .add("x_i", sol.x_i)
        .add("y_i", sol.y_i)
        .add("ell", sol.ell)
        .add("conjugate_theta_prime_rad", optional_value(conj))
        .add("delta_ell", optional_value(dell))
        .add("first_order_valid", point.first_order_valid(mirror))
        .add("status", status)
        .add("units", std::string("lengths in units of b's unit; angles in rad"))
        .add("constants_version", cfg.constants.version);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string observable_units(observables::ObservableKind k) {
  return k == observables::ObservableKind::phi_sq ? "hbar=c=1; length^-2"
                                                  : "hbar=c=1; length^-4";
}

Row observable_row(const RunConfig& cfg, const observables::VacuumObservable& v,
                   std::optional<double> ratio) {
  Row r;
  r.add("command", std::string("observables"))
      .add("geometry", std::string(observables::to_string(v.geometry)))
      .add("a", v.a)
      .add("xi0", v.xi0)
      .add("kind", std::string(observables::to_string(v.kind)))
      .add("method", std::string(observables::to_string(v.method)))
      .add("taper_width", cfg.controls.taper_width)
      .add("tolerance", cfg.controls.quad.rel_tol)
      .add("value", v.value)
      .add("error", v.error)
      .add("ratio_to_closed_form", optional_value(ratio))
      .add("status", std::string(observables::to_string(v.status)))
      .add("units", observable_units(v.kind))
      .add("constants_version", cfg.constants.version);
  return r;
}

std::vector<Row> observable_rows(const RunConfig& cfg, double a, double xi0) {
  using observables::Method;
  std::vector<Row> rows;
  if (cfg.geometry == observables::Geometry::flat_plate) {
    rows.push_back(observable_row(cfg, observables::flat_plate_E_sq(a), std::nullopt));
    return rows;
  }
  using Fn = observables::VacuumObservable (*)(observables::Geometry, double, double, Method,
                                               const observables::NumericControls&);
  for (Fn fn : {Fn{&observables::phi_sq}, Fn{&observables::E_sq}}) {
    const auto closed = fn(cfg.geometry, a, xi0, Method::closed_form, cfg.controls);
    if (cfg.method != MethodChoice::numeric) rows.push_back(observable_row(cfg, closed, 1.0));
    if (cfg.method != MethodChoice::closed_form) {
      const auto numeric = fn(cfg.geometry, a, xi0, Method::numeric_quadrature, cfg.controls);
      std::optional<double> ratio;
      if (closed.value != 0.0) ratio = numeric.value / closed.value;
      rows.push_back(observable_row(cfg, numeric, ratio));
    }
  }
  return rows;
}

lab::LambdaCoefficient lab_lambda(const RunConfig& cfg, double xi0) {
  if (cfg.lambda) return {cfg.geometry, xi0, *cfg.lambda};
  if (cfg.geometry == observables::Geometry::flat_plate) return lab::LambdaCoefficient::flat_plate();
  if (xi0 == 0.0) throw ConfigError("xi0", "closed-form lambda needs xi0 > 0");
  return lab::LambdaCoefficient::closed_form(cfg.geometry, xi0);
}

bool reproduces_literature_setup(const RunConfig& cfg, double a_um) {
  return cfg.atom.name == "Na" && cfg.lambda && *cfg.lambda == 1e-3 &&
         std::abs(a_um - 0.1) < 1e-12;
}

std::vector<Row> lab_rows(const RunConfig& cfg, double a_um, double xi0) {
  const double a = a_um * kMicron;
  const auto lambda = lab_lambda(cfg, xi0);
  const auto& k = cfg.constants;
  const double v = lab::casimir_polder_potential(cfg.atom, lambda, a, k, cfg.floor);
  const double defl = lab::deflection_ratio(cfg.atom, lambda, a, cfg.time_s, k, cfg.floor);
  const double lev = lab::levitation_height(cfg.atom, lambda, k) / kMicron;
  const double temp = lab::trap_temperature(cfg.atom, lambda, a, k, cfg.floor);

  std::optional<double> phase;
  std::optional<double> phase_coef;
  if (xi0 > 0.0) {
    phase = lab::phase_shift(cfg.atom, a, cfg.time_s, xi0, k, cfg.floor);
    phase_coef = *phase / (xi0 * (1.0 - std::log(xi0)));
  }
  std::string temp_status = "n/a";
  std::optional<double> quoted;
  if (reproduces_literature_setup(cfg, a_um)) {
    quoted = lab::kQuotedTrapTemperature;
    temp_status = quoted.value() / temp > 2.0 || temp / quoted.value() > 2.0
                      ? "discrepant_with_quoted_value"
                      : "consistent_with_quoted_value";
  }
  Row r;
  r.add("command", std::string("lab"))
      .add("geometry", std::string(observables::to_string(cfg.geometry)))
      .add("atom", cfg.atom.name)
      .add("mass_g", cfg.atom.mass)
      .add("polarizability_cm3", cfg.atom.polarizability)
      .add("a_um", a_um)
      .add("xi0", xi0)
      .add("lambda", lambda.value)
      .add("lambda_source", std::string(cfg.lambda ? "fixed" : "closed_form"))
      .add("time_s", cfg.time_s)
      .add("potential_erg", v)
      .add("deflection_ratio", defl)
      .add("levitation_height_um", lev)
      .add("trap_temperature_K", temp)
      .add("quoted_trap_temperature_K", optional_value(quoted))
      .add("temperature_status", temp_status)
      .add("phase_shift_rad", optional_value(phase))
      .add("phase_coefficient", optional_value(phase_coef))
      .add("units", std::string("cgs"))
      .add("constants_version", k.version);
  return {std::move(r)};
}

}  // namespace

std::vector<Row> cmd_trace(const RunConfig& cfg) {
  cfg.validate();
  mirror_kind(cfg.geometry);
  std::vector<std::function<std::vector<Row>()>> tasks;
  for (double xi0 : cfg.xi0) {
    for (double a : cfg.a) tasks.emplace_back([&cfg, a, xi0] { return trace_rows(cfg, a, xi0); });
  }
  return parallel_rows(tasks);
}

std::vector<Row> cmd_observables(const RunConfig& cfg) {
  cfg.validate();
  std::vector<std::function<std::vector<Row>()>> tasks;
  const bool plate = cfg.geometry == observables::Geometry::flat_plate;
  for (double xi0 : plate ? std::vector<double>{0.0} : cfg.xi0) {
    for (double a : cfg.a) {
      tasks.emplace_back([&cfg, a, xi0] { return observable_rows(cfg, a, xi0); });
    }
  }
  return parallel_rows(tasks);
}

std::vector<Row> cmd_lab(const RunConfig& cfg) {
  cfg.validate();
  const std::vector<double> grid = cfg.lab_a_um.value_or(std::vector<double>{0.1, 0.55, 1.0});
  std::vector<std::function<std::vector<Row>()>> tasks;
  for (double xi0 : cfg.xi0) {
    for (double a : grid) tasks.emplace_back([&cfg, a, xi0] { return lab_rows(cfg, a, xi0); });
  }
  return parallel_rows(tasks);
}

VerifyOutcome cmd_verify(const std::string& suite) {
  std::vector<int> ids;
  try {
    ids = verify::suite_criteria(suite);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("suite", e.what());
  }
  VerifyOutcome out;
  for (int id : ids) {
    const auto report = verify::run_criterion(id);
    out.summary.push_back(verify::summary_line(report));
    out.passed = out.passed && report.passed();
    for (const auto& c : report.checks) {
      Row r;
      r.add("criterion", static_cast<long long>(report.id))
          .add("suite", report.suite)
          .add("title", report.title)
          .add("check", c.name)
          .add("passed", c.passed)
          .add("measured", c.measured)
          .add("tolerance", c.tolerance)
          .add("detail", c.detail);
      out.rows.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace vacfocus::cli
