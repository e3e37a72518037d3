#include "cli.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace vacfocus::cli {

namespace {

double parse_number(const std::string& text, const std::string& field) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw ConfigError(field, "'" + text + "' is not a number");
  }
  return v;
}

bool parse_bool(const std::string& s, const std::string& field) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError(field, "'" + s + "' is not a boolean");
}

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"run", {"geometry", "b", "xi0", "a", "a_grid", "method", "format", "out", "trace_points"}},
      {"quadrature", {"taper_width", "tolerance"}},
      {"lab", {"atom", "a_um", "lambda", "time", "lambda_p_um", "allow_sub_plasma"}},
      {"atom", {"name", "mass", "polarizability"}},
      {"constants", {"hbar", "c", "k_B", "g", "version"}},
  };
  return keys;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec, const std::string& field) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    require(parts.size() == 3, field, "log grid must be lo:hi:n");
    const double lo = parse_number(parts[0], field);
    const double hi = parse_number(parts[1], field);
    const double n = parse_number(parts[2], field);
    require(positive(lo) && positive(hi) && hi >= lo, field, "log grid needs 0 < lo <= hi");
    require(n >= 1 && n <= 100000 && n == std::floor(n), field, "log grid count must be 1..100000");
    const int count = static_cast<int>(n);
    for (int i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      out.push_back(lo * std::pow(hi / lo, f));
    }
    return out;
  }
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_number(p, field));
  require(!out.empty(), field, "empty grid");
  return out;
}

MethodChoice parse_method(const std::string& s) {
  if (s == "closed_form") return MethodChoice::closed_form;
  if (s == "numeric" || s == "numeric_quadrature") return MethodChoice::numeric;
  if (s == "both") return MethodChoice::both;
  throw ConfigError("method", "'" + s + "' is not closed_form, numeric or both");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("format", "'" + s + "' is not csv or json");
}

void RunConfig::validate() const {
  require(positive(b), "b", "must be positive");
  require(!xi0.empty(), "xi0", "at least one value needed");
  for (double x : xi0) {
    require(x >= 0.0 && x < 2 * std::numbers::pi / 3, "xi0", "must lie in [0, 2pi/3)");
  }
  require(!a.empty(), "a", "at least one value needed");
  for (double x : a) require(positive(x), "a", "must be positive");
  if (lab_a_um) {
    for (double x : *lab_a_um) require(positive(x), "lab.a_um", "must be positive");
  }
  require(controls.taper_width >= 0.0 && controls.taper_width < 0.5, "taper_width",
          "must lie in [0, 0.5)");
  require(controls.quad.rel_tol > 0.0 && controls.quad.rel_tol <= 1e-2, "tolerance",
          "must lie in (0, 1e-2]");
  require(trace_points >= 2 && trace_points <= 100000, "trace_points", "must be 2..100000");
  require(positive(atom.mass), "atom.mass", "must be positive");
  require(positive(atom.polarizability), "atom.polarizability", "must be positive");
  if (lambda) require(positive(*lambda), "lambda", "must be positive");
  require(time_s >= 0.0 && std::isfinite(time_s), "time", "must be non-negative");
  require(positive(floor.lambda_p), "lambda_p_um", "must be positive");
  require(positive(constants.hbar), "constants.hbar", "must be positive");
  require(positive(constants.c), "constants.c", "must be positive");
  require(positive(constants.k_B), "constants.k_B", "must be positive");
  require(positive(constants.g), "constants.g", "must be positive");
}

RunConfig load_config(std::istream& in, RunConfig cfg) {
  boost::property_tree::ptree pt;
  try {
    boost::property_tree::read_ini(in, pt);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config", e.message() + " at line " + std::to_string(e.line()));
  }
  for (const auto& [section, body] : pt) {
    const auto it = known_keys().find(section);
    if (it == known_keys().end()) {
      throw ConfigError(section, body.empty() ? "keys must sit inside a [section]"
                                              : "unknown section");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) throw ConfigError(section + "." + key, "unknown key");
    }
  }
  auto get = [&](const std::string& path) { return pt.get_optional<std::string>(path); };

  if (auto v = get("run.geometry")) {
    try {
      cfg.geometry = observables::geometry_from_string(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("run.geometry", e.what());
    }
  }
  if (auto v = get("run.b")) cfg.b = parse_number(*v, "run.b");
  if (auto v = get("run.xi0")) cfg.xi0 = parse_grid(*v, "run.xi0");
  if (auto v = get("run.a")) cfg.a = parse_grid(*v, "run.a");
  if (auto v = get("run.a_grid")) cfg.a = parse_grid(*v, "run.a_grid");
  if (auto v = get("run.method")) cfg.method = parse_method(*v);
  if (auto v = get("run.format")) cfg.format = parse_format(*v);
  if (auto v = get("run.out")) cfg.out = *v;
  if (auto v = get("run.trace_points")) {
    cfg.trace_points = static_cast<int>(parse_number(*v, "run.trace_points"));
  }
  if (auto v = get("quadrature.taper_width")) {
    cfg.controls.taper_width = parse_number(*v, "quadrature.taper_width");
  }
  if (auto v = get("quadrature.tolerance")) {
    cfg.controls.quad.rel_tol = parse_number(*v, "quadrature.tolerance");
  }
  if (auto v = get("lab.atom")) {
    try {
      cfg.atom = lab::atom_preset(*v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("lab.atom", e.what());
    }
  }
  if (auto v = get("lab.a_um")) cfg.lab_a_um = parse_grid(*v, "lab.a_um");
  if (auto v = get("lab.lambda")) {
    if (*v == "closed_form") {
      cfg.lambda.reset();
    } else {
      cfg.lambda = parse_number(*v, "lab.lambda");
    }
  }
  if (auto v = get("lab.time")) cfg.time_s = parse_number(*v, "lab.time");
  if (auto v = get("lab.lambda_p_um")) cfg.floor.lambda_p = 1e-4 * parse_number(*v, "lab.lambda_p_um");
  if (auto v = get("lab.allow_sub_plasma")) {
    cfg.floor.allow_below = parse_bool(*v, "lab.allow_sub_plasma");
  }
  if (pt.get_child_optional("atom")) {
    const auto name = get("atom.name").value_or("custom");
    const auto mass = get("atom.mass");
    const auto pol = get("atom.polarizability");
    require(mass && pol, "atom", "custom atom needs mass and polarizability");
    cfg.atom = {name, parse_number(*mass, "atom.mass"), parse_number(*pol, "atom.polarizability")};
  }
  if (auto v = get("constants.hbar")) cfg.constants.hbar = parse_number(*v, "constants.hbar");
  if (auto v = get("constants.c")) cfg.constants.c = parse_number(*v, "constants.c");
  if (auto v = get("constants.k_B")) cfg.constants.k_B = parse_number(*v, "constants.k_B");
  if (auto v = get("constants.g")) cfg.constants.g = parse_number(*v, "constants.g");
  if (auto v = get("constants.version")) cfg.constants.version = *v;
  return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return load_config(in, std::move(base));
}

}  // namespace vacfocus::cli
