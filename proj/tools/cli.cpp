#include "cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace vacfocus::cli {

namespace {

struct Overrides {
  std::string config;
  std::string geometry, b, xi0, a, a_grid, atom, method, format, out;
  std::string taper_width, tolerance, lambda, time, trace_points, suite = "all";
  bool allow_sub_plasma = false;
};

// Flags win over the config file.
RunConfig resolve(const Overrides& o, const CLI::App& app) {
  RunConfig cfg;
  if (!o.config.empty()) cfg = load_config(o.config, cfg);

  std::map<std::string, std::string> sections;
  auto put = [&](const char* section, const char* key, const std::string& flag,
                 const std::string& value) {
    if (app.count(flag)) sections[section] += std::string(key) + "=" + value + "\n";
  };
  put("run", "geometry", "--geometry", o.geometry);
  put("run", "b", "--b", o.b);
  put("run", "xi0", "--xi0", o.xi0);
  put("run", "a", "--a", o.a);
  put("run", "a_grid", "--a-grid", o.a_grid);
  put("run", "method", "--method", o.method);
  put("run", "format", "--format", o.format);
  put("run", "out", "--out", o.out);
  put("run", "trace_points", "--trace-points", o.trace_points);
  put("quadrature", "taper_width", "--taper-width", o.taper_width);
  put("quadrature", "tolerance", "--tolerance", o.tolerance);
  put("lab", "atom", "--atom", o.atom);
  put("lab", "lambda", "--lambda", o.lambda);
  put("lab", "time", "--time", o.time);
  if (o.allow_sub_plasma) sections["lab"] += "allow_sub_plasma=true\n";
  std::string ini;
  for (const auto& [name, body] : sections) ini += "[" + name + "]\n" + body;
  std::istringstream in(ini);
  cfg = load_config(in, cfg);
  // --a-grid sets the lab distances (µm) for the lab command.
  if (app.count("--a-grid") || app.count("--a")) {
    cfg.lab_a_um = cfg.a;
  }
  return cfg;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("out", "cannot write '" + path + "'");
  f << text;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Vacuum fluctuations near the focus of parabolic mirrors"};
  app.require_subcommand(1);
  Overrides o;
  app.add_option("--config", o.config, "INI config file; flags override it");
  app.add_option("--geometry", o.geometry, "revolution | cylinder | flat_plate");
  app.add_option("--b", o.b, "focal parameter b");
  app.add_option("--xi0", o.xi0, "rim excess: v, v1,v2,... or lo:hi:n");
  app.add_option("--a", o.a, "distance from the focus (same grammar)");
  app.add_option("--a-grid", o.a_grid, "alias of --a");
  app.add_option("--atom", o.atom, "atom preset (Na)");
  app.add_option("--method", o.method, "closed_form | numeric | both");
  app.add_option("--format", o.format, "csv | json");
  app.add_option("--out", o.out, "output path (default stdout)");
  app.add_option("--taper-width", o.taper_width, "rim taper width as a fraction of xi0");
  app.add_option("--tolerance", o.tolerance, "relative quadrature tolerance");
  app.add_option("--trace-points", o.trace_points, "theta' samples per trace");
  app.add_option("--lambda", o.lambda, "lab Lambda, or closed_form");
  app.add_option("--time", o.time, "lab interaction time in s");
  app.add_flag("--allow-sub-plasma", o.allow_sub_plasma, "permit a below the plasma wavelength");
  app.fallthrough();

  auto* trace = app.add_subcommand("trace", "ray geometry and conjugate pairs over a theta' grid");
  auto* obs = app.add_subcommand("observables", "phi_sq and E_sq sweep over (a, xi0)");
  auto* lab = app.add_subcommand("lab", "Casimir-Polder laboratory estimates (a in um)");
  auto* ver = app.add_subcommand("verify", "acceptance criteria report");
  ver->add_option("--suite", o.suite, "series | geometry | integrals | observables | census | "
                                      "lab | properties | all");
  for (auto* sub : {trace, obs, lab, ver}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig cfg;
  try {
    cfg = resolve(o, app);
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (ver->parsed()) {
      const auto outcome = cmd_verify(o.suite);
      emit(serialize(outcome.rows, cfg.format), cfg.out);
      for (const auto& line : outcome.summary) std::cerr << line << "\n";
      return outcome.passed ? kExitOk : kExitVerify;
    }
    std::vector<Row> rows;
    if (trace->parsed()) rows = cmd_trace(cfg);
    if (obs->parsed()) rows = cmd_observables(cfg);
    if (lab->parsed()) rows = cmd_lab(cfg);
    emit(serialize(rows, cfg.format), cfg.out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace vacfocus::cli
