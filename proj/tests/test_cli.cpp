#include "doctest.h"

#include "cli.hpp"
#include "json.hpp"

#include <cmath>
#include <sstream>

using namespace vacfocus::cli;

namespace {

double number(const Row& r, const std::string& key) {
  const Value* v = r.find(key);
  REQUIRE(v != nullptr);
  return std::get<double>(*v);
}

std::string text(const Row& r, const std::string& key) {
  const Value* v = r.find(key);
  REQUIRE(v != nullptr);
  return std::get<std::string>(*v);
}

RunConfig from_ini(const std::string& ini) {
  std::istringstream in(ini);
  return load_config(in);
}

}  // namespace

TEST_CASE("grid parsing") {
  CHECK(parse_grid("0.1", "a") == std::vector<double>{0.1});
  CHECK(parse_grid("1,2,3", "a").size() == 3);
  const auto g = parse_grid("0.01:1:3", "a");
  REQUIRE(g.size() == 3);
  CHECK(g[1] == doctest::Approx(0.1));
  CHECK_THROWS_AS(parse_grid("1:x:3", "a"), ConfigError);
  CHECK_THROWS_AS(parse_grid("", "a"), ConfigError);
}

TEST_CASE("config files and field-level errors") {
  const auto cfg = from_ini("[run]\ngeometry=cylinder\nxi0=0.02,0.04\n[quadrature]\ntaper_width=0.05\n");
  CHECK(cfg.geometry == vacfocus::observables::Geometry::cylinder);
  CHECK(cfg.xi0.size() == 2);
  CHECK(cfg.controls.taper_width == 0.05);
  try {
    from_ini("[run]\nbee=1\n");
    FAIL("unknown key accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("run.bee") != std::string::npos);
  }
  CHECK_THROWS_AS(from_ini("[lab]\natom=Unobtainium\n"), ConfigError);
  RunConfig bad;
  bad.xi0 = {3.0};
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("xi0"), ConfigError);
  bad = {};
  bad.controls.taper_width = 0.7;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("taper_width"), ConfigError);
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  for (double x : {1.0 / 3, -2.5e-17, 6.02214076e23}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("CSV quoting") {
  std::vector<Row> rows(1);
  rows[0].add("name", std::string("a,\"b\"")).add("x", 1.5).add("empty", std::monostate{});
  CHECK(to_csv(rows) == "name,x,empty\r\n\"a,\"\"b\"\"\",1.5,\r\n");
}

TEST_CASE("trace rows") {
  RunConfig cfg;
  cfg.xi0 = {0.2};
  cfg.a = {0.01, 0.02, 0.04};
  cfg.trace_points = 40;
  const auto rows = cmd_trace(cfg);
  CHECK(rows.size() == 120);
  int with_pair = 0;
  for (std::size_t i = 0; i < 40; ++i) {
    const Row& r = rows[i];
    const Value* conj = r.find("conjugate_theta_prime_rad");
    if (std::holds_alternative<std::monostate>(*conj)) {
      CHECK(text(r, "status") == "no_conjugate");
      continue;
    }
    ++with_pair;
    const double a = number(r, "a");
    const double recomputed =
        a * (std::cos(number(r, "theta_prime_rad")) - std::cos(std::get<double>(*conj)));
    CHECK(number(r, "delta_ell") == doctest::Approx(recomputed).epsilon(1e-9));
    // Linear in a across the grid blocks.
    CHECK(number(rows[i + 40], "delta_ell") == doctest::Approx(2 * number(r, "delta_ell")));
    CHECK(number(rows[i + 80], "delta_ell") == doctest::Approx(4 * number(r, "delta_ell")));
  }
  CHECK(with_pair > 0);

  cfg.xi0 = {0.0};
  for (const Row& r : cmd_trace(cfg)) {
    CHECK(text(r, "status") == "sub_critical");
    CHECK(std::holds_alternative<std::monostate>(*r.find("conjugate_theta_prime_rad")));
  }
}

TEST_CASE("observables rows") {
  RunConfig cfg;
  cfg.a = {1.0};
  cfg.xi0 = {0.01};
  const auto rows = cmd_observables(cfg);
  REQUIRE(rows.size() == 2);
  const double pi2 = M_PI * M_PI;
  CHECK(number(rows[1], "value") ==
        doctest::Approx(4051.0 / (4 * 2187 * 5 * pi2) * 0.01 * (1 - std::log(0.01))));

  cfg.method = MethodChoice::both;
  cfg.xi0 = {0.05};
  for (const Row& r : cmd_observables(cfg)) {
    CHECK(std::get<double>(*r.find("ratio_to_closed_form")) == doctest::Approx(1.0).epsilon(0.02));
  }

  cfg.method = MethodChoice::closed_form;
  RunConfig cyl = cfg;
  cyl.geometry = vacfocus::observables::Geometry::cylinder;
  CHECK(number(cmd_observables(cyl)[1], "value") / number(cmd_observables(cfg)[1], "value") ==
        doctest::Approx(16 / (15 * M_PI)).epsilon(1e-14));
}

TEST_CASE("lab rows and format equivalence") {
  RunConfig cfg;
  const auto rows = cmd_lab(cfg);
  REQUIRE(rows.size() == 3);
  CHECK(text(rows[0], "temperature_status") == "discrepant_with_quoted_value");
  CHECK(number(rows[2], "deflection_ratio") == doctest::Approx(0.25).epsilon(0.02));
  CHECK(number(rows[0], "levitation_height_um") == doctest::Approx(0.55).epsilon(0.02));
  CHECK(number(rows[2], "phase_coefficient") == doctest::Approx(0.14).epsilon(0.025));

  const auto json = nlohmann::json::parse(to_json(rows));
  std::istringstream csv(to_csv(rows));
  std::string header;
  std::getline(csv, header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    std::getline(csv, line);
    for (const auto& [key, value] : rows[i].cells) {
      if (const double* d = std::get_if<double>(&value)) {
        CHECK(json[i][key].get<double>() == *d);
        CHECK(line.find(format_double(*d)) != std::string::npos);
      }
    }
  }
}

TEST_CASE("output is deterministic") {
  RunConfig cfg;
  cfg.a = parse_grid("0.001:0.01:5", "a");
  cfg.xi0 = {0.02, 0.1};
  cfg.method = MethodChoice::both;
  CHECK(to_csv(cmd_observables(cfg)) == to_csv(cmd_observables(cfg)));
}

TEST_CASE("exit codes") {
  auto call = [](std::vector<std::string> args) {
    args.insert(args.begin(), "vacfocus");
    std::vector<char*> argv;
    for (auto& s : args) argv.push_back(s.data());
    return run(static_cast<int>(argv.size()), argv.data());
  };
  CHECK(call({"lab", "--atom", "Kr", "--out", "/dev/null"}) == kExitConfig);
  CHECK(call({"observables", "--tolerance", "abc", "--out", "/dev/null"}) == kExitConfig);
  CHECK(call({"lab", "--a", "0.05", "--out", "/dev/null"}) == kExitComputation);
  CHECK(call({"lab", "--a", "0.05", "--allow-sub-plasma", "--out", "/dev/null"}) == kExitOk);
  CHECK(call({"verify", "--suite", "census", "--out", "/dev/null"}) == kExitOk);
  CHECK(call({"verify", "--suite", "series", "--out", "/dev/null"}) == kExitVerify);
}
