#pragma once

#include "vacfocus/lab.hpp"
#include "vacfocus/observables.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vacfocus::cli {

/// Rejected configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : std::runtime_error(field + ": " + message) {}
};

enum class Format { csv, json };
enum class MethodChoice { closed_form, numeric, both };

struct RunConfig {
  observables::Geometry geometry = observables::Geometry::revolution;
  double b = 1.0;
  std::vector<double> xi0 = {0.05};
  /// Distances from the focus. Units of b for trace and observables,
  /// micrometres for lab.
  std::vector<double> a = {0.01};
  std::optional<std::vector<double>> lab_a_um;
  MethodChoice method = MethodChoice::closed_form;
  observables::NumericControls controls;
  int trace_points = 25;

  lab::AtomSpec atom = lab::sodium();
  lab::PhysicalConstants constants;
  lab::ValidityFloor floor;
  /// Λ for the lab estimates; empty means the closed-form value for the
  /// configured geometry and ξ₀.
  std::optional<double> lambda = 1e-3;
  double time_s = 1e-3;

  Format format = Format::csv;
  std::string out;  ///< empty for stdout

  /// Throws ConfigError on the first invalid field.
  void validate() const;
};

/// "0.1", "0.1,0.2,0.5" or log-spaced "lo:hi:n".
std::vector<double> parse_grid(const std::string& spec, const std::string& field);
MethodChoice parse_method(const std::string& s);
Format parse_format(const std::string& s);

/// Reads an INI file ([run], [quadrature], [lab], [atom], [constants]) over
/// the given defaults.
RunConfig load_config(const std::string& path, RunConfig base = {});
RunConfig load_config(std::istream& in, RunConfig base = {});

// ---------------------------------------------------------------------------
// Rows and serialization

/// monostate is an empty cell (CSV empty field, JSON null).
using Value = std::variant<std::monostate, double, long long, bool, std::string>;

struct Row {
  std::vector<std::pair<std::string, Value>> cells;

  Row& add(std::string key, Value v) {
    cells.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  const Value* find(const std::string& key) const;
};

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

/// RFC 4180: header line, one row per line, CRLF endings.
std::string to_csv(const std::vector<Row>& rows);
/// Array of objects with keys in column order.
std::string to_json(const std::vector<Row>& rows);
std::string serialize(const std::vector<Row>& rows, Format f);

// ---------------------------------------------------------------------------
// Commands

std::vector<Row> cmd_trace(const RunConfig& cfg);
std::vector<Row> cmd_observables(const RunConfig& cfg);
std::vector<Row> cmd_lab(const RunConfig& cfg);

struct VerifyOutcome {
  std::vector<Row> rows;
  std::vector<std::string> summary;  ///< one line per criterion
  bool passed = true;
};
VerifyOutcome cmd_verify(const std::string& suite);

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitVerify = 3;

/// Full command-line entry point; returns the process exit code.
int run(int argc, char** argv);

}  // namespace vacfocus::cli
