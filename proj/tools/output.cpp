#include "cli.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace vacfocus::cli {

const Value* Row::find(const std::string& key) const {
  for (const auto& [k, v] : cells) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

namespace {

std::string cell_text(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void check_columns(const std::vector<Row>& rows) {
  for (const Row& r : rows) {
    bool same = r.cells.size() == rows.front().cells.size();
    for (std::size_t i = 0; same && i < r.cells.size(); ++i) {
      same = r.cells[i].first == rows.front().cells[i].first;
    }
    if (!same) throw std::logic_error("rows do not share one column layout");
  }
}

}  // namespace

std::string to_csv(const std::vector<Row>& rows) {
  if (rows.empty()) return {};
  check_columns(rows);
  std::string out;
  for (std::size_t i = 0; i < rows.front().cells.size(); ++i) {
    if (i) out += ',';
    out += csv_field(rows.front().cells[i].first);
  }
  out += "\r\n";
  for (const Row& r : rows) {
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cell_text(r.cells[i].second));
    }
    out += "\r\n";
  }
  return out;
}

std::string to_json(const std::vector<Row>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Row& r : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.cells) {
      struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(double x) const {
          // JSON has no NaN or infinity.
          if (!std::isfinite(x)) return format_double(x);
          return x;
        }
        nlohmann::ordered_json operator()(long long x) const { return x; }
        nlohmann::ordered_json operator()(bool x) const { return x; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
      };
      obj[k] = std::visit(Visitor{}, v);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string serialize(const std::vector<Row>& rows, Format f) {
  return f == Format::csv ? to_csv(rows) : to_json(rows);
}

}  // namespace vacfocus::cli
