// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "conedepth/cli.hpp"
#include "conedepth/errors.hpp"

namespace conedepth::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> to_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

DataSet parse_csv_text(std::string_view text) {
  DataSet X;
  bool first_row = true;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    std::optional<double> x;
    std::optional<double> y;
    if (fields.size() == 2) {
      x = to_number(fields[0]);
      y = to_number(fields[1]);
    }
    if (first_row) {
      first_row = false;
      if (fields.size() == 2 && !x && !y) continue;  // header
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected two comma-separated values");
    if (!x || !y) throw ParseError(line_no, "value is not a number");
    if (!std::isfinite(*x) || !std::isfinite(*y)) {
      throw ParseError(line_no, "value is not finite");
    }
    X.points.push_back({*x, *y});
  }
  if (X.empty()) throw EmptyFile("no data rows");
  return X;
}

DataSet parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return parse_csv_text(buffer.str());
}

ConeV parse_cone(std::string_view spec) {
  spec = trim(spec);
  if (spec == "orthant") return ConeV::orthant();
  const auto gens = split(spec, ';');
  if (gens.size() != 2) throw std::invalid_argument("cone must be 'orthant' or 'b1x,b1y;b2x,b2y'");
  return {parse_point(gens[0]), parse_point(gens[1])};
}

Point2 parse_point(std::string_view spec) {
  const auto parts = split(trim(spec), ',');
  if (parts.size() != 2) throw std::invalid_argument("expected 'x,y', got '" + std::string(spec) + "'");
  const auto x = to_number(parts[0]);
  const auto y = to_number(parts[1]);
  if (!x || !y || !std::isfinite(*x) || !std::isfinite(*y)) {
    throw std::invalid_argument("expected two finite numbers, got '" + std::string(spec) + "'");
  }
  return {*x, *y};
}

std::string format_number(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace conedepth::cli
