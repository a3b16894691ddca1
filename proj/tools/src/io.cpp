// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "limbscrew_cli/cli.hpp"

namespace limbscrew::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool blank(std::string_view line) { return trim(line).empty(); }

// Lines of the stream with their 1-based line numbers, blank lines dropped.
struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!blank(text)) lines.push_back({number, text});
  }
  return lines;
}

std::string where(const std::string& what, std::size_t row, std::size_t line) {
  return what + ": row " + std::to_string(row) + " (line " + std::to_string(line) + ")";
}

double parse_double(std::string_view field, const std::string& context) {
  double x = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
  if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
    throw CliError(kExitInput, context + ": '" + std::string(field) + "' is not a number");
  }
  if (!std::isfinite(x)) {
    throw CliError(kExitInput, context + ": value must be finite");
  }
  return x;
}

std::vector<std::string> trajectory_header(int columns) {
  std::vector<std::string> h = {"t"};
  for (const char* prefix : {"theta", "dtheta", "ddtheta"}) {
    if (static_cast<int>(h.size()) >= columns) break;
    for (int i = 1; i <= kJointCount; ++i) h.push_back(prefix + std::to_string(i));
  }
  return h;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Trajectory parse_trajectory(std::istream& in, bool effective_angles) {
  const std::vector<Line> lines = read_lines(in);
  Trajectory traj;
  if (lines.empty()) return traj;

  const auto header = split(lines.front().text);
  const int columns = static_cast<int>(header.size());
  if (columns != 8 && columns != 15 && columns != 22) {
    throw CliError(kExitInput, "trajectory: header has " + std::to_string(columns) +
                                   " columns, expected 8, 15 or 22");
  }
  const std::vector<std::string> expected = trajectory_header(columns);
  for (int c = 0; c < columns; ++c) {
    if (header[c] != expected[c]) {
      throw CliError(kExitInput, "trajectory: header column " + std::to_string(c + 1) + " is '" +
                                     std::string(header[c]) + "', expected '" + expected[c] + "'");
    }
  }
  traj.columns = columns;

  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::string ctx = where("trajectory", r, lines[r].number);
    const auto fields = split(lines[r].text);
    if (static_cast<int>(fields.size()) != columns) {
      throw CliError(kExitInput, ctx + ": has " + std::to_string(fields.size()) +
                                     " fields, expected " + std::to_string(columns));
    }
    std::vector<double> v(columns);
    for (int c = 0; c < columns; ++c) v[c] = parse_double(fields[c], ctx);
    if (!traj.t.empty() && !(v[0] > traj.t.back())) {
      throw CliError(kExitInput, ctx + ": t must be strictly increasing");
    }
    JointState s;
    for (int i = 0; i < kJointCount; ++i) {
      s.theta[i] = v[1 + i];
      if (columns >= 15) s.theta_dot[i] = v[8 + i];
      if (columns >= 22) s.theta_ddot[i] = v[15 + i];
    }
    if (effective_angles) s.theta = raw_angles(s.theta);
    traj.t.push_back(v[0]);
    traj.states.push_back(s);
  }
  return traj;
}

void require_columns(const Trajectory& traj, int need, const char* command) {
  if (traj.columns >= need) return;
  const std::string missing = trajectory_header(need)[traj.columns];
  throw CliError(kExitInput, std::string(command) + ": trajectory is missing column '" + missing +
                                 "'");
}

std::size_t NumericCsv::column(const std::string& name) const {
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == name) return c;
  }
  throw CliError(kExitInput, "missing column '" + name + "'");
}

NumericCsv parse_numeric_csv(std::istream& in, const std::string& what) {
  const std::vector<Line> lines = read_lines(in);
  NumericCsv csv;
  if (lines.empty()) throw CliError(kExitInput, what + ": missing header");
  for (std::string_view h : split(lines.front().text)) csv.header.emplace_back(h);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::string ctx = where(what, r, lines[r].number);
    const auto fields = split(lines[r].text);
    if (fields.size() != csv.header.size()) {
      throw CliError(kExitInput, ctx + ": has " + std::to_string(fields.size()) +
                                     " fields, expected " + std::to_string(csv.header.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::string_view f : fields) row.push_back(parse_double(f, ctx));
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
    out << '\n';
  }
}

void Table::write_json(std::ostream& out) const {
  out << "{\"columns\":[";
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << '"' << header[c] << '"';
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const double x = rows[r][c];
      out << (c ? "," : "") << (std::isfinite(x) ? format_number(x) : "null");
    }
    out << ']';
  }
  out << "]}\n";
}

}  // namespace limbscrew::cli
