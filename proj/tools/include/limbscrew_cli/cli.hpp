// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

// Batch front end behind the `limb` executable. Everything here is pure with
// respect to the process: streams and the environment value are passed in, so
// tests can drive the tool in-process.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <limbscrew/limbscrew.hpp>

namespace limbscrew::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitNoSolution = 3,
  kExitNumerical = 4,
};

// A failure that ends the invocation with `exit_code`.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct LimbConfig {
  LimbGeometry geometry{0.3, 0.25};
  std::optional<LimbDynamicsParams> dynamics;
};

// Throws CliError(kExitInput) on malformed or unknown keys and on any
// parameter invariant violation.
LimbConfig parse_config(const std::string& json_text);

// Header t,theta1..7[,dtheta1..7[,ddtheta1..7]]. Angles are stored raw.
struct Trajectory {
  int columns = 8;  // 8, 15 or 22
  std::vector<double> t;
  std::vector<JointState> states;
};

// With `effective_angles` the theta columns are read as theta + offset.
// Throws CliError(kExitInput) citing the data row (1-based) and file line.
Trajectory parse_trajectory(std::istream& in, bool effective_angles);

// Throws CliError(kExitInput) naming the first column `need` lacks.
void require_columns(const Trajectory& traj, int need, const char* command);

// Generic headered CSV of finite doubles, addressed by column name.
struct NumericCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  // Throws CliError(kExitInput) if the column is missing.
  std::size_t column(const std::string& name) const;
};

NumericCsv parse_numeric_csv(std::istream& in, const std::string& what);

// 17 significant digits, -0 printed as 0, non-finite as nan/inf/-inf.
std::string format_number(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  void write_csv(std::ostream& out) const;
  // {"columns": [...], "rows": [[...], ...]}; non-finite values become null.
  void write_json(std::ostream& out) const;
};

struct RunOptions {
  bool effective_angles = false;
  unsigned threads = 1;
};

Table cmd_fk(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts);
Table cmd_jac(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts);
Table cmd_twist(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts);
Table cmd_invdyn(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts);
// `loads` must carry the T1..T3, F03, F34, F47 columns of invdyn output, one
// row per trajectory row.
Table cmd_fwddyn(const LimbConfig& config, const Trajectory& traj, const NumericCsv& loads,
                 const RunOptions& opts);
// One row per converged solution; no rows when nothing converges.
Table cmd_ik(const LimbConfig& config, const TargetLine& target, const IkOptions& ik,
             const RunOptions& opts);

// Thread count from LIMB_THREADS (nullptr when unset). Throws
// CliError(kExitInput) on a value that is not a positive integer.
unsigned thread_count(const char* limb_threads);

// Entry point: parses argv, runs the command and returns the exit code.
// Diagnostics go to `err`, results to `out` unless --out is given.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        const char* limb_threads);

}  // namespace limbscrew::cli
