// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "limbscrew_cli/cli.hpp"

namespace limbscrew::cli {
namespace {

struct CommonArgs {
  std::string config;
  std::string traj;
  std::string out;
  std::string format = "csv";
  bool effective_angles = false;
};

struct IkArgs {
  std::string p1, p2, line, seed;
  IkOptions options;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_traj) {
  cmd->add_option("--config", args.config, "Limb configuration JSON")->required();
  if (needs_traj) {
    cmd->add_option("--traj", args.traj, "Trajectory CSV, '-' for stdin")->required();
  }
  cmd->add_option("--out", args.out, "Output file (default stdout)");
  cmd->add_option("--format", args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--effective-angles", args.effective_angles,
                "Angles are theta + offset rather than raw joint readings");
}

std::vector<double> parse_list(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double x = 0.0;
    const char* first = item.data();
    const char* last = first + item.size();
    while (first != last && *first == ' ') ++first;
    const auto [end, ec] = std::from_chars(first, last, x);
    if (first == last || ec != std::errc() || end != last || !std::isfinite(x)) {
      throw CliError(kExitInput, std::string(flag) + ": '" + item + "' is not a finite number");
    }
    values.push_back(x);
  }
  if (values.size() != count) {
    throw CliError(kExitInput, std::string(flag) + " expects " + std::to_string(count) +
                                   " comma-separated numbers");
  }
  return values;
}

Vec3 parse_point(const std::string& text, const char* flag) {
  const auto v = parse_list(text, 3, flag);
  return {v[0], v[1], v[2]};
}

std::string read_file(const std::string& path, const char* what) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError(kExitInput, std::string("cannot open ") + what + " '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// '-' reads `in`.
std::string read_input(const std::string& path, std::istream& in, const char* what) {
  if (path != "-") return read_file(path, what);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TargetLine target_line(const IkArgs& args) {
  const bool by_points = !args.p1.empty() || !args.p2.empty();
  if (by_points == !args.line.empty()) {
    throw CliError(kExitInput, "ik: give either --p1 and --p2 or --line");
  }
  try {
    if (by_points) {
      if (args.p1.empty() || args.p2.empty()) {
        throw CliError(kExitInput, "ik: --p1 and --p2 must be given together");
      }
      return TargetLine::through_points(parse_point(args.p1, "--p1"), parse_point(args.p2, "--p2"));
    }
    const auto v = parse_list(args.line, 6, "--line");
    return TargetLine(Screw{Vec3(v[0], v[1], v[2]), Vec3(v[3], v[4], v[5])});
  } catch (const Error& e) {
    throw CliError(kExitInput, std::string("ik: ") + e.what());
  }
}

void emit(const Table& table, const CommonArgs& args, std::ostream& out) {
  std::ostringstream buf;
  if (args.format == "json") {
    table.write_json(buf);
  } else {
    table.write_csv(buf);
  }
  if (args.out.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream f(args.out, std::ios::binary);
  if (!f || !(f << buf.str())) {
    throw CliError(kExitInput, "cannot write output file '" + args.out + "'");
  }
}

}  // namespace

unsigned thread_count(const char* limb_threads) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (limb_threads == nullptr) return hw;
  const std::string_view s(limb_threads);
  unsigned n = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || n == 0) {
    throw CliError(kExitInput, "LIMB_THREADS must be a positive integer, got '" + std::string(s) +
                                   "'");
  }
  return std::min(n, hw);
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
        const char* limb_threads) {
  CLI::App app{"Screw-theory kinematics and dynamics of a 7-DOF upper limb", "limb"};
  app.require_subcommand(1);

  CommonArgs common;
  IkArgs ik;
  std::string wrenches;

  CLI::App* fk = app.add_subcommand("fk", "Joint screws and frame origins per row");
  add_common(fk, common, true);
  CLI::App* jac = app.add_subcommand("jac", "Reduced screw Jacobian and its condition number");
  add_common(jac, common, true);
  CLI::App* twist = app.add_subcommand("twist", "Motion and acceleration screws of joint 7");
  add_common(twist, common, true);
  CLI::App* invdyn = app.add_subcommand("invdyn", "Joint torques and reaction forces");
  add_common(invdyn, common, true);
  CLI::App* fwddyn = app.add_subcommand("fwddyn", "Body accelerations from applied loads");
  add_common(fwddyn, common, true);
  fwddyn->add_option("--wrenches", wrenches, "CSV with T1..T3, F03, F34, F47 columns")
      ->required();
  CLI::App* ikc = app.add_subcommand("ik", "Joint angles placing the joint-6 axis on a line");
  add_common(ikc, common, false);
  ikc->add_option("--p1", ik.p1, "First point x,y,z of the target line");
  ikc->add_option("--p2", ik.p2, "Second point x,y,z of the target line");
  ikc->add_option("--line", ik.line, "Plucker coordinates L,M,N,P,Q,R of the target line");
  ikc->add_option("--seed", ik.seed, "Start angles theta1..theta6");
  ikc->add_option("--max-iter", ik.options.max_iterations, "Iterations per start");
  ikc->add_option("--tol", ik.options.residual_tol, "Weighted residual tolerance");
  ikc->add_option("--damping", ik.options.damping, "Initial Levenberg-Marquardt damping");
  ikc->add_option("--starts", ik.options.multistart_count, "Multistart count without --seed");

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    RunOptions opts{common.effective_angles, thread_count(limb_threads)};
    const LimbConfig config = parse_config(read_file(common.config, "config"));

    if (ikc->parsed()) {
      if (!ik.seed.empty()) {
        const auto v = parse_list(ik.seed, 6, "--seed");
        ik.options.seed = Vec6(v.data());
      }
      try {
        ik.options.validate();
      } catch (const Error& e) {
        throw CliError(kExitInput, std::string("ik: ") + e.what());
      }
      const Table table = cmd_ik(config, target_line(ik), ik.options, opts);
      emit(table, common, out);
      if (table.rows.empty()) {
        err << "limb: ik: no converged solution for the target line\n";
        return kExitNoSolution;
      }
      return kExitOk;
    }

    if (fwddyn->parsed() && common.traj == "-" && wrenches == "-") {
      throw CliError(kExitInput, "fwddyn: --traj and --wrenches cannot both read stdin");
    }
    std::istringstream traj_text(read_input(common.traj, in, "trajectory"));
    const Trajectory traj = parse_trajectory(traj_text, common.effective_angles);

    Table table;
    if (fk->parsed()) table = cmd_fk(config, traj, opts);
    if (jac->parsed()) table = cmd_jac(config, traj, opts);
    if (twist->parsed()) table = cmd_twist(config, traj, opts);
    if (invdyn->parsed()) table = cmd_invdyn(config, traj, opts);
    if (fwddyn->parsed()) {
      std::istringstream w(read_input(wrenches, in, "wrench file"));
      table = cmd_fwddyn(config, traj, parse_numeric_csv(w, "wrench file"), opts);
    }
    emit(table, common, out);
    return kExitOk;
  } catch (const CliError& e) {
    err << "limb: " << e.what() << '\n';
    return e.exit_code();
  } catch (const Error& e) {
    err << "limb: " << e.what() << '\n';
    return e.is_input_error() ? kExitInput : kExitNumerical;
  }
}

}  // namespace limbscrew::cli
