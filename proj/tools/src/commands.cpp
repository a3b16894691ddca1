// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "limbscrew_cli/cli.hpp"

namespace limbscrew::cli {
namespace {

using Row = std::vector<double>;

void append(Row& row, const Vec3& v) { row.insert(row.end(), v.data(), v.data() + 3); }
void append(Row& row, const Vec6& v) { row.insert(row.end(), v.data(), v.data() + 6); }

void add_vector_columns(std::vector<std::string>& h, const std::string& name, const char* axes) {
  for (const char* a = axes; *a; ++a) h.push_back(name + "_" + *a);
}

// Runs `f` on rows 0..n-1 over up to `threads` workers; results keep row
// order and the failure of the lowest failing row is the one reported.
template <typename F>
std::vector<Row> map_rows(std::size_t n, unsigned threads, F f) {
  std::vector<Row> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t r = next++; r < n; r = next++) {
      try {
        out[r] = f(r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), n));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < count; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t r = 0; r < n; ++r) {
    if (!errors[r]) continue;
    const std::string at = "row " + std::to_string(r + 1) + ": ";
    try {
      std::rethrow_exception(errors[r]);
    } catch (const Error& e) {
      throw CliError(e.is_input_error() ? kExitInput : kExitNumerical, at + e.what());
    } catch (const CliError& e) {
      throw CliError(e.exit_code(), at + e.what());
    }
  }
  return out;
}

void check_limits(const LimbGeometry& g, const JointState& s) {
  if (!g.within_limits(s.theta)) {
    throw CliError(kExitInput, "joint angles outside the configured joint limits");
  }
}

const LimbDynamicsParams& dynamics_of(const LimbConfig& config, const char* command) {
  if (!config.dynamics) {
    throw CliError(kExitInput, std::string(command) + ": config has no dynamics section");
  }
  return *config.dynamics;
}

}  // namespace

Table cmd_fk(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts) {
  Table table;
  table.header = {"t"};
  for (int i = 1; i <= kJointCount; ++i) add_vector_columns(table.header, "S" + std::to_string(i), "LMNPQR");
  for (int i = 1; i <= kJointCount; ++i) add_vector_columns(table.header, "O" + std::to_string(i), "xyz");
  table.rows = map_rows(traj.states.size(), opts.threads, [&](std::size_t r) {
    const JointState& s = traj.states[r];
    check_limits(config.geometry, s);
    const FrameSet fs = forward_kinematics(s, config.geometry);
    Row row = {traj.t[r]};
    for (int i = 1; i <= kJointCount; ++i) append(row, as_vector(fs.joint_axes[i]));
    for (int i = 1; i <= kJointCount; ++i) append(row, fs.origins[i]);
    return row;
  });
  return table;
}

Table cmd_jac(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts) {
  Table table;
  table.header = {"t"};
  for (int r = 1; r <= 6; ++r) {
    for (int c = 1; c <= 6; ++c) table.header.push_back("J" + std::to_string(r) + std::to_string(c));
  }
  table.header.push_back("cond");
  table.rows = map_rows(traj.states.size(), opts.threads, [&](std::size_t r) {
    const JointState& s = traj.states[r];
    check_limits(config.geometry, s);
    const Mat6 j = jacobian(forward_kinematics(s, config.geometry)).reduced;
    Row row = {traj.t[r]};
    for (int i = 0; i < 6; ++i) {
      for (int k = 0; k < 6; ++k) row.push_back(j(i, k));
    }
    row.push_back(jacobian_condition(j));
    return row;
  });
  return table;
}

Table cmd_twist(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts) {
  require_columns(traj, 22, "twist");
  Table table;
  table.header = {"t"};
  add_vector_columns(table.header, "IM7", "LMNPQR");
  add_vector_columns(table.header, "IA7", "LMNPQR");
  table.rows = map_rows(traj.states.size(), opts.threads, [&](std::size_t r) {
    const JointState& s = traj.states[r];
    check_limits(config.geometry, s);
    const MotionState m = motion_state(kJointCount, s, chain_motion(s, config.geometry));
    Row row = {traj.t[r]};
    append(row, as_vector(m.motion));
    append(row, as_vector(m.acceleration));
    return row;
  });
  return table;
}

Table cmd_invdyn(const LimbConfig& config, const Trajectory& traj, const RunOptions& opts) {
  require_columns(traj, 22, "invdyn");
  const LimbDynamicsParams& p = dynamics_of(config, "invdyn");
  Table table;
  table.header = {"t"};
  for (const char* name : {"T1", "T2", "T3", "F03", "F34", "F47"}) {
    add_vector_columns(table.header, name, "xyz");
  }
  for (int i = 1; i <= kJointCount; ++i) table.header.push_back("tau" + std::to_string(i));
  table.rows = map_rows(traj.states.size(), opts.threads, [&](std::size_t r) {
    const JointState& s = traj.states[r];
    check_limits(config.geometry, s);
    const DynamicsSolution sol = inverse_dynamics(s, config.geometry, p);
    const JointVector tau = joint_axis_torques(sol, forward_kinematics(s, config.geometry));
    Row row = {traj.t[r]};
    for (const Vec3& v : {sol.shoulder_torque, sol.elbow_torque, sol.wrist_torque,
                          sol.torso_to_arm, sol.arm_to_forearm, sol.forearm_to_hand}) {
      append(row, v);
    }
    row.insert(row.end(), tau.data(), tau.data() + kJointCount);
    return row;
  });
  return table;
}

Table cmd_fwddyn(const LimbConfig& config, const Trajectory& traj, const NumericCsv& loads,
                 const RunOptions& opts) {
  require_columns(traj, 15, "fwddyn");
  const LimbDynamicsParams& p = dynamics_of(config, "fwddyn");
  if (loads.rows.size() != traj.states.size()) {
    throw CliError(kExitInput, "fwddyn: wrench file has " + std::to_string(loads.rows.size()) +
                                   " rows, trajectory has " + std::to_string(traj.states.size()));
  }
  std::array<std::array<std::size_t, 3>, 6> cols;
  const char* names[6] = {"T1", "T2", "T3", "F03", "F34", "F47"};
  for (int k = 0; k < 6; ++k) {
    for (int a = 0; a < 3; ++a) {
      try {
        cols[k][a] = loads.column(std::string(names[k]) + "_" + "xyz"[a]);
      } catch (const CliError& e) {
        throw CliError(kExitInput, std::string("fwddyn: wrench file ") + e.what());
      }
    }
  }

  Table table;
  table.header = {"t"};
  for (const char* frame : {"3", "4", "7"}) {
    add_vector_columns(table.header, std::string("alpha") + frame, "xyz");
    add_vector_columns(table.header, std::string("a") + frame, "xyz");
  }
  table.rows = map_rows(traj.states.size(), opts.threads, [&](std::size_t r) {
    const JointState& s = traj.states[r];
    check_limits(config.geometry, s);
    const auto pick = [&](int k) {
      const Row& row = loads.rows[r];
      return Vec3(row[cols[k][0]], row[cols[k][1]], row[cols[k][2]]);
    };
    const AppliedLoads applied{pick(0), pick(1), pick(2), pick(3), pick(4), pick(5)};
    const auto acc = forward_dynamics(s, applied, config.geometry, p);
    Row row = {traj.t[r]};
    for (const BodyAcceleration& b : acc) {
      append(row, b.alpha);
      append(row, b.a);
    }
    return row;
  });
  return table;
}

Table cmd_ik(const LimbConfig& config, const TargetLine& target, const IkOptions& ik,
             const RunOptions& opts) {
  IkOptions options = ik;
  if (opts.effective_angles && options.seed) {
    *options.seed = raw_angles((JointVector() << *options.seed, 0.0).finished()).head<6>();
  }
  std::vector<IkSolution> sols;
  try {
    sols = solve_ik(target, config.geometry, options);
  } catch (const Error& e) {
    throw CliError(e.is_input_error() ? kExitInput : kExitNumerical, std::string("ik: ") + e.what());
  }

  Table table;
  for (int i = 1; i <= 6; ++i) table.header.push_back("theta" + std::to_string(i));
  table.header.push_back("residual");
  table.header.push_back("iterations");
  for (const IkSolution& s : sols) {
    Vec6 angles = s.angles;
    if (opts.effective_angles) {
      angles = wrap_angles(effective_angles((JointVector() << angles, 0.0).finished()).head<6>());
    }
    Row row;
    append(row, angles);
    row.push_back(s.residual_norm);
    row.push_back(s.iterations);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace limbscrew::cli
