// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "limbscrew_cli/cli.hpp"
#include "oracles.hpp"

namespace limbscrew::cli {
namespace {

const std::string kDataDir = LIMBSCREW_TEST_DATA_DIR;
const std::string kConfig = kDataDir + "/limb_config.json";
const std::string kTrajectory = kDataDir + "/reference_trajectory.csv";

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result limb(std::vector<std::string> args, const std::string& stdin_text = "",
            const char* threads = "2") {
  args.insert(args.begin(), "limb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), in, out, err, threads);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("limbscrew_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

NumericCsv table_of(const std::string& csv) {
  std::istringstream in(csv);
  return parse_numeric_csv(in, "output");
}

// All-zero raw angles, rates and accelerations: the reference pose, where
// S4 = (1,0,0,0,0,-l1) and the reduced Jacobian is singular.
std::string reference_pose_row() {
  std::string s = "t";
  for (const char* p : {"theta", "dtheta", "ddtheta"}) {
    for (int i = 1; i <= 7; ++i) s += std::string(",") + p + std::to_string(i);
  }
  s += "\n0";
  for (int k = 0; k < 21; ++k) s += ",0";
  return s + "\n";
}

std::string config_with_gravity(double g) {
  return R"({"geometry": {"l1": 0.3, "l2": 0.25},
             "dynamics": {"m1": 2.0, "m2": 1.2, "m3": 0.45, "l3": 0.18, "g": )" +
         format_number(g) + R"(, "inertias": [0.05, 0.02, 0.004]}})";
}

TEST(Format, SeventeenDigitsAndSignlessZero) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(-2.5), "-2.5");
  EXPECT_EQ(format_number(1e-7), "9.9999999999999995e-08");
  EXPECT_EQ(format_number(INFINITY), "inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Format, TableCsvAndJson) {
  const Table t{{"a", "b"}, {{1.0, -0.0}, {0.5, INFINITY}}};
  std::ostringstream csv, json;
  t.write_csv(csv);
  t.write_json(json);
  EXPECT_EQ(csv.str(), "a,b\n1,0\n0.5,inf\n");
  EXPECT_EQ(json.str(), "{\"columns\":[\"a\",\"b\"],\"rows\":[[1,0],[0.5,null]]}\n");
}

TEST(Config, ParsesReferenceFile) {
  std::ifstream f(kConfig);
  std::stringstream ss;
  ss << f.rdbuf();
  const LimbConfig c = parse_config(ss.str());
  EXPECT_EQ(c.geometry.arm_length(), 0.30);
  EXPECT_EQ(c.geometry.forearm_length(), 0.25);
  ASSERT_TRUE(c.dynamics);
  const LimbDynamicsParams ref = oracle::reference_dynamics();
  for (Body b : kBodies) {
    EXPECT_EQ(c.dynamics->segment(b).mass, ref.segment(b).mass);
    EXPECT_EQ(c.dynamics->segment(b).inertia, ref.segment(b).inertia);
    EXPECT_EQ(c.dynamics->segment(b).com_offset, ref.segment(b).com_offset);
  }
  EXPECT_EQ(c.dynamics->hand_length, 0.18);
  EXPECT_EQ(c.dynamics->gravity, 9.81);
}

TEST(Config, ScalarInertiaOffsetsAndLimits) {
  const LimbConfig c = parse_config(R"({
    "geometry": {"l1": 0.3, "l2": 0.25},
    "dynamics": {"m1": 1, "m2": 1, "m3": 1, "l3": 0.2, "inertias": [0.1, 0.2, 0.3],
                 "com_offsets": [[0.1, 0, 0], [0.2, 0.01, 0], [0.05, 0, 0.01]]},
    "joint_limits": [[-1, 1], [-1, 1], [-1, 1], [0, 2], [-1, 1], [-1, 1], [-3, 3]]})");
  EXPECT_EQ(c.dynamics->segment(Body::kForearm).inertia, 0.2 * Mat3::Identity());
  EXPECT_EQ(c.dynamics->segment(Body::kForearm).com_offset, Vec3(0.2, 0.01, 0));
  EXPECT_EQ(c.dynamics->gravity, 9.81);
  ASSERT_TRUE(c.geometry.joint_limits());
  EXPECT_EQ((*c.geometry.joint_limits())[3].max, 2.0);
}

TEST(Config, RejectsBadDocuments) {
  const char* bad[] = {
      "not json",
      R"({"geometry": {"l1": 0.3}})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25}, "colour": 1})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25, "l3": 1}})",
      R"({"geometry": {"l1": -0.3, "l2": 0.25}})",
      R"({"geometry": {"l1": "a", "l2": 0.25}})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25}, "joint_limits": [[0, 1]]})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25},
          "joint_limits": [[1, 0], [0, 1], [0, 1], [0, 1], [0, 1], [0, 1], [0, 1]]})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25},
          "dynamics": {"m1": 1, "m2": 1, "m3": 1, "l3": 0.2, "inertias": [0.1, -0.2, 0.3]}})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25},
          "dynamics": {"m1": -1, "m2": 1, "m3": 1, "l3": 0.2, "inertias": [0.1, 0.2, 0.3]}})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25},
          "dynamics": {"m1": 1, "m2": 1, "m3": 1, "l3": 0.2, "inertias": [0.1, 0.2]}})",
      R"({"geometry": {"l1": 0.3, "l2": 0.25},
          "dynamics": {"m1": 1, "m2": 1, "m3": 1, "l3": 0.2, "inertias": [0.1, 0.2, 0.3],
                       "damping": 1}})",
  };
  for (const char* doc : bad) {
    try {
      parse_config(doc);
      ADD_FAILURE() << "accepted: " << doc;
    } catch (const CliError& e) {
      EXPECT_EQ(e.exit_code(), kExitInput) << doc;
    }
  }
}

TEST(Trajectory, ParsesColumnsAndEffectiveAngles) {
  std::istringstream in("t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n"
                        "0,0,0,0,0,0,0,0\n\n"
                        "0.5,1,2,3,4,5,6,7\r\n");
  const Trajectory raw = parse_trajectory(in, false);
  ASSERT_EQ(raw.states.size(), 2u);
  EXPECT_EQ(raw.columns, 8);
  EXPECT_EQ(raw.t[1], 0.5);
  EXPECT_EQ(raw.states[1].theta[6], 7.0);
  EXPECT_EQ(raw.states[1].theta_dot, JointVector::Zero());

  in.clear();
  in.str("t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n0,0,0,0,0,0,0,0\n");
  const Trajectory eff = parse_trajectory(in, true);
  for (int i = 0; i < kJointCount; ++i) EXPECT_EQ(eff.states[0].theta[i], -kJointOffsets[i]);

  std::istringstream empty("");
  EXPECT_TRUE(parse_trajectory(empty, false).states.empty());
}

TEST(Trajectory, ErrorsCiteTheRow) {
  const std::string header = "t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n";
  const std::pair<std::string, std::string> cases[] = {
      {header + "0,0,0,0,0,0,0,0\n0.1,0,0,x,0,0,0,0\n", "row 2 (line 3)"},
      {header + "0,0,0,0,0,0,0,0\n0.1,0,0,0,0,0,0\n", "row 2 (line 3)"},
      {header + "0,0,0,0,0,0,0,0\n0,0,0,0,0,0,0,0\n", "row 2 (line 3)"},
      {header + "0,0,0,0,0,0,0,nan\n", "row 1 (line 2)"},
      {"t,theta1,theta2\n0,0,0\n", "header has 3 columns"},
      {"t,theta1,theta2,theta3,theta4,theta5,theta6,theta8\n", "expected 'theta7'"},
  };
  for (const auto& [text, needle] : cases) {
    std::istringstream in(text);
    try {
      parse_trajectory(in, false);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const CliError& e) {
      EXPECT_EQ(e.exit_code(), kExitInput);
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  }
}

TEST(Cli, FkAtReferencePose) {
  const Result r = limb({"fk", "--config", kConfig, "--traj", "-"}, reference_pose_row());
  ASSERT_EQ(r.code, 0) << r.err;
  const NumericCsv t = table_of(r.out);
  ASSERT_EQ(t.rows.size(), 1u);
  const double expected[6] = {1, 0, 0, 0, 0, -0.3};
  const char* names[6] = {"S4_L", "S4_M", "S4_N", "S4_P", "S4_Q", "S4_R"};
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(t.rows[0][t.column(names[k])], expected[k], 1e-15);
  EXPECT_NEAR(t.rows[0][t.column("S5_P")], 0.55, 1e-15);
  EXPECT_NEAR(t.rows[0][t.column("O4_y")], 0.3, 1e-15);

  // The same pose given as operator angles theta + offset.
  const std::string header = "t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n";
  std::string effective = header + "0";
  for (double offset : kJointOffsets) effective += "," + format_number(offset);
  const Result e =
      limb({"fk", "--config", kConfig, "--traj", "-", "--effective-angles"}, effective + "\n");
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.out, limb({"fk", "--config", kConfig, "--traj", "-"}, header + "0,0,0,0,0,0,0,0\n").out);
}

TEST(Cli, EmptyTrajectoryGivesHeaderOnly) {
  const Result r = limb({"fk", "--config", kConfig, "--traj", "-"},
                        "t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  EXPECT_EQ(r.out.rfind("t,S1_L,", 0), 0u);
}

TEST(Cli, MalformedRowExitsWithInputError) {
  const Result r = limb({"fk", "--config", kConfig, "--traj", "-"},
                        "t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n0,0,0,0,0,0,0\n");
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("row 1"), std::string::npos) << r.err;
}

TEST(Cli, MissingDerivativeColumnsAreNamed) {
  const std::string angles_only =
      "t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n0,0,0,0,0,0,0,0\n";
  for (const char* cmd : {"invdyn", "twist"}) {
    const Result r = limb({cmd, "--config", kConfig, "--traj", "-"}, angles_only);
    EXPECT_EQ(r.code, kExitInput);
    EXPECT_NE(r.err.find("'dtheta1'"), std::string::npos) << r.err;
  }
  std::string with_rates = "t";
  for (const char* p : {"theta", "dtheta"}) {
    for (int i = 1; i <= 7; ++i) with_rates += std::string(",") + p + std::to_string(i);
  }
  with_rates += "\n0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n";
  const Result r = limb({"invdyn", "--config", kConfig, "--traj", "-"}, with_rates);
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("'ddtheta1'"), std::string::npos) << r.err;
}

TEST(Cli, StaticRowWristTorque) {
  const Result r = limb({"invdyn", "--config", kConfig, "--traj", "-"}, reference_pose_row());
  ASSERT_EQ(r.code, 0) << r.err;
  const NumericCsv t = table_of(r.out);
  EXPECT_NEAR(t.rows[0][t.column("T3_x")], 0.0, 1e-12);
  EXPECT_NEAR(t.rows[0][t.column("T3_y")], 0.0, 1e-12);
  EXPECT_NEAR(t.rows[0][t.column("T3_z")], 0.45 * 9.81 * 0.18 / 2, 1e-12);
  EXPECT_NEAR(t.rows[0][t.column("F47_y")], 0.45 * 9.81, 1e-12);
}

TEST(Cli, WeightlessStaticRowIsAllZero) {
  const std::string config = write_temp("g0.json", config_with_gravity(0.0));
  const Result r = limb({"invdyn", "--config", config, "--traj", "-"}, reference_pose_row());
  ASSERT_EQ(r.code, 0) << r.err;
  const NumericCsv t = table_of(r.out);
  for (std::size_t c = 1; c < t.header.size(); ++c) EXPECT_EQ(t.rows[0][c], 0.0) << t.header[c];
}

TEST(Cli, InvdynThenFwddynRecoversBodyAccelerations) {
  const Result inv = limb({"invdyn", "--config", kConfig, "--traj", kTrajectory});
  ASSERT_EQ(inv.code, 0) << inv.err;
  const Result fwd = limb({"fwddyn", "--config", kConfig, "--traj", kTrajectory, "--wrenches", "-"},
                          inv.out);
  ASSERT_EQ(fwd.code, 0) << fwd.err;
  const NumericCsv out = table_of(fwd.out);

  std::ifstream f(kTrajectory);
  const Trajectory traj = parse_trajectory(f, false);
  ASSERT_EQ(out.rows.size(), traj.states.size());
  const LimbGeometry g = oracle::reference_geometry();
  for (std::size_t r = 0; r < traj.states.size(); ++r) {
    const LimbKinematics k = limb_kinematics(traj.states[r], g);
    const char* frames[3] = {"3", "4", "7"};
    for (int b = 0; b < 3; ++b) {
      const BodyState& s = k.bodies[b];
      const double scale = std::max(1.0, std::max(s.alpha.norm(), s.a.norm()));
      for (int a = 0; a < 3; ++a) {
        const std::string axis(1, "xyz"[a]);
        EXPECT_NEAR(out.rows[r][out.column(std::string("alpha") + frames[b] + "_" + axis)],
                    s.alpha[a], 1e-8 * scale);
        EXPECT_NEAR(out.rows[r][out.column(std::string("a") + frames[b] + "_" + axis)], s.a[a],
                    1e-8 * scale);
      }
    }
  }
}

TEST(Cli, FwddynRejectsIncompleteWrenches) {
  const Result r = limb({"fwddyn", "--config", kConfig, "--traj", kTrajectory, "--wrenches", "-"},
                        "t,T1_x\n0,0\n0.1,0\n0.2,0\n0.3,0\n0.4,0\n");
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("T1_y"), std::string::npos) << r.err;
}

TEST(Cli, FwddynSingularMassMatrixIsNumericalFailure) {
  const std::string config = write_temp("massless.json", R"({
    "geometry": {"l1": 0.3, "l2": 0.25},
    "dynamics": {"m1": 2, "m2": 1, "m3": 0, "l3": 0.2, "inertias": [0.05, 0.02, 0]}})");
  const Result inv = limb({"invdyn", "--config", kConfig, "--traj", kTrajectory});
  const Result r = limb({"fwddyn", "--config", config, "--traj", kTrajectory, "--wrenches", "-"},
                        inv.out);
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.err.find("row 1"), std::string::npos) << r.err;
}

TEST(Cli, JacobianAndTwistColumns) {
  const Result jac = limb({"jac", "--config", kConfig, "--traj", kTrajectory});
  ASSERT_EQ(jac.code, 0) << jac.err;
  const NumericCsv j = table_of(jac.out);
  EXPECT_EQ(j.header.size(), 38u);
  std::ifstream f(kTrajectory);
  const Trajectory traj = parse_trajectory(f, false);
  const LimbGeometry g = oracle::reference_geometry();
  for (std::size_t r = 0; r < traj.states.size(); ++r) {
    const Mat6 ref = jacobian(forward_kinematics(traj.states[r], g)).reduced;
    EXPECT_EQ(j.rows[r][j.column("J23")], ref(1, 2));
    EXPECT_EQ(j.rows[r][j.column("J61")], ref(5, 0));
  }
  const Result singular = limb({"jac", "--config", kConfig, "--traj", "-"}, reference_pose_row());
  ASSERT_EQ(singular.code, 0);
  const NumericCsv sj = table_of(singular.out);
  EXPECT_GT(sj.rows[0][sj.column("cond")], 1e12);

  const Result tw = limb({"twist", "--config", kConfig, "--traj", kTrajectory});
  ASSERT_EQ(tw.code, 0) << tw.err;
  const NumericCsv t = table_of(tw.out);
  const JointState& st = traj.states[2];
  const MotionState m = motion_state(7, st, chain_motion(st, g));
  EXPECT_EQ(t.rows[2][t.column("IM7_R")], m.motion.linear_moment[2]);
  EXPECT_EQ(t.rows[2][t.column("IA7_L")], m.acceleration.angular[0]);
}

TEST(Cli, JsonCarriesTheSameNumbers) {
  const Result csv = limb({"fk", "--config", kConfig, "--traj", kTrajectory});
  const Result json = limb({"fk", "--config", kConfig, "--traj", kTrajectory, "--format", "json"});
  ASSERT_EQ(json.code, 0) << json.err;
  const NumericCsv t = table_of(csv.out);
  for (const auto& row : t.rows) {
    for (double x : row) EXPECT_NE(json.out.find(format_number(x)), std::string::npos);
  }
  EXPECT_EQ(json.out.rfind("{\"columns\":[\"t\",\"S1_L\"", 0), 0u);
  EXPECT_EQ(limb({"fk", "--config", kConfig, "--traj", kTrajectory, "--format", "xml"}).code,
            kExitInput);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const Result one = limb({"invdyn", "--config", kConfig, "--traj", kTrajectory}, "", "1");
  const Result many = limb({"invdyn", "--config", kConfig, "--traj", kTrajectory}, "", "8");
  const Result unset = limb({"invdyn", "--config", kConfig, "--traj", kTrajectory}, "", nullptr);
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
  EXPECT_EQ(one.out, unset.out);
  EXPECT_EQ(limb({"fk", "--config", kConfig, "--traj", kTrajectory}, "", "0").code, kExitInput);
  EXPECT_EQ(limb({"fk", "--config", kConfig, "--traj", kTrajectory}, "", "two").code, kExitInput);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "limbscrew_cli_test_out.csv";
  std::filesystem::remove(path);
  const Result r = limb({"fk", "--config", kConfig, "--traj", kTrajectory, "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), limb({"fk", "--config", kConfig, "--traj", kTrajectory}).out);
}

TEST(Cli, JointLimitsGateTrajectoryRows) {
  const std::string config = write_temp("limits.json", R"({
    "geometry": {"l1": 0.3, "l2": 0.25},
    "joint_limits": [[-1, 1], [-1, 1], [-1, 1], [-1, 1], [-1, 1], [-1, 1], [-1, 1]]})");
  const Result ok = limb({"fk", "--config", config, "--traj", "-"},
                         "t,theta1,theta2,theta3,theta4,theta5,theta6,theta7\n0,0,0,0,0,0,0,0\n");
  EXPECT_EQ(ok.code, 0) << ok.err;
  const Result bad = limb({"fk", "--config", config, "--traj", kTrajectory});
  EXPECT_EQ(bad.code, kExitInput);
  EXPECT_NE(bad.err.find("row 4"), std::string::npos) << bad.err;
}

TEST(Cli, IkThroughPointsFindsTheLine) {
  const Result r = limb({"ik", "--config", kConfig, "--p1", "0,0.55,0", "--p2", "0,0.55,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const NumericCsv t = table_of(r.out);
  ASSERT_FALSE(t.rows.empty());
  const LimbGeometry g = oracle::reference_geometry();
  Vec6 target;
  target << 0, 0, 1, 0.55, 0, 0;
  bool found = false;
  for (const auto& row : t.rows) {
    JointVector theta = JointVector::Zero();
    for (int i = 0; i < 6; ++i) theta[i] = row[i];
    found |= (as_vector(end_effector_line(theta, g)) - target).cwiseAbs().maxCoeff() < 1e-8;
  }
  EXPECT_TRUE(found);
}

TEST(Cli, IkSeedAndEffectiveAngles) {
  const LimbGeometry g = oracle::reference_geometry();
  JointVector theta;
  theta << 0.3, -0.4, 0.5, 1.0, 0.6, -0.2, 0.0;
  const Screw line = end_effector_line(theta, g);
  std::string line_arg, seed_arg;
  const Vec6 lv = as_vector(line);
  const JointVector eff = effective_angles(theta);
  for (int k = 0; k < 6; ++k) {
    line_arg += (k ? "," : "") + format_number(lv[k]);
    seed_arg += (k ? "," : "") + format_number(k == 5 ? eff[k] + 0.05 : eff[k]);
  }
  const Result r = limb({"ik", "--config", kConfig, "--line", line_arg, "--seed", seed_arg,
                         "--effective-angles"});
  ASSERT_EQ(r.code, 0) << r.err;
  const NumericCsv t = table_of(r.out);
  ASSERT_EQ(t.rows.size(), 1u);
  // theta6 is held at its seed value.
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(t.rows[0][i], eff[i], 1e-8) << i;
  EXPECT_NEAR(t.rows[0][5], eff[5] + 0.05, 1e-12);
}

TEST(Cli, IkFailures) {
  const Result far = limb({"ik", "--config", kConfig, "--p1", "0,0.9,0", "--p2", "0,0.9,1"});
  EXPECT_EQ(far.code, kExitNoSolution);
  EXPECT_EQ(far.out, "theta1,theta2,theta3,theta4,theta5,theta6,residual,iterations\n");
  EXPECT_EQ(limb({"ik", "--config", kConfig, "--line", "0,0,1,1,0,1"}).code, kExitInput);
  EXPECT_EQ(limb({"ik", "--config", kConfig, "--p1", "1,2,3", "--p2", "1,2,3"}).code, kExitInput);
  EXPECT_EQ(limb({"ik", "--config", kConfig, "--p1", "1,2,3"}).code, kExitInput);
  EXPECT_EQ(limb({"ik", "--config", kConfig}).code, kExitInput);
  EXPECT_EQ(limb({"ik", "--config", kConfig, "--line", "0,0,1,0,0"}).code, kExitInput);
  EXPECT_EQ(limb({"ik", "--config", kConfig, "--line", "0,0,1,0.3,0,0", "--starts", "0"}).code,
            kExitInput);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(limb({}).code, kExitInput);
  EXPECT_EQ(limb({"spin"}).code, kExitInput);
  EXPECT_EQ(limb({"fk", "--traj", kTrajectory}).code, kExitInput);
  EXPECT_EQ(limb({"fk", "--config", "/nonexistent.json", "--traj", kTrajectory}).code, kExitInput);
  EXPECT_EQ(limb({"fk", "--config", kConfig, "--traj", "/nonexistent.csv"}).code, kExitInput);
  EXPECT_EQ(limb({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace limbscrew::cli
