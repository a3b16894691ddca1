// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include "limbscrew/newton_euler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace limbscrew {
namespace {

constexpr double kMinMassMatrixRcond = 1e-14;

int index_of(Body b) { return static_cast<int>(b); }

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

// Velocity-dependent part of the required wrench.
Wrench velocity_terms(Body b, const BodyState& s, const LimbDynamicsParams& p) {
  const Vec3 q = linear_momentum(b, s, p);
  const Vec3 h = angular_momentum(b, s, p);
  return {s.omega.cross(q), s.omega.cross(h) + s.v.cross(q)};
}

// R_to^T R_from: re-expresses frame-`from` coordinates in frame `to`.
Mat3 relative_rotation(const FrameSet& fs, int to, int from) {
  return frame_rotation(fs, to).transpose() * frame_rotation(fs, from);
}

// External wrench on each body from the loads and gravity, about its origin.
std::array<Wrench, 3> external_wrenches(const AppliedLoads& l, const FrameSet& fs,
                                        const LimbGeometry& geometry,
                                        const LimbDynamicsParams& p) {
  const Mat3 r4_7 = relative_rotation(fs, 4, 7);
  const Mat3 r3_4 = relative_rotation(fs, 3, 4);
  const Vec3 lever_arm(geometry.arm_length(), 0.0, 0.0);
  const Vec3 lever_forearm(geometry.forearm_length(), 0.0, 0.0);

  std::array<Wrench, 3> w;
  for (Body b : kBodies) {
    const Vec3 weight = gravity_force(b, fs, p);
    w[index_of(b)] = {weight, p.segment(b).com_offset.cross(weight)};
  }

  Wrench& hand = w[index_of(Body::kHand)];
  hand.force += l.forearm_to_hand;
  hand.moment += l.wrist_torque;

  const Vec3 hand_on_forearm = r4_7 * -l.forearm_to_hand;
  Wrench& forearm = w[index_of(Body::kForearm)];
  forearm.force += l.arm_to_forearm + hand_on_forearm;
  forearm.moment += l.elbow_torque + lever_forearm.cross(hand_on_forearm) - r4_7 * l.wrist_torque;

  const Vec3 forearm_on_arm = r3_4 * -l.arm_to_forearm;
  Wrench& arm = w[index_of(Body::kArm)];
  arm.force += l.torso_to_arm + forearm_on_arm;
  arm.moment += l.shoulder_torque + lever_arm.cross(forearm_on_arm) - r3_4 * l.elbow_torque;
  return w;
}

}  // namespace

int body_frame(Body b) {
  switch (b) {
    case Body::kArm: return 3;
    case Body::kForearm: return 4;
    case Body::kHand: return 7;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown body");
}

void LimbDynamicsParams::validate() const {
  if (!std::isfinite(gravity) || gravity < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "gravity must be finite and non-negative", gravity);
  }
  if (!std::isfinite(hand_length) || hand_length < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "hand length must be finite and non-negative",
                hand_length);
  }
  for (int k = 0; k < 3; ++k) {
    const SegmentProperties& seg = segments[k];
    const std::string which = "segment " + std::to_string(k + 1);
    if (!std::isfinite(seg.mass) || seg.mass < 0.0) {
      throw Error(ErrorCode::kInvalidInput, which + " mass must be non-negative", seg.mass);
    }
    if (!seg.inertia.allFinite() || !seg.com_offset.allFinite()) {
      throw Error(ErrorCode::kInvalidInput, which + " inertia and centre of mass must be finite");
    }
    const double scale = std::max(1.0, seg.inertia.cwiseAbs().maxCoeff());
    const double asym = (seg.inertia - seg.inertia.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
      throw Error(ErrorCode::kInvalidInput, which + " inertia must be symmetric", asym);
    }
    const Eigen::SelfAdjointEigenSolver<Mat3> eig(seg.inertia, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-12 * scale) {
      throw Error(ErrorCode::kInvalidInput, which + " inertia must be positive semidefinite",
                  eig.eigenvalues().minCoeff());
    }
  }
}

LimbDynamicsParams make_dynamics_params(const LimbGeometry& geometry,
                                        const std::array<double, 3>& masses,
                                        const std::array<Mat3, 3>& inertias,
                                        double hand_length, double gravity) {
  LimbDynamicsParams p;
  const double lengths[3] = {geometry.arm_length(), geometry.forearm_length(), hand_length};
  for (int k = 0; k < 3; ++k) {
    p.segments[k].mass = masses[k];
    p.segments[k].inertia = inertias[k];
    p.segments[k].com_offset = Vec3(lengths[k] / 2.0, 0.0, 0.0);
  }
  p.hand_length = hand_length;
  p.gravity = gravity;
  p.validate();
  return p;
}

Vec3 gravity_force(Body b, const FrameSet& fs, const LimbDynamicsParams& p) {
  const Vec3 weight(0.0, 0.0, -p.segment(b).mass * p.gravity);
  return frame_rotation(fs, body_frame(b)).transpose() * weight;
}

Vec3 linear_momentum(Body b, const BodyState& s, const LimbDynamicsParams& p) {
  const SegmentProperties& seg = p.segment(b);
  return seg.mass * (s.v + s.omega.cross(seg.com_offset));
}

Vec3 angular_momentum(Body b, const BodyState& s, const LimbDynamicsParams& p) {
  const SegmentProperties& seg = p.segment(b);
  return seg.inertia * s.omega + seg.mass * seg.com_offset.cross(s.v);
}

Wrench newton_euler_wrench(Body b, const BodyState& s, const LimbDynamicsParams& p) {
  const SegmentProperties& seg = p.segment(b);
  const Wrench vel = velocity_terms(b, s, p);
  return {seg.mass * (s.a + s.alpha.cross(seg.com_offset)) + vel.force,
          seg.inertia * s.alpha + seg.mass * seg.com_offset.cross(s.a) + vel.moment};
}

LimbKinematics limb_kinematics(const JointState& s, const LimbGeometry& geometry) {
  if (!s.is_finite()) {
    throw Error(ErrorCode::kInvalidInput, "joint state must be finite");
  }
  LimbKinematics k{chain_motion(s, geometry), {}};
  for (Body b : kBodies) {
    const int frame = body_frame(b);
    k.bodies[index_of(b)] =
        twist_in_body_frame(frame, k.chain.frames, motion_state(frame, s, k.chain));
  }
  return k;
}

DynamicsSolution inverse_dynamics(const JointState& s, const LimbGeometry& geometry,
                                  const LimbDynamicsParams& p) {
  const LimbKinematics k = limb_kinematics(s, geometry);
  const FrameSet& fs = k.chain.frames;
  const Mat3 r4_7 = relative_rotation(fs, 4, 7);
  const Mat3 r3_4 = relative_rotation(fs, 3, 4);
  const Vec3 lever_arm(geometry.arm_length(), 0.0, 0.0);
  const Vec3 lever_forearm(geometry.forearm_length(), 0.0, 0.0);

  DynamicsSolution sol;
  sol.bodies = k.bodies;

  // Hand: its only contact is the wrist.
  {
    const Body b = Body::kHand;
    const Wrench need = newton_euler_wrench(b, k.bodies[index_of(b)], p);
    const Vec3 weight = gravity_force(b, fs, p);
    sol.forearm_to_hand = need.force - weight;
    sol.hand_to_forearm = -sol.forearm_to_hand;
    sol.wrist_torque = need.moment - p.segment(b).com_offset.cross(weight);
  }
  // Forearm: wrist reaction and wrist torque come back from the hand.
  {
    const Body b = Body::kForearm;
    const Wrench need = newton_euler_wrench(b, k.bodies[index_of(b)], p);
    const Vec3 weight = gravity_force(b, fs, p);
    const Vec3 from_hand = r4_7 * sol.hand_to_forearm;
    sol.arm_to_forearm = need.force - weight - from_hand;
    sol.forearm_to_arm = -sol.arm_to_forearm;
    sol.elbow_torque = need.moment - p.segment(b).com_offset.cross(weight) -
                       lever_forearm.cross(from_hand) + r4_7 * sol.wrist_torque;
  }
  // Arm: elbow reaction and elbow torque come back from the forearm.
  {
    const Body b = Body::kArm;
    const Wrench need = newton_euler_wrench(b, k.bodies[index_of(b)], p);
    const Vec3 weight = gravity_force(b, fs, p);
    const Vec3 from_forearm = r3_4 * sol.forearm_to_arm;
    sol.torso_to_arm = need.force - weight - from_forearm;
    sol.arm_to_torso = -sol.torso_to_arm;
    sol.shoulder_torque = need.moment - p.segment(b).com_offset.cross(weight) -
                          lever_arm.cross(from_forearm) + r3_4 * sol.elbow_torque;
  }
  return sol;
}

JointVector joint_axis_torques(const DynamicsSolution& sol, const FrameSet& fs) {
  const Mat3 r3 = frame_rotation(fs, 3);
  const Mat3 r4 = frame_rotation(fs, 4);
  const Mat3 r7 = frame_rotation(fs, 7);
  JointVector tau;
  for (int i = 1; i <= 3; ++i) tau[i - 1] = (r3 * sol.shoulder_torque).dot(fs.joint_axes[i].direction);
  tau[3] = (r4 * sol.elbow_torque).dot(fs.joint_axes[4].direction);
  for (int i = 5; i <= 7; ++i) tau[i - 1] = (r7 * sol.wrist_torque).dot(fs.joint_axes[i].direction);
  return tau;
}

AppliedLoads applied_loads(const DynamicsSolution& sol) {
  return {sol.shoulder_torque, sol.elbow_torque,   sol.wrist_torque,
          sol.torso_to_arm,    sol.arm_to_forearm, sol.forearm_to_hand};
}

std::array<BodyAcceleration, 3> forward_dynamics(const JointState& s, const AppliedLoads& loads,
                                                 const LimbGeometry& geometry,
                                                 const LimbDynamicsParams& p) {
  JointState rates = s;
  rates.theta_ddot.setZero();
  // Only omega and v of the body states enter the system.
  const LimbKinematics k = limb_kinematics(rates, geometry);
  const std::array<Wrench, 3> ext = external_wrenches(loads, k.chain.frames, geometry, p);

  // Unknowns: a3, a4, a7, alpha3, alpha4, alpha7.
  using Mat18 = Eigen::Matrix<double, 18, 18>;
  using Vec18 = Eigen::Matrix<double, 18, 1>;
  Mat18 m = Mat18::Zero();
  Vec18 rhs;
  for (Body b : kBodies) {
    const int k3 = 3 * index_of(b);
    const SegmentProperties& seg = p.segment(b);
    const Wrench vel = velocity_terms(b, k.bodies[index_of(b)], p);
    const Mat3 g = skew(seg.com_offset);
    const int force_row = 6 * index_of(b);
    const int moment_row = force_row + 3;
    m.block<3, 3>(force_row, k3) = seg.mass * Mat3::Identity();
    m.block<3, 3>(force_row, 9 + k3) = -seg.mass * g;
    m.block<3, 3>(moment_row, k3) = seg.mass * g;
    m.block<3, 3>(moment_row, 9 + k3) = seg.inertia;
    rhs.segment<3>(force_row) = ext[index_of(b)].force - vel.force;
    rhs.segment<3>(moment_row) = ext[index_of(b)].moment - vel.moment;
  }

  const Eigen::PartialPivLU<Mat18> lu(m);
  // Eigen's estimate reports 1 when a pivot is exactly zero, so the smallest
  // pivot is checked as well.
  const double pivot_ratio = lu.matrixLU().diagonal().cwiseAbs().minCoeff() /
                             std::max(m.cwiseAbs().maxCoeff(), 1e-300);
  const double rcond = std::min(lu.rcond(), pivot_ratio);
  if (!(rcond > kMinMassMatrixRcond)) {
    throw Error(ErrorCode::kSingularMassMatrix, "body mass matrix is singular", rcond);
  }
  const Vec18 x = lu.solve(rhs);

  std::array<BodyAcceleration, 3> out;
  for (Body b : kBodies) {
    const int k3 = 3 * index_of(b);
    out[index_of(b)] = {x.segment<3>(9 + k3), x.segment<3>(k3)};
  }
  return out;
}

}  // namespace limbscrew
