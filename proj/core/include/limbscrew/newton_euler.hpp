// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

// Newton-Euler dynamics of the three rigid bodies of the limb.
//
//   body     frame  motion screw   reaction into the body
//   arm      3      joint 3        torso -> arm      (F03, torque T1)
//   forearm  4      joint 4        arm -> forearm    (F34, torque T2)
//   hand     7      joint 7        forearm -> hand   (F47, torque T3)
//
// Every per-body vector is expressed in that body's frame and, for moments,
// taken about that frame's origin. The arm and forearm levers to the next
// joint are [l1 0 0] and [l2 0 0] in their own frames.

#include <array>

#include "limbscrew/diff_kinematics.hpp"

namespace limbscrew {

enum class Body { kArm = 0, kForearm = 1, kHand = 2 };

inline constexpr std::array<Body, 3> kBodies = {Body::kArm, Body::kForearm, Body::kHand};

// 3, 4 or 7.
int body_frame(Body b);

struct SegmentProperties {
  double mass = 0.0;             // kg
  Mat3 inertia = Mat3::Zero();   // kg m^2, about the frame origin, body axes
  Vec3 com_offset = Vec3::Zero();  // m, body axes
};

struct LimbDynamicsParams {
  std::array<SegmentProperties, 3> segments;  // indexed by Body
  double hand_length = 0.0;                   // m
  double gravity = 9.81;                      // m/s^2, acting along -z of frame 0

  const SegmentProperties& segment(Body b) const { return segments[static_cast<int>(b)]; }

  // Throws Error(kInvalidInput) on negative mass or gravity, or an inertia
  // that is not symmetric positive semidefinite.
  void validate() const;
};

// Centres of mass at [l/2 0 0] with l = l1, l2, hand_length.
LimbDynamicsParams make_dynamics_params(const LimbGeometry& geometry,
                                        const std::array<double, 3>& masses,
                                        const std::array<Mat3, 3>& inertias,
                                        double hand_length, double gravity = 9.81);

struct Wrench {
  Vec3 force = Vec3::Zero();   // N
  Vec3 moment = Vec3::Zero();  // N m
};

// Weight of the body in its own frame.
Vec3 gravity_force(Body b, const FrameSet& fs, const LimbDynamicsParams& p);

// q = m (v + omega x G)
Vec3 linear_momentum(Body b, const BodyState& s, const LimbDynamicsParams& p);
// H = I omega + m G x v
Vec3 angular_momentum(Body b, const BodyState& s, const LimbDynamicsParams& p);

// Net external wrench the motion requires, about the frame origin.
Wrench newton_euler_wrench(Body b, const BodyState& s, const LimbDynamicsParams& p);

struct LimbKinematics {
  ChainMotion chain;
  std::array<BodyState, 3> bodies;  // indexed by Body
};

LimbKinematics limb_kinematics(const JointState& s, const LimbGeometry& geometry);

// Joint torques and reaction forces, each in its owning body's frame:
// X_to_Y is the force X exerts on Y, stored in Y's frame.
struct DynamicsSolution {
  Vec3 shoulder_torque = Vec3::Zero();    // T1, frame 3
  Vec3 elbow_torque = Vec3::Zero();       // T2, frame 4
  Vec3 wrist_torque = Vec3::Zero();       // T3, frame 7
  Vec3 torso_to_arm = Vec3::Zero();       // F03, frame 3
  Vec3 arm_to_torso = Vec3::Zero();       // F30 = -F03
  Vec3 arm_to_forearm = Vec3::Zero();     // F34, frame 4
  Vec3 forearm_to_arm = Vec3::Zero();     // F43 = -F34
  Vec3 forearm_to_hand = Vec3::Zero();    // F47, frame 7
  Vec3 hand_to_forearm = Vec3::Zero();    // F74 = -F47
  std::array<BodyState, 3> bodies;        // kinematic body states used
};

DynamicsSolution inverse_dynamics(const JointState& s, const LimbGeometry& geometry,
                                  const LimbDynamicsParams& p);

// Torque components about the joint axes: joints 1-3 from T1, 4 from T2,
// 5-7 from T3.
JointVector joint_axis_torques(const DynamicsSolution& sol, const FrameSet& fs);

struct AppliedLoads {
  Vec3 shoulder_torque = Vec3::Zero();
  Vec3 elbow_torque = Vec3::Zero();
  Vec3 wrist_torque = Vec3::Zero();
  Vec3 torso_to_arm = Vec3::Zero();
  Vec3 arm_to_forearm = Vec3::Zero();
  Vec3 forearm_to_hand = Vec3::Zero();
};

AppliedLoads applied_loads(const DynamicsSolution& sol);

struct BodyAcceleration {
  Vec3 alpha = Vec3::Zero();  // rad/s^2
  Vec3 a = Vec3::Zero();      // m/s^2, spatial (see BodyState)
};

// Body accelerations produced by the applied loads and gravity at the given
// angles and rates (theta_ddot is ignored). Throws Error(kSingularMassMatrix)
// when the 18x18 system cannot be solved.
std::array<BodyAcceleration, 3> forward_dynamics(const JointState& s, const AppliedLoads& loads,
                                                 const LimbGeometry& geometry,
                                                 const LimbDynamicsParams& p);

}  // namespace limbscrew
