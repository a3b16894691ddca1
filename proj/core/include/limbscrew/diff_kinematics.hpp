// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

// Velocity and acceleration screws of the chain, the screw Jacobian and its
// inverse maps. Screw rates dS_i/dt come from running the forward-kinematics
// recursion on dual numbers whose dual part carries d/dt.

#include <Eigen/Core>

#include "limbscrew/limb_model.hpp"

namespace limbscrew {

// Velocity screw in the fixed frame: angular velocity plus the moment part
// (velocity of the point of the body at the frame-0 origin).
struct Twist {
  Vec3 angular = Vec3::Zero();         // rad/s
  Vec3 linear_moment = Vec3::Zero();   // m/s
};

struct AccelerationScrew {
  Vec3 angular = Vec3::Zero();         // rad/s^2
  Vec3 linear_moment = Vec3::Zero();   // m/s^2
};

inline Vec6 as_vector(const Twist& t) {
  Vec6 v;
  v << t.angular, t.linear_moment;
  return v;
}
inline Vec6 as_vector(const AccelerationScrew& a) {
  Vec6 v;
  v << a.angular, a.linear_moment;
  return v;
}
inline Twist twist_from_vector(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }
inline AccelerationScrew acceleration_from_vector(const Vec6& v) {
  return {v.head<3>(), v.tail<3>()};
}

struct MotionState {
  Twist motion;
  AccelerationScrew acceleration;
};

// Frames and their time derivatives along the current joint rates. Entries of
// `rates` are d/dt of the matching entries of `frames`; they are not lines.
struct ChainMotion {
  FrameSet frames;
  FrameSet rates;
};

// Only theta and theta_dot are read.
ChainMotion chain_motion(const JointState& s, const LimbGeometry& geometry);

// i, n in [1, 7].
Twist joint_twist(int i, const JointState& s, const FrameSet& fs);
Twist instantaneous_motion(int n, const JointState& s, const FrameSet& fs);
AccelerationScrew instantaneous_acceleration(int n, const JointState& s, const ChainMotion& cm);
MotionState motion_state(int n, const JointState& s, const ChainMotion& cm);

using Jacobian7 = Eigen::Matrix<double, 6, kJointCount>;

struct ScrewJacobian {
  Jacobian7 full;  // columns S_1..S_7, direction over moment
  Mat6 reduced;    // columns S_1..S_6
};

ScrewJacobian jacobian(const FrameSet& fs);

// dJ/dt of the reduced Jacobian; column i is dS_i/dt.
Mat6 jacobian_derivative(const ChainMotion& cm);

struct InverseOptions {
  double max_condition = 1e8;
};

// 1-norm condition estimate of the reduced Jacobian, +inf when singular.
double jacobian_condition(const Mat6& reduced);

// Joint rates 1..6 that produce `target` as the motion screw of joint 6.
// Throws Error(kSingularConfiguration) with the condition estimate as detail.
Vec6 inverse_velocities(const JointVector& theta, const Twist& target,
                        const LimbGeometry& geometry, const InverseOptions& options = {});

// Joint accelerations 1..6 from the acceleration screw of joint 6. theta_dot
// of joints 1..6 must be known; theta_dot[6] and theta_ddot are ignored.
Vec6 inverse_accelerations(const JointState& s, const AccelerationScrew& target,
                           const LimbGeometry& geometry, const InverseOptions& options = {});

// Closed-form inverse of the reduced Jacobian. Throws
// Error(kAnalyticSingularity) when |c2|, |s4|, |s5| or |l1 c4 + l2| < 1e-8.
Mat6 analytic_inverse_jacobian(const JointVector& theta, const LimbGeometry& geometry);

// Body-frame kinematics of frame i, taken at its origin in its own basis.
// `a` is the spatial acceleration: the body-frame rate of `v` equals
// a - omega x v.
struct BodyState {
  Vec3 omega = Vec3::Zero();
  Vec3 v = Vec3::Zero();
  Vec3 alpha = Vec3::Zero();
  Vec3 a = Vec3::Zero();
};

// frame in [1, 7].
BodyState twist_in_body_frame(int frame, const FrameSet& fs, const MotionState& m);

struct MotionAxis {
  double omega = 0.0;  // rad/s, |angular|
  double v = 0.0;      // m/s, pitch * omega
  Screw axis;          // unit instantaneous screw axis (unit direction, moment with pitch)
};

// Throws Error(kNoAxis) for a pure translation.
MotionAxis motion_axis_decompose(const Twist& t);
Twist recompose(const MotionAxis& m);

}  // namespace limbscrew
