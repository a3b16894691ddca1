// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include "limbscrew/diff_kinematics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

namespace limbscrew {
namespace {

using Jet = DualScalar;

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw Error(ErrorCode::kInvalidInput, std::string(what) + " index out of range", i);
  }
}

Screw value_part(const BasicScrew<Jet>& s) {
  Screw out;
  for (int k = 0; k < 3; ++k) {
    out.direction[k] = s.direction[k].real;
    out.moment[k] = s.moment[k].real;
  }
  return out;
}

Screw rate_part(const BasicScrew<Jet>& s) {
  Screw out;
  for (int k = 0; k < 3; ++k) {
    out.direction[k] = s.direction[k].dual;
    out.moment[k] = s.moment[k].dual;
  }
  return out;
}

Vec6 solve_reduced(const Mat6& j, const Vec6& rhs, const InverseOptions& options) {
  const double cond = jacobian_condition(j);
  if (!(cond <= options.max_condition)) {
    throw Error(ErrorCode::kSingularConfiguration,
                "reduced Jacobian is singular or ill-conditioned", cond);
  }
  return j.partialPivLu().solve(rhs);
}

}  // namespace

ChainMotion chain_motion(const JointState& s, const LimbGeometry& geometry) {
  if (!s.theta.allFinite() || !s.theta_dot.allFinite()) {
    throw Error(ErrorCode::kInvalidInput, "joint state must be finite");
  }
  std::array<Jet, kJointCount> eff;
  for (int i = 0; i < kJointCount; ++i) {
    eff[i] = Jet(s.theta[i] + kJointOffsets[i], s.theta_dot[i]);
  }
  const BasicFrameSet<Jet> jfs = basic_forward_kinematics(eff, geometry);

  ChainMotion cm;
  for (int i = 0; i < kFrameCount; ++i) {
    cm.frames.joint_axes[i] = value_part(jfs.joint_axes[i]);
    cm.frames.link_axes[i] = value_part(jfs.link_axes[i]);
    cm.frames.normals[i] = value_part(jfs.normals[i]);
    cm.rates.joint_axes[i] = rate_part(jfs.joint_axes[i]);
    cm.rates.link_axes[i] = rate_part(jfs.link_axes[i]);
    cm.rates.normals[i] = rate_part(jfs.normals[i]);
    for (int k = 0; k < 3; ++k) {
      cm.frames.origins[i][k] = jfs.origins[i][k].real;
      cm.rates.origins[i][k] = jfs.origins[i][k].dual;
    }
  }
  return cm;
}

Twist joint_twist(int i, const JointState& s, const FrameSet& fs) {
  check_index(i, 1, kJointCount, "joint");
  const Screw& axis = fs.joint_axes[i];
  return {s.theta_dot[i - 1] * axis.direction, s.theta_dot[i - 1] * axis.moment};
}

Twist instantaneous_motion(int n, const JointState& s, const FrameSet& fs) {
  check_index(n, 1, kJointCount, "joint");
  Twist t;
  for (int i = 1; i <= n; ++i) {
    t.angular += s.theta_dot[i - 1] * fs.joint_axes[i].direction;
    t.linear_moment += s.theta_dot[i - 1] * fs.joint_axes[i].moment;
  }
  return t;
}

AccelerationScrew instantaneous_acceleration(int n, const JointState& s, const ChainMotion& cm) {
  check_index(n, 1, kJointCount, "joint");
  AccelerationScrew a;
  for (int i = 1; i <= n; ++i) {
    const Screw& axis = cm.frames.joint_axes[i];
    const Screw& rate = cm.rates.joint_axes[i];
    a.angular += s.theta_ddot[i - 1] * axis.direction + s.theta_dot[i - 1] * rate.direction;
    a.linear_moment += s.theta_ddot[i - 1] * axis.moment + s.theta_dot[i - 1] * rate.moment;
  }
  return a;
}

MotionState motion_state(int n, const JointState& s, const ChainMotion& cm) {
  return {instantaneous_motion(n, s, cm.frames), instantaneous_acceleration(n, s, cm)};
}

ScrewJacobian jacobian(const FrameSet& fs) {
  ScrewJacobian j;
  for (int i = 1; i <= kJointCount; ++i) j.full.col(i - 1) = as_vector(fs.joint_axes[i]);
  j.reduced = j.full.leftCols<6>();
  return j;
}

Mat6 jacobian_derivative(const ChainMotion& cm) {
  Mat6 jd;
  for (int i = 1; i <= 6; ++i) jd.col(i - 1) = as_vector(cm.rates.joint_axes[i]);
  return jd;
}

double jacobian_condition(const Mat6& reduced) {
  if (!reduced.allFinite()) return std::numeric_limits<double>::infinity();
  const Eigen::PartialPivLU<Mat6> lu(reduced);
  const double rcond = lu.rcond();
  if (!(rcond > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / rcond;
}

Vec6 inverse_velocities(const JointVector& theta, const Twist& target,
                        const LimbGeometry& geometry, const InverseOptions& options) {
  const FrameSet fs = forward_kinematics(theta, geometry);
  return solve_reduced(jacobian(fs).reduced, as_vector(target), options);
}

Vec6 inverse_accelerations(const JointState& s, const AccelerationScrew& target,
                           const LimbGeometry& geometry, const InverseOptions& options) {
  JointState rates = s;
  rates.theta_dot[6] = 0.0;
  const ChainMotion cm = chain_motion(rates, geometry);
  const Vec6 bias = jacobian_derivative(cm) * rates.theta_dot.head<6>();
  return solve_reduced(jacobian(cm.frames).reduced, as_vector(target) - bias, options);
}

BodyState twist_in_body_frame(int frame, const FrameSet& fs, const MotionState& m) {
  check_index(frame, 1, kJointCount, "frame");
  const Mat3 r = frame_rotation(fs, frame);
  const Vec3& p = fs.origins[frame];
  BodyState b;
  b.omega = r.transpose() * m.motion.angular;
  b.v = r.transpose() * (m.motion.linear_moment + m.motion.angular.cross(p));
  b.alpha = r.transpose() * m.acceleration.angular;
  b.a = r.transpose() * (m.acceleration.linear_moment + m.acceleration.angular.cross(p));
  return b;
}

MotionAxis motion_axis_decompose(const Twist& t) {
  const double omega = t.angular.norm();
  if (!(omega > 0.0) || !t.linear_moment.allFinite()) {
    throw Error(ErrorCode::kNoAxis, "twist has no rotation axis", omega);
  }
  MotionAxis out;
  out.omega = omega;
  out.axis.direction = t.angular / omega;
  out.axis.moment = t.linear_moment / omega;
  out.v = pitch(out.axis) * omega;
  return out;
}

Twist recompose(const MotionAxis& m) {
  return {m.omega * m.axis.direction, m.omega * m.axis.moment};
}

}  // namespace limbscrew
