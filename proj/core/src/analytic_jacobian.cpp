// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <cmath>

#include "limbscrew/diff_kinematics.hpp"

namespace limbscrew {

// Joints 1-3 pass through the shoulder, so the reduced Jacobian is block
// upper-triangular:
//   J = [Ds De; 0 Me],  Ds = [d1 d2 d3], De = [d4 d5 d6], Me = [m4 m5 m6]
//   J^-1 = [Ds^-1, -Ds^-1 De Me^-1; 0, Me^-1]
// with det Ds = -c2 and det Me = +-l1 l2 (l1 c4 + l2) s4 s5.
Mat6 analytic_inverse_jacobian(const JointVector& theta, const LimbGeometry& geometry) {
  if (!theta.allFinite()) {
    throw Error(ErrorCode::kInvalidInput, "joint angles must be finite");
  }
  constexpr double kEps = 1e-8;
  const double l1 = geometry.arm_length();
  const double l2 = geometry.forearm_length();
  const double s1 = std::sin(theta[0]), c1 = std::cos(theta[0]);
  const double s2 = std::sin(theta[1]), c2 = std::cos(theta[1]);
  const double s3 = std::sin(theta[2]), c3 = std::cos(theta[2]);
  const double s4 = std::sin(theta[3]), c4 = std::cos(theta[3]);
  const double s5 = std::sin(theta[4]), c5 = std::cos(theta[4]);
  const double s34 = std::sin(theta[2] + theta[3]), c34 = std::cos(theta[2] + theta[3]);

  const double denominators[] = {c2, s4, s5, l1 * c4 + l2};
  for (double d : denominators) {
    if (std::abs(d) < kEps) {
      throw Error(ErrorCode::kAnalyticSingularity,
                  "analytic inverse Jacobian is undefined at this pose", d);
    }
  }

  const Vec3 d3(c1 * c2, s1 * c2, -s2);                              // S_3, S_4
  const Vec3 a34(s3 * s2 * c1 - c3 * s1, s3 * s2 * s1 + c3 * c1, s3 * c2);
  const Vec3 a45(s2 * c1 * s34 - s1 * c34, s2 * s1 * s34 + c1 * c34, c2 * s34);
  const Vec3 d5(s1 * s34 + s2 * c1 * c34, -c1 * s34 + s2 * s1 * c34, c2 * c34);
  const Vec3 d6 = c5 * a45 - s5 * d3;
  const Vec3 elbow = l1 * a34;
  const Vec3 wrist = elbow + l2 * a45;

  const Vec3 m4 = elbow.cross(d3);
  const Vec3 m5 = wrist.cross(d5);
  const Vec3 m6 = wrist.cross(d6);
  const double det_me = m4.dot(m5.cross(m6));

  Mat3 ds_inv;
  ds_inv << c1 * s2 / c2, s1 * s2 / c2, 1.0,
            -s1, c1, 0.0,
            c1 / c2, s1 / c2, 0.0;
  Mat3 me_inv;
  me_inv.row(0) = m5.cross(m6).transpose() / det_me;
  me_inv.row(1) = m6.cross(m4).transpose() / det_me;
  me_inv.row(2) = m4.cross(m5).transpose() / det_me;
  Mat3 de;
  de << d3, d5, d6;

  Mat6 inv = Mat6::Zero();
  inv.topLeftCorner<3, 3>() = ds_inv;
  inv.topRightCorner<3, 3>() = -ds_inv * de * me_inv;
  inv.bottomRightCorner<3, 3>() = me_inv;
  return inv;
}

}  // namespace limbscrew
