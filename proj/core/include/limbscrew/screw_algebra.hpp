// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

// Dual numbers, dual angles and line screws in Plucker form.
//
// Everything is templated on the real scalar so the same code runs on plain
// doubles and on BasicDualScalar<double>, which doubles as a forward-mode
// derivative: a + e*b with e*e = 0 carries d/dt in its dual part.

#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "limbscrew/errors.hpp"

namespace limbscrew {

template <typename T>
using Vector3 = Eigen::Matrix<T, 3, 1>;
using Vec3 = Vector3<double>;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

inline constexpr double kUnitLineTolerance = 1e-10;
inline constexpr double kDegeneratePointDistance = 1e-9;

// a + e*b with e^2 = 0.
template <typename T>
struct BasicDualScalar {
  T real{};
  T dual{};

  constexpr BasicDualScalar() = default;
  // Implicit from a real so that literals and Eigen's Scalar(0) work.
  constexpr BasicDualScalar(T r) : real(r), dual(T{}) {}  // NOLINT
  constexpr BasicDualScalar(T r, T d) : real(r), dual(d) {}

  BasicDualScalar& operator+=(const BasicDualScalar& o) {
    real += o.real;
    dual += o.dual;
    return *this;
  }
  BasicDualScalar& operator-=(const BasicDualScalar& o) {
    real -= o.real;
    dual -= o.dual;
    return *this;
  }
  BasicDualScalar& operator*=(const BasicDualScalar& o) {
    dual = real * o.dual + dual * o.real;
    real *= o.real;
    return *this;
  }
  BasicDualScalar& operator/=(const BasicDualScalar& o) {
    dual = (dual * o.real - real * o.dual) / (o.real * o.real);
    real /= o.real;
    return *this;
  }
};

using DualScalar = BasicDualScalar<double>;

template <typename T>
BasicDualScalar<T> operator+(BasicDualScalar<T> a, const BasicDualScalar<T>& b) {
  return a += b;
}
template <typename T>
BasicDualScalar<T> operator-(BasicDualScalar<T> a, const BasicDualScalar<T>& b) {
  return a -= b;
}
template <typename T>
BasicDualScalar<T> operator*(BasicDualScalar<T> a, const BasicDualScalar<T>& b) {
  return a *= b;
}
template <typename T>
BasicDualScalar<T> operator/(BasicDualScalar<T> a, const BasicDualScalar<T>& b) {
  return a /= b;
}
template <typename T>
BasicDualScalar<T> operator-(const BasicDualScalar<T>& a) {
  return {-a.real, -a.dual};
}
template <typename T>
bool operator==(const BasicDualScalar<T>& a, const BasicDualScalar<T>& b) {
  return a.real == b.real && a.dual == b.dual;
}
template <typename T>
bool operator!=(const BasicDualScalar<T>& a, const BasicDualScalar<T>& b) {
  return !(a == b);
}
// Ordering compares real parts only; needed by a few Eigen reductions.
template <typename T>
bool operator<(const BasicDualScalar<T>& a, const BasicDualScalar<T>& b) {
  return a.real < b.real;
}
template <typename T>
bool operator>(const BasicDualScalar<T>& a, const BasicDualScalar<T>& b) {
  return a.real > b.real;
}

// cos(a + e b) = cos a - e b sin a ; sin(a + e b) = sin a + e b cos a
template <typename T>
BasicDualScalar<T> cos(const BasicDualScalar<T>& x) {
  using std::cos;
  using std::sin;
  return {cos(x.real), -x.dual * sin(x.real)};
}
template <typename T>
BasicDualScalar<T> sin(const BasicDualScalar<T>& x) {
  using std::cos;
  using std::sin;
  return {sin(x.real), x.dual * cos(x.real)};
}
template <typename T>
BasicDualScalar<T> sqrt(const BasicDualScalar<T>& x) {
  using std::sqrt;
  const T r = sqrt(x.real);
  return {r, x.dual / (T(2) * r)};
}
template <typename T>
BasicDualScalar<T> abs(const BasicDualScalar<T>& x) {
  return x.real < T{} ? -x : x;
}

inline double value_of(double x) { return x; }
template <typename T>
auto value_of(const BasicDualScalar<T>& x) {
  return value_of(x.real);
}

// Link twist alpha_ij + e a_ij or joint angle theta_j + e d_j.
template <typename T>
struct BasicDualAngle {
  T angle{};   // radians
  T offset{};  // metres
};

struct DualAngle : BasicDualAngle<double> {
  constexpr DualAngle() = default;
  constexpr DualAngle(double a, double o = 0.0) : BasicDualAngle<double>{a, o} {}

  // Primary part wrapped to (-pi, pi]. Composition inside the library never
  // normalizes; this is for presenting angles.
  DualAngle normalized() const;
};

template <typename T>
BasicDualScalar<T> dual_cos(const BasicDualAngle<T>& a) {
  return cos(BasicDualScalar<T>{a.angle, a.offset});
}
template <typename T>
BasicDualScalar<T> dual_sin(const BasicDualAngle<T>& a) {
  return sin(BasicDualScalar<T>{a.angle, a.offset});
}

// Dual 3-vector: direction (L, M, N) + e moment (P, Q, R). A unit line has
// |direction| = 1 and direction . moment = 0.
template <typename T>
struct BasicScrew {
  Vector3<T> direction = Vector3<T>::Zero();
  Vector3<T> moment = Vector3<T>::Zero();

  static BasicScrew zero() { return {}; }

  BasicScrew& operator+=(const BasicScrew& o) {
    direction += o.direction;
    moment += o.moment;
    return *this;
  }
  BasicScrew& operator-=(const BasicScrew& o) {
    direction -= o.direction;
    moment -= o.moment;
    return *this;
  }
};

using Screw = BasicScrew<double>;

template <typename T>
BasicScrew<T> operator+(BasicScrew<T> a, const BasicScrew<T>& b) {
  return a += b;
}
template <typename T>
BasicScrew<T> operator-(BasicScrew<T> a, const BasicScrew<T>& b) {
  return a -= b;
}
template <typename T>
BasicScrew<T> operator-(const BasicScrew<T>& a) {
  return {-a.direction, -a.moment};
}

// (r + e d)(s + e m) = r s + e (r m + d s)
template <typename T>
BasicScrew<T> operator*(const BasicDualScalar<T>& k, const BasicScrew<T>& s) {
  return {s.direction * k.real, s.moment * k.real + s.direction * k.dual};
}

// Real scaling, e.g. a joint rate times a unit screw.
inline Screw operator*(double k, const Screw& s) { return {k * s.direction, k * s.moment}; }

template <typename T>
BasicScrew<T> screw_cross(const BasicScrew<T>& a, const BasicScrew<T>& b) {
  return {a.direction.cross(b.direction),
          a.direction.cross(b.moment) + a.moment.cross(b.direction)};
}

template <typename T>
BasicDualScalar<T> screw_dot(const BasicScrew<T>& a, const BasicScrew<T>& b) {
  return {a.direction.dot(b.direction),
          a.direction.dot(b.moment) + a.moment.dot(b.direction)};
}

inline Vec6 as_vector(const Screw& s) {
  Vec6 v;
  v << s.direction, s.moment;
  return v;
}
inline Screw screw_from_vector(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }

double pitch(const Screw& s);
bool is_unit_line(const Screw& s, double tol = kUnitLineTolerance);

// Unit line through two points, direction p1 -> p2.
Screw line_from_points(const Vec3& p1, const Vec3& p2, double tol = kDegeneratePointDistance);

// Dual Rodrigues data for a rotation by angle.angle about `axis` combined with
// a slide of angle.offset along it.
template <typename T>
struct BasicScrewOperator {
  BasicScrew<T> axis;
  BasicDualScalar<T> cos_angle;
  BasicDualScalar<T> sin_angle;
};

using ScrewOperator = BasicScrewOperator<double>;

template <typename T>
BasicScrewOperator<T> make_operator(const BasicDualAngle<T>& angle, const BasicScrew<T>& axis) {
  Screw value_axis;
  for (int k = 0; k < 3; ++k) {
    value_axis.direction[k] = value_of(axis.direction[k]);
    value_axis.moment[k] = value_of(axis.moment[k]);
  }
  if (!is_unit_line(value_axis)) {
    throw Error(ErrorCode::kInvalidAxis, "screw operator axis is not a unit line",
                value_axis.direction.norm());
  }
  return {axis, dual_cos(angle), dual_sin(angle)};
}

// s' = s cos q + (axis x s) sin q + axis (axis o s)(1 - cos q), all dual.
template <typename T>
BasicScrew<T> apply_operator(const BasicScrewOperator<T>& q, const BasicScrew<T>& s) {
  const BasicDualScalar<T> one_minus_cos = BasicDualScalar<T>(T(1)) - q.cos_angle;
  return q.cos_angle * s + q.sin_angle * screw_cross(q.axis, s) +
         (screw_dot(q.axis, s) * one_minus_cos) * q.axis;
}

}  // namespace limbscrew

namespace Eigen {

template <typename T>
struct NumTraits<limbscrew::BasicDualScalar<T>> : NumTraits<T> {
  using Real = limbscrew::BasicDualScalar<T>;
  using NonInteger = Real;
  using Nested = Real;
  using Literal = Real;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2 * NumTraits<T>::ReadCost,
    AddCost = 2 * NumTraits<T>::AddCost,
    MulCost = 3 * NumTraits<T>::MulCost + 2 * NumTraits<T>::AddCost,
  };
  static Real epsilon() { return Real(NumTraits<T>::epsilon()); }
  static Real dummy_precision() { return Real(NumTraits<T>::dummy_precision()); }
  static Real highest() { return Real(NumTraits<T>::highest()); }
  static Real lowest() { return Real(NumTraits<T>::lowest()); }
  static int digits10() { return NumTraits<T>::digits10(); }
};

}  // namespace Eigen
