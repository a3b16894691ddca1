// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <benchmark/benchmark.h>

#include <limbscrew/limbscrew.hpp>

namespace limbscrew {
namespace {

const LimbGeometry kGeometry(0.30, 0.25);

JointState sample_state() {
  JointState s;
  s.theta << 0.3, -0.4, 0.5, 1.0, 0.6, -0.2, 0.1;
  s.theta_dot << 0.5, -0.3, 0.2, 0.8, -0.4, 0.3, 0.1;
  s.theta_ddot << 1.0, 0.5, -0.7, 0.2, 0.9, -1.1, 0.3;
  return s;
}

LimbDynamicsParams sample_dynamics() {
  Mat3 arm;
  arm << 0.004, 0.0002, 0, 0.0002, 0.062, 0.0001, 0, 0.0001, 0.061;
  return make_dynamics_params(kGeometry, {2.0, 1.2, 0.45},
                              {arm, Vec3(0.002, 0.026, 0.025).asDiagonal().toDenseMatrix(),
                               Vec3(0.0008, 0.0052, 0.0049).asDiagonal().toDenseMatrix()},
                              0.18);
}

void BM_ForwardKinematics(benchmark::State& state) {
  const JointVector t = sample_state().theta;
  for (auto _ : state) benchmark::DoNotOptimize(forward_kinematics(t, kGeometry));
}
BENCHMARK(BM_ForwardKinematics);

void BM_ChainMotion(benchmark::State& state) {
  const JointState s = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(chain_motion(s, kGeometry));
}
BENCHMARK(BM_ChainMotion);

void BM_InverseJacobianNumeric(benchmark::State& state) {
  const JointVector t = sample_state().theta;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobian(forward_kinematics(t, kGeometry)).reduced.inverse().eval());
  }
}
BENCHMARK(BM_InverseJacobianNumeric);

void BM_InverseJacobianAnalytic(benchmark::State& state) {
  const JointVector t = sample_state().theta;
  for (auto _ : state) benchmark::DoNotOptimize(analytic_inverse_jacobian(t, kGeometry));
}
BENCHMARK(BM_InverseJacobianAnalytic);

void BM_IkSeeded(benchmark::State& state) {
  const JointVector t = sample_state().theta;
  const TargetLine target(end_effector_line(t, kGeometry));
  IkOptions opts;
  opts.seed = Vec6(t.head<6>() + Vec6::Constant(0.05));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ik(target, kGeometry, opts));
}
BENCHMARK(BM_IkSeeded);

void BM_IkMultistart(benchmark::State& state) {
  const TargetLine target(end_effector_line(sample_state().theta, kGeometry));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ik(target, kGeometry));
}
BENCHMARK(BM_IkMultistart)->Unit(benchmark::kMicrosecond);

void BM_InverseDynamics(benchmark::State& state) {
  const JointState s = sample_state();
  const LimbDynamicsParams p = sample_dynamics();
  for (auto _ : state) benchmark::DoNotOptimize(inverse_dynamics(s, kGeometry, p));
}
BENCHMARK(BM_InverseDynamics);

void BM_ForwardDynamics(benchmark::State& state) {
  const JointState s = sample_state();
  const LimbDynamicsParams p = sample_dynamics();
  const AppliedLoads loads = applied_loads(inverse_dynamics(s, kGeometry, p));
  for (auto _ : state) benchmark::DoNotOptimize(forward_dynamics(s, loads, kGeometry, p));
}
BENCHMARK(BM_ForwardDynamics);

}  // namespace
}  // namespace limbscrew

BENCHMARK_MAIN();
