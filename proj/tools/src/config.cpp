// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "limbscrew_cli/cli.hpp"

namespace limbscrew::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw CliError(kExitInput, "config: " + msg); }

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) fail("unknown key '" + key + "' in " + where);
  }
}

const json& required(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail("missing key '" + key + "' in " + where);
  return *it;
}

double number(const json& v, const std::string& what) {
  if (!v.is_number()) fail(what + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(what + " must be finite");
  return x;
}

Vec3 vector3(const json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 3) fail(what + " must be an array of 3 numbers");
  return {number(v[0], what), number(v[1], what), number(v[2], what)};
}

// A scalar means an isotropic tensor.
Mat3 inertia(const json& v, const std::string& what) {
  if (v.is_number()) return number(v, what) * Mat3::Identity();
  if (!v.is_array() || v.size() != 3) fail(what + " must be a number or a 3x3 array");
  Mat3 m;
  for (int r = 0; r < 3; ++r) m.row(r) = vector3(v[r], what).transpose();
  return m;
}

JointLimits joint_limits(const json& v) {
  if (!v.is_array() || v.size() != kJointCount) fail("joint_limits must hold 7 [min, max] pairs");
  JointLimits limits;
  for (int i = 0; i < kJointCount; ++i) {
    const std::string what = "joint_limits[" + std::to_string(i) + "]";
    const json& pair = v[i];
    if (!pair.is_array() || pair.size() != 2) fail(what + " must be a [min, max] pair");
    limits[i] = {number(pair[0], what), number(pair[1], what)};
  }
  return limits;
}

LimbDynamicsParams dynamics(const json& d, const LimbGeometry& geometry) {
  reject_unknown(d, {"m1", "m2", "m3", "l3", "inertias", "g", "com_offsets"}, "dynamics");
  const std::array<double, 3> masses = {number(required(d, "m1", "dynamics"), "m1"),
                                        number(required(d, "m2", "dynamics"), "m2"),
                                        number(required(d, "m3", "dynamics"), "m3")};
  const double l3 = number(required(d, "l3", "dynamics"), "l3");
  const json& in = required(d, "inertias", "dynamics");
  if (!in.is_array() || in.size() != 3) fail("inertias must hold 3 entries");
  const std::array<Mat3, 3> inertias = {inertia(in[0], "inertias[0]"),
                                        inertia(in[1], "inertias[1]"),
                                        inertia(in[2], "inertias[2]")};
  const double g = d.contains("g") ? number(d["g"], "g") : 9.81;

  LimbDynamicsParams p = make_dynamics_params(geometry, masses, inertias, l3, g);
  if (d.contains("com_offsets")) {
    const json& c = d["com_offsets"];
    if (!c.is_array() || c.size() != 3) fail("com_offsets must hold 3 vectors");
    for (int k = 0; k < 3; ++k) {
      p.segments[k].com_offset = vector3(c[k], "com_offsets[" + std::to_string(k) + "]");
    }
  }
  p.validate();
  return p;
}

}  // namespace

LimbConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown(doc, {"geometry", "dynamics", "joint_limits"}, "top level");
  const json& geo = required(doc, "geometry", "top level");
  reject_unknown(geo, {"l1", "l2"}, "geometry");

  try {
    std::optional<JointLimits> limits;
    if (doc.contains("joint_limits")) limits = joint_limits(doc["joint_limits"]);
    LimbConfig config{LimbGeometry(number(required(geo, "l1", "geometry"), "l1"),
                                   number(required(geo, "l2", "geometry"), "l2"), limits),
                      std::nullopt};
    if (doc.contains("dynamics")) config.dynamics = dynamics(doc["dynamics"], config.geometry);
    return config;
  } catch (const Error& e) {
    fail(e.what());
  }
}

}  // namespace limbscrew::cli
