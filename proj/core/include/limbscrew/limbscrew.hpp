// Copyright (c) 2026 The limbscrew Authors
// Use of this source code is governed by the Apache-2.0 license, see LICENSE
#pragma once

#include "limbscrew/diff_kinematics.hpp"
#include "limbscrew/errors.hpp"
#include "limbscrew/ik_solver.hpp"
#include "limbscrew/limb_model.hpp"
#include "limbscrew/newton_euler.hpp"
#include "limbscrew/screw_algebra.hpp"
