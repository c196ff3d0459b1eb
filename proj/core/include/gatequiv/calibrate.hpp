// Copyright 2026 The gatequiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gatequiv/control.hpp"
#include "gatequiv/propagation.hpp"

namespace gatequiv {

enum class PhaseTarget { geometric, dynamical };

/// Schedule for a given profile amplitude c.
using ScheduleFamily = std::function<ControlSchedule(double)>;

struct CalibrationResult {
  double amplitude = 0.0;  // c*
  double residual = 0.0;   // wrapped target phase at c*, rad
  int iterations = 0;
  int evaluations = 0;
  std::vector<std::pair<double, double>> brackets;  // successive [lo, hi]
};

/// The target phase of `state` after the full schedule, wrapped to (−π, π].
double phase_objective(const ScheduleFamily& family, double amplitude, const CVector& state,
                       PhaseTarget target, Stepper stepper = Stepper::magnus4);

/// Bracketed root of the wrapped target phase in c (TOMS 748). Throws
/// std::domain_error if the objective does not change sign on the bracket
/// or if the state is not cyclic.
CalibrationResult zero_phase(const ScheduleFamily& family, const CVector& state, PhaseTarget target,
                             std::pair<double, double> bracket = {-1.0, 0.0},
                             double tolerance = 1e-8, Stepper stepper = Stepper::magnus4,
                             int max_iterations = 100);

}  // namespace gatequiv
