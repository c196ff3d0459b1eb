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

#include <utility>
#include <vector>

#include "gatequiv/control.hpp"
#include "gatequiv/noise.hpp"

namespace gatequiv {

/// `midpoint` uses one exponential exp(−i h(t_mid)·σ Δt) per step.
/// `magnus4` samples h at the two Gauss-Legendre points and adds the
/// commutator correction, giving fourth-order accuracy per step.
enum class Stepper { midpoint, magnus4 };

/// One exponential factor of the time-ordered product. Grid intervals that
/// contain a breakpoint are split into several substeps.
struct Substep {
  int interval = 0;   // index of the grid interval this substep belongs to
  double start = 0.0;
  double length = 0.0;
  AlgebraVector early;  // h at the first sample point
  AlgebraVector late;   // h at the second sample point (equal to `early` for midpoint)
};

/// The control samples needed to propagate a schedule, computed once and
/// reusable across many noise realizations.
class StepPlan {
 public:
  StepPlan(const ControlSchedule& schedule, Stepper stepper = Stepper::magnus4);

  const GeneratorBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  Stepper stepper() const { return stepper_; }
  int intervals() const { return intervals_; }
  double duration() const { return duration_; }
  const std::vector<Substep>& substeps() const { return substeps_; }

  /// Exponent x of the substep factor exp(−i x·σ) for the given samples.
  AlgebraVector exponent(const Substep& step, const AlgebraVector& early,
                         const AlgebraVector& late) const;

 private:
  BasisPtr basis_;
  Stepper stepper_;
  int intervals_;
  double duration_;
  std::vector<Substep> substeps_;
};

/// U_c and R on the uniform grid, with every breakpoint inserted as an
/// extra node.
struct Trajectory {
  BasisPtr basis;
  std::vector<double> times;
  std::vector<CMatrix> unitaries;
  std::vector<AdjointMatrix> adjoints;
  /// h_c(t_k), right-continuous at breakpoints.
  std::vector<AlgebraVector> controls;
  /// lim_{t→t_k⁻} h_c(t); equals `controls` except at breakpoints.
  std::vector<AlgebraVector> left_controls;
  /// Node ranges [first, last] on which h_c is smooth.
  std::vector<std::pair<int, int>> runs;

  int nodes() const { return static_cast<int>(times.size()); }
  double duration() const { return times.back(); }
  const CMatrix& final_unitary() const { return unitaries.back(); }
};

Trajectory propagate(const ControlSchedule& schedule, Stepper stepper = Stepper::magnus4);

/// U_c(T) only, without storing the path.
CMatrix propagate_final(const StepPlan& plan);
CMatrix propagate_final(const ControlSchedule& schedule, Stepper stepper = Stepper::magnus4);

/// Final unitary of h_c + Σ_q δ_q χ_q[h_c]. `noise[q]` holds one value per
/// grid interval; δ_q is held constant across each interval.
CMatrix propagate_noisy(const StepPlan& plan, const std::vector<NoiseChannel>& channels,
                        const std::vector<std::vector<double>>& noise);
CMatrix propagate_noisy(const ControlSchedule& schedule, const std::vector<NoiseChannel>& channels,
                        const std::vector<std::vector<double>>& noise,
                        Stepper stepper = Stepper::magnus4);

}  // namespace gatequiv
