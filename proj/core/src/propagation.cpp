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


#include "gatequiv/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gatequiv {

namespace {

AlgebraVector checked_sample(const ControlSchedule& schedule, double t) {
  AlgebraVector h = schedule(t);
  if (h.size() != schedule.basis().size()) {
    throw std::invalid_argument("schedule sample has the wrong dimension");
  }
  if (!h.allFinite()) throw std::domain_error("non-finite control sample at t = " + std::to_string(t));
  return h;
}

// Offset used to read one-sided limits next to a breakpoint.
double limit_offset(double t, double dt) {
  const double ulp = std::nextafter(std::abs(t), std::numeric_limits<double>::infinity()) -
                     std::abs(t);
  return std::max(1e-10 * dt, 64.0 * ulp);
}

}  // namespace

StepPlan::StepPlan(const ControlSchedule& schedule, Stepper stepper)
    : basis_(schedule.basis_ptr()),
      stepper_(stepper),
      intervals_(schedule.steps()),
      duration_(schedule.duration()) {
  const double dt = schedule.dt();
  const double snap = 1e-9 * dt;
  const auto& breaks = schedule.breakpoints();
  auto next_break = breaks.begin();
  substeps_.reserve(static_cast<std::size_t>(intervals_) + breaks.size());

  const double gauss = std::sqrt(3.0) / 6.0;
  for (int k = 0; k < intervals_; ++k) {
    const double a = schedule.time(k);
    const double b = k + 1 == intervals_ ? duration_ : schedule.time(k + 1);
    std::vector<double> cuts{a};
    while (next_break != breaks.end() && *next_break < b - snap) {
      if (*next_break > a + snap) cuts.push_back(*next_break);
      ++next_break;
    }
    if (next_break != breaks.end() && std::abs(*next_break - b) <= snap) ++next_break;
    cuts.push_back(b);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      Substep s;
      s.interval = k;
      s.start = cuts[c];
      s.length = cuts[c + 1] - cuts[c];
      if (stepper_ == Stepper::midpoint) {
        s.early = checked_sample(schedule, s.start + 0.5 * s.length);
        s.late = s.early;
      } else {
        s.early = checked_sample(schedule, s.start + (0.5 - gauss) * s.length);
        s.late = checked_sample(schedule, s.start + (0.5 + gauss) * s.length);
      }
      substeps_.push_back(std::move(s));
    }
  }
}

AlgebraVector StepPlan::exponent(const Substep& step, const AlgebraVector& early,
                                 const AlgebraVector& late) const {
  if (stepper_ == Stepper::midpoint) return step.length * early;
  AlgebraVector x = 0.5 * step.length * (early + late);
  // Ω = −i(Δt/2)(H₁+H₂) + (√3/12)Δt²[−iH₂, −iH₁], and [b·σ, a·σ] = i bracket(b, a)·σ.
  x += (std::sqrt(3.0) / 12.0) * step.length * step.length * basis_->bracket(late, early);
  return x;
}

Trajectory propagate(const ControlSchedule& schedule, Stepper stepper) {
  const StepPlan plan(schedule, stepper);
  const GeneratorBasis& basis = schedule.basis();
  const int dim = basis.dimension();
  const double dt = schedule.dt();
  const double snap = 1e-9 * dt;
  const auto& breaks = schedule.breakpoints();

  Trajectory traj;
  traj.basis = schedule.basis_ptr();
  const std::size_t nodes = plan.substeps().size() + 1;
  traj.times.reserve(nodes);
  traj.unitaries.reserve(nodes);
  traj.adjoints.reserve(nodes);
  traj.controls.reserve(nodes);
  traj.left_controls.reserve(nodes);

  auto is_break = [&](double t) {
    const auto it = std::lower_bound(breaks.begin(), breaks.end(), t - snap);
    return it != breaks.end() && std::abs(*it - t) <= snap;
  };

  CMatrix u = CMatrix::Identity(dim, dim);
  auto push_node = [&](double t) {
    traj.times.push_back(t);
    traj.unitaries.push_back(u);
    traj.adjoints.push_back(adjoint_of(u, basis));
    if (is_break(t)) {
      const double off = limit_offset(t, dt);
      traj.controls.push_back(checked_sample(schedule, t + off));
      traj.left_controls.push_back(checked_sample(schedule, t - off));
    } else {
      traj.controls.push_back(checked_sample(schedule, t));
      traj.left_controls.push_back(traj.controls.back());
    }
  };

  push_node(0.0);
  int run_start = 0;
  for (const Substep& s : plan.substeps()) {
    u = exp_algebra(basis, plan.exponent(s, s.early, s.late)) * u;
    const double t = s.start + s.length;
    push_node(t);
    const int idx = traj.nodes() - 1;
    if (is_break(t)) {
      traj.runs.emplace_back(run_start, idx);
      run_start = idx;
    }
  }
  traj.times.back() = schedule.duration();
  traj.runs.emplace_back(run_start, traj.nodes() - 1);
  return traj;
}

CMatrix propagate_final(const StepPlan& plan) {
  const GeneratorBasis& basis = plan.basis();
  CMatrix u = CMatrix::Identity(basis.dimension(), basis.dimension());
  for (const Substep& s : plan.substeps()) {
    u = exp_algebra(basis, plan.exponent(s, s.early, s.late)) * u;
  }
  return u;
}

CMatrix propagate_final(const ControlSchedule& schedule, Stepper stepper) {
  return propagate_final(StepPlan(schedule, stepper));
}

CMatrix propagate_noisy(const StepPlan& plan, const std::vector<NoiseChannel>& channels,
                        const std::vector<std::vector<double>>& noise) {
  const GeneratorBasis& basis = plan.basis();
  if (noise.size() != channels.size()) {
    throw std::invalid_argument("propagate_noisy: one noise trajectory per channel required");
  }
  for (std::size_t q = 0; q < channels.size(); ++q) {
    if (channels[q].additive.size() != basis.size()) {
      throw std::invalid_argument("propagate_noisy: channel '" + channels[q].label +
                                  "' does not match the schedule basis");
    }
    if (noise[q].size() != static_cast<std::size_t>(plan.intervals())) {
      throw std::invalid_argument("propagate_noisy: noise trajectory length must equal steps");
    }
  }
  CMatrix u = CMatrix::Identity(basis.dimension(), basis.dimension());
  AlgebraVector early;
  AlgebraVector late;
  for (const Substep& s : plan.substeps()) {
    early = s.early;
    late = s.late;
    for (std::size_t q = 0; q < channels.size(); ++q) {
      const double d = noise[q][static_cast<std::size_t>(s.interval)];
      if (d == 0.0) continue;
      early += d * channels[q].sensitivity(s.early);
      late += d * channels[q].sensitivity(s.late);
    }
    u = exp_algebra(basis, plan.exponent(s, early, late)) * u;
  }
  return u;
}

CMatrix propagate_noisy(const ControlSchedule& schedule, const std::vector<NoiseChannel>& channels,
                        const std::vector<std::vector<double>>& noise, Stepper stepper) {
  return propagate_noisy(StepPlan(schedule, stepper), channels, noise);
}

}  // namespace gatequiv
