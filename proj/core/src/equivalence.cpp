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


#include "gatequiv/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gatequiv {

FrameTransform::FrameTransform(BasisPtr basis, AlgebraVector axis, NuProfile nu, double duration)
    : basis_(std::move(basis)), axis_(std::move(axis)), nu_(std::move(nu)), duration_(duration) {
  if (!basis_) throw std::invalid_argument("FrameTransform: null basis");
  if (axis_.size() != basis_->size()) {
    throw std::invalid_argument("FrameTransform: axis length does not match basis");
  }
  if (!(duration_ > 0.0)) throw std::invalid_argument("FrameTransform: duration must be positive");
  generator_ = adjoint_generator(axis_, *basis_);
}

RMatrix FrameTransform::q(double t) const {
  const double nu = nu_.value(t);
  if (nu == 0.0) return RMatrix::Identity(basis_->size(), basis_->size());
  return exp_antisymmetric(nu * generator_);
}

CMatrix FrameTransform::v(double t) const {
  return exp_algebra(*basis_, 0.5 * nu_.value(t) * axis_);
}

AlgebraVector FrameTransform::shift(double t) const { return 0.5 * nu_.rate(t) * axis_; }

CMatrix FrameTransform::connection(double t) const { return basis_->expand(shift(t)); }

double FrameTransform::endpoint_violation() const {
  const RMatrix id = RMatrix::Identity(basis_->size(), basis_->size());
  return std::max((q(0.0) - id).cwiseAbs().maxCoeff(), (q(duration_) - id).cwiseAbs().maxCoeff());
}

FrameTransform axis_transform(BasisPtr basis, AlgebraVector axis, const NuProfile& nu,
                              double duration) {
  return FrameTransform(std::move(basis), std::move(axis), nu, duration);
}

FrameTransform z_axis_transform(const NuProfile& nu, BasisPtr basis, double duration) {
  if (!basis) throw std::invalid_argument("z_axis_transform: null basis");
  if (basis->dimension() != 2 && basis->dimension() != 3) {
    throw std::invalid_argument("z_axis_transform: only su(2) and su(3) are supported");
  }
  // σ_z and λ₃ both sit at index 2.
  AlgebraVector axis = AlgebraVector::Unit(basis->size(), 2);
  FrameTransform transform(std::move(basis), std::move(axis), nu, duration);
  const double violation = transform.endpoint_violation();
  if (violation > 1e-10) {
    throw std::invalid_argument("z_axis_transform: Q(0) or Q(T) is not the identity (violation " +
                                std::to_string(violation) + ")");
  }
  return transform;
}

std::vector<ConditionReport> check_conditions(const FrameTransform& transform,
                                              const std::vector<NoiseChannel>& channels,
                                              int samples, double tolerance) {
  if (samples < 2) throw std::invalid_argument("check_conditions: need at least 2 samples");
  std::vector<ConditionReport> reports;
  for (const auto& c : channels) {
    if (c.additive.size() != transform.basis().size()) {
      throw std::invalid_argument("check_conditions: channel '" + c.label +
                                  "' does not match the transform basis");
    }
    ConditionReport r;
    r.label = c.label;
    r.tolerance = tolerance;
    r.eigenvalue = c.additive.isZero(0.0) ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    reports.push_back(r);
  }
  for (int k = 0; k < samples; ++k) {
    const double t = transform.duration() * k / (samples - 1);
    const RMatrix q = transform.q(t);
    const AlgebraVector h_q = transform.shift(t);
    for (std::size_t i = 0; i < channels.size(); ++i) {
      const auto& c = channels[i];
      auto& r = reports[i];
      const double a2 = c.additive.squaredNorm();
      if (a2 > 0.0) {
        const AlgebraVector qa = q * c.additive;
        const double lambda = c.additive.dot(qa) / a2;
        const double v = (qa - lambda * c.additive).norm();
        if (v > r.eigenvector_violation || k == 0) {
          r.eigenvector_violation = std::max(r.eigenvector_violation, v);
          r.eigenvalue = lambda;
        }
      }
      r.commutator_violation = std::max(
          r.commutator_violation, (q * c.multiplicative - c.multiplicative * q).norm());
      r.nullspace_violation = std::max(r.nullspace_violation, (c.multiplicative * h_q).norm());
    }
  }
  return reports;
}

ControlSchedule transform_schedule(const ControlSchedule& schedule, const FrameTransform& transform) {
  require_same_basis(schedule.basis(), transform.basis());
  if (std::abs(schedule.duration() - transform.duration()) > 1e-12 * schedule.duration()) {
    throw std::invalid_argument("transform_schedule: durations differ");
  }
  auto sampler = [schedule, transform](double t) -> AlgebraVector {
    return transform.q(t) * schedule(t) + transform.shift(t);
  };
  return ControlSchedule(schedule.basis_ptr(), schedule.duration(), schedule.steps(), sampler,
                         schedule.breakpoints());
}

double sensitivity_mismatch(const ControlSchedule& base, const FrameTransform& transform,
                            const std::vector<NoiseChannel>& channels,
                            const std::vector<double>& times) {
  const ControlSchedule moved = transform_schedule(base, transform);
  double worst = 0.0;
  for (double t : times) {
    const AlgebraVector h = base(t);
    const AlgebraVector ht = moved(t);
    const RMatrix qt = transform.q(t).transpose();
    for (const auto& c : channels) {
      worst = std::max(worst, (qt * c.sensitivity(ht) - c.sensitivity(h)).norm());
    }
  }
  return worst;
}

double EquivalenceReport::max_filter_mismatch() const {
  double worst = 0.0;
  for (const auto& c : channels) worst = std::max(worst, c.relative());
  return worst;
}

double gate_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("gate_distance: shape mismatch");
  }
  return unitary_distance(a, b);
}

EquivalenceReport verify_equivalence(const ControlSchedule& base,
                                     const ControlSchedule& transformed,
                                     const std::vector<NoiseChannel>& channels,
                                     const std::vector<double>& omega, Stepper stepper) {
  require_same_basis(base.basis(), transformed.basis());
  if (std::abs(base.duration() - transformed.duration()) > 1e-12 * base.duration()) {
    throw std::invalid_argument("verify_equivalence: durations differ");
  }
  const Trajectory a = propagate(base, stepper);
  const Trajectory b = propagate(transformed, stepper);
  if (a.nodes() != b.nodes()) {
    throw std::invalid_argument("verify_equivalence: schedules use different time grids");
  }

  EquivalenceReport report;
  report.gate_distance = gate_distance(b.final_unitary(), a.final_unitary());
  for (const auto& c : channels) {
    for (int k = 0; k < a.nodes(); ++k) {
      const AlgebraVector ra = a.adjoints[k].transpose() * c.sensitivity(a.controls[k]);
      const AlgebraVector rb = b.adjoints[k].transpose() * c.sensitivity(b.controls[k]);
      const AlgebraVector la = a.adjoints[k].transpose() * c.sensitivity(a.left_controls[k]);
      const AlgebraVector lb = b.adjoints[k].transpose() * c.sensitivity(b.left_controls[k]);
      report.integrand_mismatch =
          std::max({report.integrand_mismatch, (ra - rb).norm(), (la - lb).norm()});
    }
  }
  const auto fa = filter_functions(a, channels, omega);
  const auto fb = filter_functions(b, channels, omega);
  for (std::size_t q = 0; q < channels.size(); ++q) {
    ChannelMismatch m;
    m.label = channels[q].label;
    for (std::size_t k = 0; k < omega.size(); ++k) {
      m.max_filter = std::max(m.max_filter, fa[q].filter[k]);
      m.max_abs_difference =
          std::max(m.max_abs_difference, std::abs(fa[q].filter[k] - fb[q].filter[k]));
    }
    report.channels.push_back(m);
  }
  return report;
}

EquivalenceReport verify_equivalence(const ControlSchedule& base, const FrameTransform& transform,
                                     const std::vector<NoiseChannel>& channels,
                                     const std::vector<double>& omega, Stepper stepper) {
  EquivalenceReport report =
      verify_equivalence(base, transform_schedule(base, transform), channels, omega, stepper);
  std::vector<double> times;
  for (int k = 0; k <= base.steps(); ++k) times.push_back(base.time(k));
  report.sensitivity_mismatch = sensitivity_mismatch(base, transform, channels, times);
  report.endpoint_violation = transform.endpoint_violation();
  return report;
}

}  // namespace gatequiv
