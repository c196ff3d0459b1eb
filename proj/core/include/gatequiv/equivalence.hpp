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

#include <limits>
#include <string>
#include <vector>

#include "gatequiv/control.hpp"
#include "gatequiv/filterfn.hpp"
#include "gatequiv/noise.hpp"
#include "gatequiv/propagation.hpp"

namespace gatequiv {

/// Frame change along a fixed algebra direction g with profile ν(t):
///   V(t) = exp(−i ν(t) g·σ / 2),  Q(t) = exp(ν(t) Λ_g) = adjoint_of(V(t)),
///   h_Q(t) = ν̇(t) g / 2.
class FrameTransform {
 public:
  FrameTransform(BasisPtr basis, AlgebraVector axis, NuProfile nu, double duration);

  const GeneratorBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const AlgebraVector& axis() const { return axis_; }
  const NuProfile& profile() const { return nu_; }
  double duration() const { return duration_; }
  /// Λ_g = Σ_i g_i G_i.
  const RMatrix& generator() const { return generator_; }

  RMatrix q(double t) const;
  CMatrix v(double t) const;
  AlgebraVector shift(double t) const;
  /// iV†V̇ = ν̇ g·σ / 2.
  CMatrix connection(double t) const;
  /// max(‖Q(0) − 1‖, ‖Q(T) − 1‖), entrywise maximum.
  double endpoint_violation() const;

 private:
  BasisPtr basis_;
  AlgebraVector axis_;
  NuProfile nu_;
  double duration_;
  RMatrix generator_;
};

/// Rotation about σ_z (su(2)) or λ₃ (su(3)). Throws std::invalid_argument
/// if Q(0) or Q(T) differs from the identity by more than 1e−10.
FrameTransform z_axis_transform(const NuProfile& nu, BasisPtr basis, double duration);
/// Same construction for an arbitrary axis, without the endpoint check.
FrameTransform axis_transform(BasisPtr basis, AlgebraVector axis, const NuProfile& nu,
                              double duration);

struct ConditionReport {
  std::string label;
  /// max_t ‖Q a − λ a‖ with λ = a·Qa/|a|²; zero when a = 0.
  double eigenvector_violation = 0.0;
  /// λ at the time of the largest violation (NaN when a = 0).
  double eigenvalue = 0.0;
  /// max_t ‖Q M − M Q‖_F.
  double commutator_violation = 0.0;
  /// max_t ‖M h_Q‖.
  double nullspace_violation = 0.0;
  double tolerance = 1e-10;

  bool eigenvector_ok() const { return eigenvector_violation < tolerance; }
  bool commutes() const { return commutator_violation < tolerance; }
  bool nullspace_ok() const { return nullspace_violation < tolerance; }
  bool passed() const { return eigenvector_ok() && commutes() && nullspace_ok(); }
};

/// Evaluates the three sufficient conditions on `samples` uniformly spaced
/// times covering [0, T].
std::vector<ConditionReport> check_conditions(const FrameTransform& transform,
                                              const std::vector<NoiseChannel>& channels,
                                              int samples = 1001, double tolerance = 1e-10);

/// h̃_c(t) = Q(t) h_c(t) + h_Q(t), on the same grid and breakpoints.
ControlSchedule transform_schedule(const ControlSchedule& schedule, const FrameTransform& transform);

/// max over channels and the given times of ‖Qᵀ χ_q[h̃_c] − χ_q[h_c]‖.
double sensitivity_mismatch(const ControlSchedule& base, const FrameTransform& transform,
                            const std::vector<NoiseChannel>& channels,
                            const std::vector<double>& times);

struct ChannelMismatch {
  std::string label;
  double max_filter = 0.0;         // max_ω F_q
  double max_abs_difference = 0.0;  // max_ω |F_q − F̃_q|
  double relative() const {
    return max_filter > 0.0 ? max_abs_difference / max_filter : max_abs_difference;
  }
};

struct EquivalenceReport {
  /// 1 − |tr(Ũ†U)|/N.
  double gate_distance = 0.0;
  /// max over nodes and channels of ‖R̃ᵀ χ̃ − Rᵀ χ‖.
  double integrand_mismatch = 0.0;
  std::vector<ChannelMismatch> channels;
  /// Filled only by the FrameTransform overload (NaN otherwise).
  double sensitivity_mismatch = std::numeric_limits<double>::quiet_NaN();
  double endpoint_violation = std::numeric_limits<double>::quiet_NaN();

  double max_filter_mismatch() const;
};

double gate_distance(const CMatrix& a, const CMatrix& b);

EquivalenceReport verify_equivalence(const ControlSchedule& base,
                                     const ControlSchedule& transformed,
                                     const std::vector<NoiseChannel>& channels,
                                     const std::vector<double>& omega,
                                     Stepper stepper = Stepper::magnus4);

/// Builds the transformed schedule from `transform` and additionally checks
/// the sensitivity identity directly.
EquivalenceReport verify_equivalence(const ControlSchedule& base, const FrameTransform& transform,
                                     const std::vector<NoiseChannel>& channels,
                                     const std::vector<double>& omega,
                                     Stepper stepper = Stepper::magnus4);

}  // namespace gatequiv
