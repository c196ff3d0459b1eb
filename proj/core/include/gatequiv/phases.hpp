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
#include "gatequiv/equivalence.hpp"
#include "gatequiv/propagation.hpp"

namespace gatequiv {

/// Maps an angle to (−π, π].
double wrap_phase(double angle);

/// Cyclic-state phase bookkeeping. Paths are accumulated continuously from
/// t = 0; reduce modulo 2π only when comparing.
struct AbelianPhaseDecomposition {
  CVector initial_state;
  double total = 0.0;
  double geometric = 0.0;
  double dynamical = 0.0;
  std::vector<double> times;
  std::vector<double> total_path;      // unwrapped arg⟨φ(0)|φ(t)⟩
  std::vector<double> dynamical_path;  // −∫₀ᵗ ⟨φ|H|φ⟩
  std::vector<double> geometric_path;  // total − dynamical
};

/// Splits the phase of a cyclic state into α_g and α_d. Throws
/// std::domain_error when U(T)|φ⟩ departs from a multiple of |φ⟩ by more
/// than `cyclic_tolerance`.
AbelianPhaseDecomposition abelian_decompose(const Trajectory& traj, const CVector& state,
                                            double cyclic_tolerance = 1e-8);

/// (Δα_g, Δα_d) with Δα_g = ∫⟨φ|iV†V̇|φ⟩dt = −Δα_d along the base
/// trajectory. Throws std::invalid_argument unless V has identity endpoints.
std::pair<double, double> phase_shift_under_transform(const Trajectory& traj,
                                                      const FrameTransform& transform,
                                                      const CVector& state);

/// Columns are the frame states |φ_a(t)⟩.
using FrameFunction = std::function<CMatrix(double)>;

struct CyclicFrame {
  FrameFunction states;
  double period = 0.0;
  /// max |Φ(T) − Φ(0)| entrywise.
  double cyclicity_defect = 0.0;
  bool cyclic(double tolerance = 1e-10) const { return cyclicity_defect < tolerance; }
};

/// Cyclic frame of the resonant Λ drive, Ω̄(t) = ∫₀ᵗ Ω:
///   φ₁ = (e^{−iφ/2} cos(θ/2), e^{iφ/2} sin(θ/2), 0)
///   φ₂ = e^{iΩ̄}(cos Ω̄ |b⟩ − i sin Ω̄ |e⟩)
///   φ₃ = e^{iΩ̄}(cos Ω̄ |e⟩ − i sin Ω̄ |b⟩)
/// with |b⟩ = (e^{−iφ/2} sin(θ/2), −e^{iφ/2} cos(θ/2), 0) and |e⟩ = (0, 0, 1).
CyclicFrame holonomic_cyclic_frame(const PulseEnvelope& envelope, double theta, double phi,
                                   double period);

/// V(t)Φ(t), the frame carried into the transformed picture.
FrameFunction transformed_frame(FrameFunction frame, const FrameTransform& transform);

struct NonAbelianPhaseData {
  std::vector<double> times;
  /// 𝒜_ab = ⟨φ_a|i∂_t|φ_b⟩ (Hermitian part of a fourth-order finite-difference
  /// estimate).
  std::vector<CMatrix> connection;
  /// ℰ_ab = −⟨φ_a|H|φ_b⟩.
  std::vector<CMatrix> energy;
  /// Largest anti-Hermitian part discarded from the 𝒜 estimates.
  double hermiticity_defect = 0.0;
  /// max |𝒜(Δt) − 𝒜(Δt/2)| over all nodes.
  double richardson_change = 0.0;
  double gram_deviation = 0.0;
};

/// Samples 𝒜 and ℰ on the schedule grid. Throws std::invalid_argument if a
/// frame is not orthonormal to 1e−9 and std::domain_error if consecutive
/// frame vectors lose overlap (a discontinuity).
NonAbelianPhaseData nonabelian_connection(const FrameFunction& frame,
                                          const ControlSchedule& schedule);

/// u(T) from the time-ordered product of exp(i(𝒜+ℰ)Δt), one fourth-order
/// Magnus step per interval with 𝒜+ℰ interpolated by local cubics.
CMatrix reconstruct_block(const NonAbelianPhaseData& data);

/// ‖U Φ(0) − Φ(T) u(T)‖_F for the given propagator.
double reconstruction_error(const NonAbelianPhaseData& data, const FrameFunction& frame,
                            const CMatrix& propagator);

/// ((cos θ, e^{−iφ} sin θ), (e^{iφ} sin θ, −cos θ)).
CMatrix holonomic_gate(double theta, double phi);

}  // namespace gatequiv
