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

#include <string>
#include <vector>

#include "gatequiv/noise.hpp"
#include "gatequiv/propagation.hpp"

namespace gatequiv {

/// `points` equally spaced frequencies on [−half_width, half_width].
std::vector<double> symmetric_grid(double half_width, int points);
/// The default integration grid ω ∈ [−50/T, 50/T] with 4001 points.
std::vector<double> default_grid(double duration, int points = 4001);
/// `points` logarithmically spaced positive frequencies on [lo, hi].
std::vector<double> log_grid(double lo, double hi, int points);

/// R_q(ω) = ∫₀ᵀ Rᵀ(t) χ_q[h_c(t)] e^{−iωt} dt.
CVector r_omega(const Trajectory& traj, const NoiseChannel& channel, double omega);

struct FilterFunctionResult {
  std::string label;
  std::vector<double> omega;
  std::vector<CVector> response;  // R_q(ω_k)
  std::vector<double> filter;     // F_q(ω_k) = |R_q(ω_k)|²
  double filter_at_zero = 0.0;    // F_q(0), used for quasi-static noise
};

FilterFunctionResult filter_function(const Trajectory& traj, const NoiseChannel& channel,
                                     const std::vector<double>& omega);
std::vector<FilterFunctionResult> filter_functions(const Trajectory& traj,
                                                   const std::vector<NoiseChannel>& channels,
                                                   const std::vector<double>& omega);

struct InfidelityEstimate {
  /// (1/2π) Σ_q ∫ S_q F_q dω.
  double value = 0.0;
  /// Estimate of the spectral weight beyond the grid edges, assuming
  /// F ∝ 1/ω² and S held at its edge value.
  double truncation_bound = 0.0;
  bool truncated = false;
};

/// Trapezoidal integration over each result's grid. Quasi-static channels
/// contribute σ² F_q(0).
InfidelityEstimate avg_infidelity(const std::vector<FilterFunctionResult>& results,
                                  const std::vector<Psd>& psds);
/// Uses each channel's own PSD.
InfidelityEstimate avg_infidelity(const std::vector<FilterFunctionResult>& results,
                                  const std::vector<NoiseChannel>& channels);

/// Leading-order factor relating the spectral overlap to the trace
/// infidelity 1 − |tr(U₀†U)|²/N²: the infidelity is (2/N)·⟨|ε|²⟩ for an
/// error generator ε·σ.
double infidelity_prefactor(int dimension);

}  // namespace gatequiv
