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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gatequiv/control.hpp"
#include "gatequiv/noise.hpp"
#include "gatequiv/propagation.hpp"

namespace gatequiv {

inline constexpr const char* kRngName = "mt19937_64/seed_seq(seed,channel,shot)";

/// Generator for one (channel, shot) pair, derived from the base seed so
/// that shots are independent of execution order.
std::mt19937_64 shot_engine(std::uint64_t seed, std::uint64_t channel, std::uint64_t shot);

/// One real noise record of `steps` values on a uniform grid of spacing dt.
/// White noise is drawn i.i.d. with variance S₀/Δt; quasi-static noise is a
/// single N(0, σ²) value held for the whole record; other spectra use
/// spectral synthesis on a zero-padded grid (at least 4× the record).
/// Throws std::invalid_argument when the PSD extends above the Nyquist
/// frequency π/Δt.
std::vector<double> sample_trajectory(const Psd& psd, int steps, double dt,
                                      std::mt19937_64& engine);

struct NoiseTrajectoryBatch {
  Psd psd;
  std::uint64_t seed = 0;
  std::uint64_t channel = 0;
  int steps = 0;
  double dt = 0.0;
  std::vector<std::vector<double>> samples;  // [shot][step]
  int batch() const { return static_cast<int>(samples.size()); }
};

NoiseTrajectoryBatch sample_trajectories(const Psd& psd, int steps, double dt, int batch,
                                         std::uint64_t seed, std::uint64_t channel = 0);

/// 1 − |tr(U₀†U)|²/N².
double trace_infidelity(const CMatrix& ideal, const CMatrix& actual);

struct EnsembleOptions {
  int shots = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
  Stepper stepper = Stepper::magnus4;
};

struct EnsembleResult {
  double mean = 0.0;
  double standard_error = 0.0;
  int shots = 0;
  std::string rng = kRngName;
};

/// Mean trace infidelity of the noisy evolution against the noiseless gate.
/// Channel q of shot s always receives the record drawn from
/// shot_engine(seed, q, s), so different schedules sharing a seed see
/// identical noise. Results do not depend on the thread count.
EnsembleResult ensemble_infidelity(const ControlSchedule& schedule,
                                   const std::vector<NoiseChannel>& channels,
                                   const EnsembleOptions& options);

}  // namespace gatequiv
