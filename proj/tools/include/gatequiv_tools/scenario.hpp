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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gatequiv/calibrate.hpp"
#include "gatequiv/control.hpp"
#include "gatequiv/equivalence.hpp"
#include "gatequiv/noise.hpp"
#include "gatequiv/propagation.hpp"

namespace gatequiv::tools {

/// Schema violations: unknown keys, wrong types, out-of-range values.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SystemKind { su2, lambda };

struct PulseSpec {
  std::string type;  // orange_slice | constant | free | resonant_pi
  // orange_slice
  OrangeSlice slice;
  PulseEnvelope::Shape envelope = PulseEnvelope::Shape::constant;
  double peak = 1.0;
  int repetitions = 1;
  // constant / free
  double amplitude = 0.0;
  double phase = 0.0;
  double detuning = 0.0;
  // resonant_pi
  double theta = 0.0;
  double phi = 0.0;
  double detuning0 = 0.0;
  double detuning1 = 0.0;
  // explicit duration (constant, free, optional for resonant_pi)
  std::optional<double> duration;
};

struct TransformSpec {
  std::string axis = "z";
  double amplitude = 0.0;
  /// ν period; defaults to the gate period of the pulse.
  double period = 0.0;
};

struct ChannelSpec {
  std::string name;
  NoiseChannel channel;
};

struct CalibrationSpec {
  PhaseTarget target = PhaseTarget::geometric;
  std::pair<double, double> bracket{-1.0, 0.0};
  double tolerance = 1e-8;
};

struct MonteCarloSpec {
  int shots = 1000;
  std::uint64_t seed = 1;
  int threads = 1;
  std::vector<double> strengths{1.0};
  std::optional<int> steps;
};

struct Tolerances {
  double gate = 1e-8;
  double filter = 1e-7;
  double conditions = 1e-10;
  double phase = 1e-6;
};

struct Scenario {
  std::string name;
  std::string description;
  SystemKind system = SystemKind::su2;
  PulseSpec pulse;
  int steps = 4000;
  Stepper stepper = Stepper::magnus4;
  ChannelConvention convention = ChannelConvention::derivative;
  std::optional<TransformSpec> transform;
  std::vector<ChannelSpec> channels;
  double grid_span = 50.0;
  int grid_points = 4001;
  std::optional<CVector> state;
  CalibrationSpec calibration;
  MonteCarloSpec montecarlo;
  Tolerances tolerances;

  double duration() const;
  /// Period of one gate application (the default ν period).
  double gate_period() const;
  BasisPtr basis() const;

  ControlSchedule base_schedule(int steps) const;
  ControlSchedule base_schedule() const { return base_schedule(steps); }
  /// Transform with the configured axis and the given ν amplitude; no
  /// endpoint check.
  FrameTransform frame_transform(double amplitude) const;
  FrameTransform frame_transform() const;
  /// c ↦ transformed schedule, used for calibration.
  ScheduleFamily family(int steps) const;
  std::vector<NoiseChannel> noise_channels() const;
  std::vector<double> frequency_grid() const;
  /// Configured cyclic state, or (1, 1)/√2 for su(2).
  CVector cyclic_state() const;
};

Scenario parse_scenario(const nlohmann::json& document);
Scenario load_scenario(const std::string& path);

/// 64-bit FNV-1a of the given bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace gatequiv::tools
