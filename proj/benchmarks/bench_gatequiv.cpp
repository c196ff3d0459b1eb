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


#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "gatequiv/calibrate.hpp"
#include "gatequiv/equivalence.hpp"
#include "gatequiv/filterfn.hpp"
#include "gatequiv/montecarlo.hpp"
#include "gatequiv/propagation.hpp"

namespace {

using namespace gatequiv;
using std::numbers::pi;

OrangeSlicePulse composite() {
  return orange_slice_pulse(
      {-pi / 8, pi / 2, 0.0, SliceHemisphere::south},
      orange_slice_segments(pi / 2, PulseEnvelope::Shape::sine_squared, 1.0), 2);
}

ControlSchedule composite_schedule(int steps) {
  const auto p = composite();
  return su2_schedule(p.params, p.duration(), steps);
}

void BM_PropagateFinal(benchmark::State& state) {
  const auto schedule = composite_schedule(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(propagate_final(schedule));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PropagateFinal)->Arg(1000)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);

void BM_PropagateTrajectory(benchmark::State& state) {
  const auto schedule = composite_schedule(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(propagate(schedule));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PropagateTrajectory)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_PropagateLambda(benchmark::State& state) {
  const auto p = resonant_pi_pulse(pi / 4, pi / 2, PulseEnvelope::Shape::sine_squared, 1.0);
  const auto schedule = lambda_schedule(p, p.envelope.duration(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(propagate_final(schedule));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PropagateLambda)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_FilterFunctions(benchmark::State& state) {
  const auto schedule = composite_schedule(4000);
  const auto traj = propagate(schedule);
  const auto channels = su2_standard_channels();
  const auto grid = default_grid(schedule.duration(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(filter_functions(traj, channels, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FilterFunctions)->Arg(401)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_Calibrate(benchmark::State& state) {
  const auto p = composite();
  const ScheduleFamily family = [p](double c) {
    return modified_su2_schedule(p.params, NuProfile::sine_squared(c, p.gate_duration),
                                 p.duration(), 4000);
  };
  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zero_phase(family, plus, PhaseTarget::geometric));
  }
}
BENCHMARK(BM_Calibrate)->Unit(benchmark::kMillisecond);

void BM_MonteCarloShot(benchmark::State& state) {
  const auto schedule = composite_schedule(1000);
  const StepPlan plan(schedule);
  auto channels = su2_standard_channels();
  for (auto& c : channels) c.psd = Psd::white(1e-4);
  const CMatrix ideal = propagate_final(plan);
  std::uint64_t shot = 0;
  for (auto _ : state) {
    std::vector<std::vector<double>> noise;
    for (std::size_t q = 0; q < channels.size(); ++q) {
      auto engine = shot_engine(1, q, shot);
      noise.push_back(sample_trajectory(channels[q].psd, plan.intervals(), schedule.dt(), engine));
    }
    benchmark::DoNotOptimize(trace_infidelity(ideal, propagate_noisy(plan, channels, noise)));
    ++shot;
  }
}
BENCHMARK(BM_MonteCarloShot)->Unit(benchmark::kMicrosecond);

void BM_ColoredNoiseSynthesis(benchmark::State& state) {
  const Psd psd = Psd::power_law(1e-3, 1.0, 0.01, 10.0);
  auto engine = shot_engine(3, 0, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_trajectory(psd, static_cast<int>(state.range(0)), 0.05, engine));
  }
}
BENCHMARK(BM_ColoredNoiseSynthesis)->Arg(1000)->Arg(8000)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
