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

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "gatequiv/algebra.hpp"

namespace gatequiv {

/// A deterministic control h_c(t) on [0, T], sampled on a uniform grid of
/// `steps` intervals. Jumps in h_c are only allowed at the declared
/// breakpoints; the propagator splits steps there.
class ControlSchedule {
 public:
  using Sampler = std::function<AlgebraVector(double)>;

  ControlSchedule(BasisPtr basis, double duration, int steps, Sampler sampler,
                  std::vector<double> breakpoints = {});

  AlgebraVector operator()(double t) const { return sampler_(t); }

  const GeneratorBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  double duration() const { return duration_; }
  int steps() const { return steps_; }
  double dt() const { return duration_ / steps_; }
  double time(int k) const { return duration_ * k / steps_; }
  /// Interior discontinuities, strictly inside (0, T), sorted.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  ControlSchedule with_steps(int steps) const;
  /// The restriction to [begin, end], re-based to start at 0.
  ControlSchedule window(double begin, double end, int steps) const;

 private:
  BasisPtr basis_;
  double duration_;
  int steps_;
  Sampler sampler_;
  std::vector<double> breakpoints_;
};

/// Non-negative drive envelope Ω(t) supported on [0, duration].
class PulseEnvelope {
 public:
  enum class Shape { constant, sine_squared, custom };

  static PulseEnvelope constant(double amplitude, double duration);
  /// Ω(t) = peak · sin²(π t / duration); area = peak · duration / 2.
  static PulseEnvelope sine_squared(double peak, double duration);
  /// Duration chosen so the shape with the given peak encloses `area`.
  static PulseEnvelope with_area(Shape shape, double area, double peak);
  /// Arbitrary rate function; the area is integrated by adaptive quadrature.
  static PulseEnvelope custom(std::function<double(double)> rate, double duration);

  double operator()(double t) const;
  /// ∫₀ᵗ Ω(s) ds, clamped to [0, duration].
  double area_until(double t) const;
  double area() const { return area_until(duration_); }
  double duration() const { return duration_; }
  Shape shape() const { return shape_; }

 private:
  PulseEnvelope(Shape shape, double peak, double duration, std::function<double(double)> rate);

  Shape shape_;
  double peak_;
  double duration_;
  std::function<double(double)> rate_;
};

/// Generic single-qubit drive: h_c = ½(Ω cos φ, Ω sin φ, Δ).
struct Su2Params {
  std::function<double(double)> amplitude;
  std::function<double(double)> phase;
  std::function<double(double)> detuning;
  std::vector<double> breakpoints;

  static Su2Params constant(double amplitude, double phase, double detuning);

  struct Segment {
    double duration;
    double amplitude;
    double phase;
    double detuning;
  };
  /// Piecewise-constant drive; breakpoints at the segment joins.
  static Su2Params piecewise(const std::vector<Segment>& segments);
};

/// Frame-shift profile ν(t) with its derivative ν̇(t).
class NuProfile {
 public:
  static NuProfile zero();
  /// ν(t) = c sin²(π t / period); vanishes at every multiple of the period.
  static NuProfile sine_squared(double amplitude, double period);
  /// Cubic B-spline through uniformly spaced samples on [0, duration].
  /// Endpoint samples must be exactly zero.
  static NuProfile sampled(std::vector<double> values, double duration);

  double value(double t) const { return value_(t); }
  double rate(double t) const { return rate_(t); }
  /// c for the sin² family, 0 for the zero profile, NaN for sampled profiles.
  double amplitude() const { return amplitude_; }
  double endpoint_violation(double duration) const;

 private:
  NuProfile(std::function<double(double)> value, std::function<double(double)> rate,
            double amplitude);

  std::function<double(double)> value_;
  std::function<double(double)> rate_;
  double amplitude_;
};

ControlSchedule su2_schedule(const Su2Params& params, double duration, int steps);

/// h̃_c = ½(Ω cos(φ+ν), Ω sin(φ+ν), Δ+ν̇).
ControlSchedule modified_su2_schedule(const Su2Params& params, const NuProfile& nu,
                                      double duration, int steps);

/// Which side of the equator the slice's first leg carries |+x⟩ towards.
/// `north` uses the segment phases η−π/2, η+γ+π/2, η−π/2 verbatim and
/// yields U₀ = exp(iγ n·σ) with n = (sinθ cosη, sinθ sinη, cosθ).
/// `south` negates every segment phase (the σx-conjugate pulse); for
/// θ = π/2 both produce the same gate while the cyclic path is mirrored.
enum class SliceHemisphere { north, south };

struct OrangeSlice {
  double gamma = 0.0;
  double theta = 0.0;
  double eta = 0.0;
  SliceHemisphere hemisphere = SliceHemisphere::north;
};

/// Segment envelopes enclosing areas θ, π, π−θ with a common peak.
std::array<PulseEnvelope, 3> orange_slice_segments(double theta, PulseEnvelope::Shape shape,
                                                   double peak);

struct OrangeSlicePulse {
  Su2Params params;
  double gate_duration = 0.0;  // one application of U₀
  int repetitions = 1;
  double duration() const { return gate_duration * repetitions; }
};

/// Builds the three-segment pulse and repeats it. Throws
/// std::invalid_argument if any segment area is off by more than 1e−9 or
/// θ is outside [0, π].
OrangeSlicePulse orange_slice_pulse(const OrangeSlice& slice,
                                    const std::array<PulseEnvelope, 3>& segments,
                                    int repetitions = 1);

/// Schedule for `orange_slice_pulse`, `steps_per_gate` grid intervals per
/// repetition.
ControlSchedule orange_slice_schedule(const OrangeSlice& slice,
                                      const std::array<PulseEnvelope, 3>& segments,
                                      int repetitions, int steps_per_gate);

/// Λ-system drive in the Gell-Mann basis.
struct LambdaParams {
  PulseEnvelope envelope = PulseEnvelope::constant(0.0, 1.0);
  double theta = 0.0;
  double phi = 0.0;
  double detuning0 = 0.0;
  double detuning1 = 0.0;
};

/// Resonant drive whose envelope encloses area π.
LambdaParams resonant_pi_pulse(double theta, double phi, PulseEnvelope::Shape shape,
                               double peak);

ControlSchedule lambda_schedule(const LambdaParams& params, double duration, int steps);

/// φ → φ + ν(t) inside the half-angle terms; the λ₃ component gains ν̇/2.
ControlSchedule modified_lambda_schedule(const LambdaParams& params, const NuProfile& nu,
                                         double duration, int steps);

}  // namespace gatequiv
