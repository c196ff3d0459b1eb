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

#include "gatequiv/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace gatequiv {

using std::numbers::pi;

ControlSchedule::ControlSchedule(BasisPtr basis, double duration, int steps, Sampler sampler,
                                 std::vector<double> breakpoints)
    : basis_(std::move(basis)),
      duration_(duration),
      steps_(steps),
      sampler_(std::move(sampler)),
      breakpoints_(std::move(breakpoints)) {
  if (!basis_) throw std::invalid_argument("ControlSchedule: null basis");
  if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
    throw std::invalid_argument("ControlSchedule: duration must be positive");
  }
  if (steps_ < 1) throw std::invalid_argument("ControlSchedule: steps must be >= 1");
  if (!sampler_) throw std::invalid_argument("ControlSchedule: empty sampler");
  std::sort(breakpoints_.begin(), breakpoints_.end());
  const double eps = 1e-12 * duration_;
  std::erase_if(breakpoints_, [&](double b) { return b <= eps || b >= duration_ - eps; });
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end(),
                                 [&](double a, double b) { return std::abs(a - b) <= eps; }),
                     breakpoints_.end());
}

ControlSchedule ControlSchedule::with_steps(int steps) const {
  return ControlSchedule(basis_, duration_, steps, sampler_, breakpoints_);
}

ControlSchedule ControlSchedule::window(double begin, double end, int steps) const {
  if (!(begin >= 0.0 && end <= duration_ && end > begin)) {
    throw std::invalid_argument("ControlSchedule::window: interval outside schedule");
  }
  std::vector<double> inner;
  for (double b : breakpoints_) {
    if (b > begin && b < end) inner.push_back(b - begin);
  }
  auto sampler = [base = sampler_, begin](double t) { return base(t + begin); };
  return ControlSchedule(basis_, end - begin, steps, sampler, std::move(inner));
}

// ---------------------------------------------------------------------------

PulseEnvelope::PulseEnvelope(Shape shape, double peak, double duration,
                             std::function<double(double)> rate)
    : shape_(shape), peak_(peak), duration_(duration), rate_(std::move(rate)) {
  if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
    throw std::invalid_argument("PulseEnvelope: duration must be positive");
  }
}

PulseEnvelope PulseEnvelope::constant(double amplitude, double duration) {
  if (amplitude < 0.0) throw std::invalid_argument("PulseEnvelope: negative amplitude");
  return PulseEnvelope(Shape::constant, amplitude, duration, nullptr);
}

PulseEnvelope PulseEnvelope::sine_squared(double peak, double duration) {
  if (peak < 0.0) throw std::invalid_argument("PulseEnvelope: negative peak");
  return PulseEnvelope(Shape::sine_squared, peak, duration, nullptr);
}

PulseEnvelope PulseEnvelope::with_area(Shape shape, double area, double peak) {
  if (!(peak > 0.0)) throw std::invalid_argument("PulseEnvelope: peak must be positive");
  if (!(area > 0.0)) throw std::invalid_argument("PulseEnvelope: area must be positive");
  switch (shape) {
    case Shape::constant:
      return constant(peak, area / peak);
    case Shape::sine_squared:
      return sine_squared(peak, 2.0 * area / peak);
    case Shape::custom:
      break;
  }
  throw std::invalid_argument("PulseEnvelope::with_area: custom shapes need a rate function");
}

PulseEnvelope PulseEnvelope::custom(std::function<double(double)> rate, double duration) {
  if (!rate) throw std::invalid_argument("PulseEnvelope: empty rate function");
  return PulseEnvelope(Shape::custom, std::numeric_limits<double>::quiet_NaN(), duration,
                       std::move(rate));
}

double PulseEnvelope::operator()(double t) const {
  if (t < 0.0 || t > duration_) return 0.0;
  switch (shape_) {
    case Shape::constant:
      return peak_;
    case Shape::sine_squared: {
      const double s = std::sin(pi * t / duration_);
      return peak_ * s * s;
    }
    case Shape::custom:
      return rate_(t);
  }
  return 0.0;
}

double PulseEnvelope::area_until(double t) const {
  t = std::clamp(t, 0.0, duration_);
  switch (shape_) {
    case Shape::constant:
      return peak_ * t;
    case Shape::sine_squared:
      return peak_ * (t / 2.0 - duration_ * std::sin(2.0 * pi * t / duration_) / (4.0 * pi));
    case Shape::custom:
      if (t == 0.0) return 0.0;
      return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(rate_, 0.0, t, 15,
                                                                          1e-14);
  }
  return 0.0;
}

// ---------------------------------------------------------------------------

Su2Params Su2Params::constant(double amplitude, double phase, double detuning) {
  Su2Params p;
  p.amplitude = [amplitude](double) { return amplitude; };
  p.phase = [phase](double) { return phase; };
  p.detuning = [detuning](double) { return detuning; };
  return p;
}

Su2Params Su2Params::piecewise(const std::vector<Segment>& segments) {
  if (segments.empty()) throw std::invalid_argument("Su2Params::piecewise: no segments");
  std::vector<double> starts;
  double t = 0.0;
  for (const auto& s : segments) {
    if (!(s.duration > 0.0)) throw std::invalid_argument("Su2Params::piecewise: bad duration");
    starts.push_back(t);
    t += s.duration;
  }
  auto pick = [segments, starts](double time) -> const Segment& {
    auto it = std::upper_bound(starts.begin(), starts.end(), time);
    const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - starts.begin() - 1, 0));
    return segments[idx];
  };
  Su2Params p;
  p.amplitude = [pick](double time) { return pick(time).amplitude; };
  p.phase = [pick](double time) { return pick(time).phase; };
  p.detuning = [pick](double time) { return pick(time).detuning; };
  p.breakpoints.assign(starts.begin() + 1, starts.end());
  return p;
}

// ---------------------------------------------------------------------------

NuProfile::NuProfile(std::function<double(double)> value, std::function<double(double)> rate,
                     double amplitude)
    : value_(std::move(value)), rate_(std::move(rate)), amplitude_(amplitude) {}

NuProfile NuProfile::zero() {
  return NuProfile([](double) { return 0.0; }, [](double) { return 0.0; }, 0.0);
}

NuProfile NuProfile::sine_squared(double amplitude, double period) {
  if (!(period > 0.0)) throw std::invalid_argument("NuProfile: period must be positive");
  auto value = [amplitude, period](double t) {
    const double s = std::sin(pi * t / period);
    return amplitude * s * s;
  };
  auto rate = [amplitude, period](double t) {
    return amplitude * pi / period * std::sin(2.0 * pi * t / period);
  };
  return NuProfile(value, rate, amplitude);
}

NuProfile NuProfile::sampled(std::vector<double> values, double duration) {
  if (values.size() < 4) throw std::invalid_argument("NuProfile::sampled: need >= 4 samples");
  if (!(duration > 0.0)) throw std::invalid_argument("NuProfile::sampled: bad duration");
  if (values.front() != 0.0 || values.back() != 0.0) {
    throw std::invalid_argument("NuProfile::sampled: endpoint samples must be zero");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("NuProfile::sampled: non-finite sample");
  }
  const double h = duration / static_cast<double>(values.size() - 1);
  auto spline = std::make_shared<boost::math::interpolators::cardinal_cubic_b_spline<double>>(
      values.begin(), values.end(), 0.0, h);
  // Spline evaluation at the knots reproduces the samples, so ν(0) = ν(T) = 0.
  auto value = [spline, duration](double t) {
    if (t <= 0.0 || t >= duration) return 0.0;
    return (*spline)(t);
  };
  auto rate = [spline, duration](double t) {
    return spline->prime(std::clamp(t, 0.0, duration));
  };
  return NuProfile(value, rate, std::numeric_limits<double>::quiet_NaN());
}

double NuProfile::endpoint_violation(double duration) const {
  return std::max(std::abs(value(0.0)), std::abs(value(duration)));
}

// ---------------------------------------------------------------------------

ControlSchedule su2_schedule(const Su2Params& params, double duration, int steps) {
  return modified_su2_schedule(params, NuProfile::zero(), duration, steps);
}

ControlSchedule modified_su2_schedule(const Su2Params& params, const NuProfile& nu,
                                      double duration, int steps) {
  if (!(duration > 0.0)) throw std::invalid_argument("su2_schedule: duration must be positive");
  if (!params.amplitude || !params.phase || !params.detuning) {
    throw std::invalid_argument("su2_schedule: incomplete parameters");
  }
  auto sampler = [params, nu](double t) {
    const double omega = params.amplitude(t);
    const double phase = params.phase(t) + nu.value(t);
    AlgebraVector h(3);
    h << 0.5 * omega * std::cos(phase), 0.5 * omega * std::sin(phase),
        0.5 * (params.detuning(t) + nu.rate(t));
    return h;
  };
  return ControlSchedule(pauli_basis(), duration, steps, sampler, params.breakpoints);
}

std::array<PulseEnvelope, 3> orange_slice_segments(double theta, PulseEnvelope::Shape shape,
                                                   double peak) {
  if (!(theta > 0.0 && theta < pi)) {
    throw std::invalid_argument(
        "orange_slice_segments: theta must lie in (0, pi) for three non-empty segments");
  }
  return {PulseEnvelope::with_area(shape, theta, peak),
          PulseEnvelope::with_area(shape, pi, peak),
          PulseEnvelope::with_area(shape, pi - theta, peak)};
}

OrangeSlicePulse orange_slice_pulse(const OrangeSlice& slice,
                                    const std::array<PulseEnvelope, 3>& segments,
                                    int repetitions) {
  if (!(slice.theta >= 0.0 && slice.theta <= pi)) {
    throw std::invalid_argument("orange_slice_pulse: theta outside [0, pi]");
  }
  if (repetitions < 1) throw std::invalid_argument("orange_slice_pulse: repetitions < 1");
  const std::array<double, 3> areas{slice.theta, pi, pi - slice.theta};
  for (int k = 0; k < 3; ++k) {
    if (std::abs(segments[k].area() - areas[k]) > 1e-9) {
      throw std::invalid_argument("orange_slice_pulse: segment " + std::to_string(k + 1) +
                                  " area mismatch");
    }
  }
  const double sign = slice.hemisphere == SliceHemisphere::north ? 1.0 : -1.0;
  const std::array<double, 3> phases{sign * (slice.eta - pi / 2.0),
                                     sign * (slice.eta + slice.gamma + pi / 2.0),
                                     sign * (slice.eta - pi / 2.0)};
  const double t1 = segments[0].duration();
  const double t2 = t1 + segments[1].duration();
  const double gate = t2 + segments[2].duration();

  struct Located {
    int segment;
    double local;
  };
  auto locate = [=](double t) {
    const double rep = std::clamp(std::floor(t / gate), 0.0, repetitions - 1.0);
    const double u = t - rep * gate;
    if (u < t1) return Located{0, u};
    if (u < t2) return Located{1, u - t1};
    return Located{2, u - t2};
  };

  OrangeSlicePulse pulse;
  pulse.gate_duration = gate;
  pulse.repetitions = repetitions;
  pulse.params.amplitude = [segments, locate](double t) {
    const Located l = locate(t);
    return segments[l.segment](l.local);
  };
  pulse.params.phase = [phases, locate](double t) { return phases[locate(t).segment]; };
  pulse.params.detuning = [](double) { return 0.0; };
  for (int r = 0; r < repetitions; ++r) {
    const double offset = r * gate;
    pulse.params.breakpoints.push_back(offset + t1);
    pulse.params.breakpoints.push_back(offset + t2);
    if (r + 1 < repetitions) pulse.params.breakpoints.push_back(offset + gate);
  }
  return pulse;
}

ControlSchedule orange_slice_schedule(const OrangeSlice& slice,
                                      const std::array<PulseEnvelope, 3>& segments,
                                      int repetitions, int steps_per_gate) {
  const OrangeSlicePulse pulse = orange_slice_pulse(slice, segments, repetitions);
  return su2_schedule(pulse.params, pulse.duration(), steps_per_gate * repetitions);
}

// ---------------------------------------------------------------------------

LambdaParams resonant_pi_pulse(double theta, double phi, PulseEnvelope::Shape shape,
                               double peak) {
  LambdaParams p;
  p.envelope = PulseEnvelope::with_area(shape, pi, peak);
  p.theta = theta;
  p.phi = phi;
  return p;
}

ControlSchedule lambda_schedule(const LambdaParams& params, double duration, int steps) {
  return modified_lambda_schedule(params, NuProfile::zero(), duration, steps);
}

ControlSchedule modified_lambda_schedule(const LambdaParams& params, const NuProfile& nu,
                                         double duration, int steps) {
  if (!(duration > 0.0)) {
    throw std::invalid_argument("lambda_schedule: duration must be positive");
  }
  const double s = std::sin(params.theta / 2.0);
  const double c = std::cos(params.theta / 2.0);
  auto sampler = [params, nu, s, c](double t) {
    const double omega = params.envelope(t);
    const double half = (params.phi + nu.value(t)) / 2.0;
    AlgebraVector h = AlgebraVector::Zero(8);
    h[2] = (params.detuning0 - params.detuning1 + nu.rate(t)) / 2.0;
    h[3] = omega * std::cos(half) * s;
    h[4] = omega * std::sin(half) * s;
    h[5] = -omega * std::cos(half) * c;
    h[6] = omega * std::sin(half) * c;
    h[7] = (params.detuning0 + params.detuning1) / (2.0 * std::sqrt(3.0));
    return h;
  };
  std::vector<double> breaks;
  if (params.envelope.duration() < duration) breaks.push_back(params.envelope.duration());
  return ControlSchedule(gell_mann_basis(), duration, steps, sampler, std::move(breaks));
}

}  // namespace gatequiv
