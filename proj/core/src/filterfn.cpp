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


#include "gatequiv/filterfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gatequiv/quadrature.hpp"

namespace gatequiv {

namespace {

struct RunSamples {
  std::vector<double> times;
  std::vector<AlgebraVector> values;  // Rᵀ χ at each node of the run
};

std::vector<RunSamples> integrand(const Trajectory& traj, const NoiseChannel& channel) {
  if (channel.additive.size() != traj.basis->size()) {
    throw std::invalid_argument("channel '" + channel.label + "' does not match trajectory basis");
  }
  std::vector<RunSamples> runs;
  for (const auto& [first, last] : traj.runs) {
    RunSamples r;
    for (int k = first; k <= last; ++k) {
      const AlgebraVector& h = (k == last && k != first) ? traj.left_controls[k] : traj.controls[k];
      r.times.push_back(traj.times[k]);
      r.values.push_back(traj.adjoints[k].transpose() * channel.sensitivity(h));
    }
    runs.push_back(std::move(r));
  }
  return runs;
}

CVector transform(const std::vector<RunSamples>& runs, double omega, int size) {
  CVector r = CVector::Zero(size);
  for (const auto& run : runs) {
    const auto w = oscillatory_weights(run.times, omega);
    for (std::size_t k = 0; k < w.size(); ++k) r += w[k] * run.values[k].cast<Complex>();
  }
  return r;
}

}  // namespace

std::vector<double> symmetric_grid(double half_width, int points) {
  if (!(half_width > 0.0) || points < 2) {
    throw std::invalid_argument("symmetric_grid: need half_width > 0 and at least 2 points");
  }
  std::vector<double> w(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) w[k] = -half_width + 2.0 * half_width * k / (points - 1);
  if (points % 2 == 1) w[static_cast<std::size_t>(points / 2)] = 0.0;
  return w;
}

std::vector<double> default_grid(double duration, int points) {
  if (!(duration > 0.0)) throw std::invalid_argument("default_grid: duration must be positive");
  return symmetric_grid(50.0 / duration, points);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0 && hi > lo) || points < 2) {
    throw std::invalid_argument("log_grid: need 0 < lo < hi and at least 2 points");
  }
  std::vector<double> w(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  for (int k = 0; k < points; ++k) w[k] = lo * std::exp(step * k);
  return w;
}

CVector r_omega(const Trajectory& traj, const NoiseChannel& channel, double omega) {
  return transform(integrand(traj, channel), omega, traj.basis->size());
}

std::vector<FilterFunctionResult> filter_functions(const Trajectory& traj,
                                                   const std::vector<NoiseChannel>& channels,
                                                   const std::vector<double>& omega) {
  if (omega.empty()) throw std::invalid_argument("filter_function: empty frequency grid");
  const int size = traj.basis->size();
  std::vector<std::vector<RunSamples>> samples;
  std::vector<FilterFunctionResult> results(channels.size());
  for (std::size_t q = 0; q < channels.size(); ++q) {
    samples.push_back(integrand(traj, channels[q]));
    results[q].label = channels[q].label;
    results[q].omega = omega;
    results[q].response.reserve(omega.size());
    results[q].filter.reserve(omega.size());
    results[q].filter_at_zero = transform(samples[q], 0.0, size).squaredNorm();
  }
  for (double w : omega) {
    // Weights depend only on the node layout, so they are shared by all channels.
    std::vector<std::vector<Complex>> weights;
    for (const auto& run : samples.front()) weights.push_back(oscillatory_weights(run.times, w));
    for (std::size_t q = 0; q < channels.size(); ++q) {
      CVector r = CVector::Zero(size);
      for (std::size_t j = 0; j < weights.size(); ++j) {
        const auto& run = samples[q][j];
        for (std::size_t k = 0; k < weights[j].size(); ++k) {
          r += weights[j][k] * run.values[k].cast<Complex>();
        }
      }
      results[q].filter.push_back(r.squaredNorm());
      results[q].response.push_back(std::move(r));
    }
  }
  return results;
}

FilterFunctionResult filter_function(const Trajectory& traj, const NoiseChannel& channel,
                                     const std::vector<double>& omega) {
  return filter_functions(traj, {channel}, omega).front();
}

InfidelityEstimate avg_infidelity(const std::vector<FilterFunctionResult>& results,
                                  const std::vector<Psd>& psds) {
  if (results.size() != psds.size()) {
    throw std::invalid_argument("avg_infidelity: one PSD per filter function required");
  }
  InfidelityEstimate est;
  for (std::size_t q = 0; q < results.size(); ++q) {
    const auto& r = results[q];
    const Psd& s = psds[q];
    if (s.is_quasi_static()) {
      const double sigma = std::get<QuasiStaticPsd>(s.spec()).sigma;
      est.value += sigma * sigma * r.filter_at_zero;
      continue;
    }
    if (r.omega.size() < 2) throw std::invalid_argument("avg_infidelity: grid too small");
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < r.omega.size(); ++k) {
      const double h = r.omega[k + 1] - r.omega[k];
      integral += 0.5 * h * (s(r.omega[k]) * r.filter[k] + s(r.omega[k + 1]) * r.filter[k + 1]);
    }
    est.value += integral / (2.0 * std::numbers::pi);

    const double lo = r.omega.front();
    const double hi = r.omega.back();
    double tail = 0.0;
    if (s.support_limit() > hi) tail += s(hi) * r.filter.back() * std::abs(hi);
    if (s.support_limit() > -lo) tail += s(lo) * r.filter.front() * std::abs(lo);
    est.truncation_bound += tail / (2.0 * std::numbers::pi);
  }
  est.truncated = est.truncation_bound > 0.0;
  return est;
}

InfidelityEstimate avg_infidelity(const std::vector<FilterFunctionResult>& results,
                                  const std::vector<NoiseChannel>& channels) {
  std::vector<Psd> psds;
  for (const auto& c : channels) psds.push_back(c.psd);
  return avg_infidelity(results, psds);
}

double infidelity_prefactor(int dimension) {
  if (dimension < 2) throw std::invalid_argument("infidelity_prefactor: dimension < 2");
  return 2.0 / dimension;
}

}  // namespace gatequiv
