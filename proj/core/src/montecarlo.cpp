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


#include "gatequiv/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <unsupported/Eigen/FFT>

namespace gatequiv {

namespace {

using std::numbers::pi;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

double lowest_feature(const Psd& psd) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PowerLawPsd>) {
          return p.ir_cutoff;
        } else if constexpr (std::is_same_v<T, TabulatedPsd>) {
          for (double w : p.omega) {
            if (w > 0.0) return w;
          }
          return 0.0;
        } else {
          return 0.0;
        }
      },
      psd.spec());
}

std::vector<double> synthesize(const Psd& psd, int steps, double dt, std::mt19937_64& engine) {
  const double nyquist = pi / dt;
  if (psd.support_limit() > nyquist * (1.0 + 1e-12)) {
    throw std::invalid_argument("sample_trajectory: PSD extends above the Nyquist frequency " +
                                std::to_string(nyquist) + "; refine the grid");
  }
  std::size_t m = 1;
  const double feature = lowest_feature(psd);
  std::size_t wanted = 4 * static_cast<std::size_t>(steps);
  if (feature > 0.0) {
    // Resolve the lowest spectral feature with at least four bins.
    wanted = std::max(wanted, static_cast<std::size_t>(std::ceil(8.0 * pi / (feature * dt))));
  }
  wanted = std::min<std::size_t>(wanted, std::size_t{1} << 24);
  while (m < wanted) m <<= 1;

  std::normal_distribution<double> normal(0.0, 1.0);
  const double span = static_cast<double>(m) * dt;
  std::vector<std::complex<double>> spectrum(m, 0.0);
  // ⟨|c_k|²⟩ = S(ω_k) Δω / 2π with Δω = 2π / (M Δt).
  for (std::size_t k = 0; k <= m / 2; ++k) {
    const double w = 2.0 * pi * static_cast<double>(k) / span;
    const double var = psd(w) / span;
    if (k == 0 || k == m / 2) {
      spectrum[k] = std::sqrt(var) * normal(engine);
    } else {
      const double re = normal(engine);
      const double im = normal(engine);
      spectrum[k] = std::sqrt(var / 2.0) * std::complex<double>(re, im);
      spectrum[m - k] = std::conj(spectrum[k]);
    }
  }
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> time;
  fft.inv(time, spectrum);  // includes the 1/M factor
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int j = 0; j < steps; ++j) out[j] = time[j].real() * static_cast<double>(m);
  return out;
}

}  // namespace

std::mt19937_64 shot_engine(std::uint64_t seed, std::uint64_t channel, std::uint64_t shot) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(channel), static_cast<std::uint32_t>(shot),
                    static_cast<std::uint32_t>(shot >> 32)};
  return std::mt19937_64(seq);
}

std::vector<double> sample_trajectory(const Psd& psd, int steps, double dt,
                                      std::mt19937_64& engine) {
  if (steps < 1 || !(dt > 0.0)) {
    throw std::invalid_argument("sample_trajectory: need steps >= 1 and dt > 0");
  }
  if (psd.is_zero()) return std::vector<double>(static_cast<std::size_t>(steps), 0.0);
  if (psd.is_white()) {
    const double sd = std::sqrt(std::get<WhitePsd>(psd.spec()).level / dt);
    std::normal_distribution<double> normal(0.0, sd);
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (double& v : out) v = normal(engine);
    return out;
  }
  if (psd.is_quasi_static()) {
    std::normal_distribution<double> normal(0.0, std::get<QuasiStaticPsd>(psd.spec()).sigma);
    return std::vector<double>(static_cast<std::size_t>(steps), normal(engine));
  }
  return synthesize(psd, steps, dt, engine);
}

NoiseTrajectoryBatch sample_trajectories(const Psd& psd, int steps, double dt, int batch,
                                         std::uint64_t seed, std::uint64_t channel) {
  if (batch < 0) throw std::invalid_argument("sample_trajectories: negative batch");
  NoiseTrajectoryBatch out;
  out.psd = psd;
  out.seed = seed;
  out.channel = channel;
  out.steps = steps;
  out.dt = dt;
  out.samples.reserve(static_cast<std::size_t>(batch));
  for (int s = 0; s < batch; ++s) {
    auto engine = shot_engine(seed, channel, static_cast<std::uint64_t>(s));
    out.samples.push_back(sample_trajectory(psd, steps, dt, engine));
  }
  return out;
}

double trace_infidelity(const CMatrix& ideal, const CMatrix& actual) {
  if (ideal.rows() != actual.rows() || ideal.cols() != actual.cols()) {
    throw std::invalid_argument("trace_infidelity: shape mismatch");
  }
  // 1 − x² = (1 − x)(1 + x) with x = |tr|/N, avoiding cancellation.
  const double d = unitary_distance(ideal, actual);
  return d * (2.0 - d);
}

EnsembleResult ensemble_infidelity(const ControlSchedule& schedule,
                                   const std::vector<NoiseChannel>& channels,
                                   const EnsembleOptions& options) {
  if (options.shots < 1) throw std::invalid_argument("ensemble_infidelity: shots must be >= 1");
  if (options.threads < 1) throw std::invalid_argument("ensemble_infidelity: threads must be >= 1");
  const StepPlan plan(schedule, options.stepper);
  const CMatrix ideal = propagate_final(plan);
  const int steps = schedule.steps();
  const double dt = schedule.dt();

  std::vector<double> values(static_cast<std::size_t>(options.shots), 0.0);
  auto run = [&](int first, int stride) {
    std::vector<std::vector<double>> noise(channels.size());
    for (int s = first; s < options.shots; s += stride) {
      for (std::size_t q = 0; q < channels.size(); ++q) {
        auto engine = shot_engine(options.seed, q, static_cast<std::uint64_t>(s));
        noise[q] = sample_trajectory(channels[q].psd, steps, dt, engine);
      }
      values[static_cast<std::size_t>(s)] =
          trace_infidelity(ideal, propagate_noisy(plan, channels, noise));
    }
  };
  if (options.threads == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(run, t, options.threads);
    for (auto& th : pool) th.join();
  }

  CompensatedSum sum;
  for (double v : values) sum.add(v);
  const double mean = sum.value() / options.shots;
  CompensatedSum spread;
  for (double v : values) spread.add((v - mean) * (v - mean));
  EnsembleResult result;
  result.mean = mean;
  result.shots = options.shots;
  result.standard_error =
      options.shots > 1 ? std::sqrt(spread.value() / (options.shots - 1) / options.shots) : 0.0;
  return result;
}

}  // namespace gatequiv
