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


#include "gatequiv/calibrate.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "gatequiv/phases.hpp"

namespace gatequiv {

double phase_objective(const ScheduleFamily& family, double amplitude, const CVector& state,
                       PhaseTarget target, Stepper stepper) {
  const auto d = abelian_decompose(propagate(family(amplitude), stepper), state);
  return wrap_phase(target == PhaseTarget::geometric ? d.geometric : d.dynamical);
}

CalibrationResult zero_phase(const ScheduleFamily& family, const CVector& state, PhaseTarget target,
                             std::pair<double, double> bracket, double tolerance, Stepper stepper,
                             int max_iterations) {
  auto [lo, hi] = bracket;
  if (!(lo < hi)) throw std::invalid_argument("zero_phase: bracket must satisfy lo < hi");
  if (!(tolerance > 0.0)) throw std::invalid_argument("zero_phase: tolerance must be positive");

  CalibrationResult result;
  double best_c = lo;
  double best_f = INFINITY;
  auto objective = [&](double c) {
    ++result.evaluations;
    const double f = phase_objective(family, c, state, target, stepper);
    if (std::abs(f) < std::abs(best_f)) {
      best_c = c;
      best_f = f;
    }
    return f;
  };

  const double f_lo = objective(lo);
  const double f_hi = objective(hi);
  result.brackets.emplace_back(lo, hi);
  if (f_lo == 0.0 || f_hi == 0.0) {
    result.amplitude = f_lo == 0.0 ? lo : hi;
    result.residual = 0.0;
    return result;
  }
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw std::domain_error("zero_phase: objective does not change sign on [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  // The functor sees every new bracket; it stops once the best objective
  // value is within tolerance or the bracket has collapsed.
  auto done = [&](double a, double b) {
    result.brackets.emplace_back(a, b);
    return std::abs(best_f) < tolerance || std::abs(b - a) <= 4e-16 * std::max(1.0, std::abs(a));
  };
  std::uintmax_t iterations = static_cast<std::uintmax_t>(max_iterations);
  boost::math::tools::toms748_solve(objective, lo, hi, f_lo, f_hi, done, iterations);
  result.iterations = static_cast<int>(iterations);
  result.amplitude = best_c;
  result.residual = best_f;
  if (!(std::abs(best_f) < tolerance)) {
    throw std::domain_error("zero_phase: no convergence within " + std::to_string(max_iterations) +
                            " iterations (residual " + std::to_string(best_f) + ")");
  }
  return result;
}

}  // namespace gatequiv
