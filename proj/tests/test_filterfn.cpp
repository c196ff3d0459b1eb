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


#include <gtest/gtest.h>

#include "gatequiv/filterfn.hpp"
#include "test_support.hpp"

namespace gatequiv {
namespace {

using testing::pi;

Trajectory free_trajectory(double T, int steps = 100) {
  return propagate(su2_schedule(Su2Params::constant(0, 0, 0), T, steps));
}

TEST(FilterFunction, FreeInductionClosedForm) {
  const double T = 3.0;
  const auto traj = free_trajectory(T);
  const auto dephasing = su2_standard_channels()[0];
  const CVector r0 = r_omega(traj, dephasing, 0.0);
  EXPECT_LT(std::abs(r0[2] - Complex(T / 2, 0.0)), 1e-14);
  EXPECT_LT(std::abs(r0[0]) + std::abs(r0[1]), 1e-15);
  const auto grid = symmetric_grid(40.0, 801);
  const auto f = filter_function(traj, dephasing, grid);
  EXPECT_NEAR(f.filter_at_zero, T * T / 4, 1e-13);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double w = grid[k];
    const double want = w == 0.0 ? T * T / 4 : std::pow(std::sin(w * T / 2) / w, 2);
    EXPECT_NEAR(f.filter[k], want, 1e-6 * std::max(want, 1e-3)) << "omega=" << w;
  }
}

TEST(FilterFunction, ZeroChannelGivesZero) {
  const auto traj = propagate(testing::xpi2_schedule(200));
  const auto zero = make_channel("zero", AlgebraVector::Zero(3), RMatrix::Zero(3, 3));
  const auto f = filter_function(traj, zero, symmetric_grid(5.0, 11));
  for (double v : f.filter) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(avg_infidelity({f}, {Psd::white(1.0)}).value, 0.0);
}

TEST(FilterFunction, ZeroSpectrumGivesZeroInfidelity) {
  const auto traj = propagate(testing::xpi2_schedule(200));
  const auto res = filter_functions(traj, su2_standard_channels(), symmetric_grid(5.0, 101));
  const auto est = avg_infidelity(res, std::vector<Psd>(3, Psd::white(0.0)));
  EXPECT_EQ(est.value, 0.0);
}

TEST(FilterFunction, WhiteNoiseOverlapIsLinearAndMatchesTimeDomain) {
  const double T = 10.0;
  const auto traj = free_trajectory(T, 200);
  const auto grid = symmetric_grid(2000.0, 40001);
  const auto res = filter_functions(traj, {su2_standard_channels()[0]}, grid);
  const auto one = avg_infidelity(res, {Psd::white(1e-3)});
  const auto three = avg_infidelity(res, {Psd::white(3e-3)});
  EXPECT_NEAR(one.value / (1e-3 * T / 4), 1.0, 1e-3);
  EXPECT_NEAR(three.value / one.value, 3.0, 1e-12);
  EXPECT_TRUE(one.truncated);
  EXPECT_GT(one.truncation_bound, 0.0);
  EXPECT_LT(one.truncation_bound, 1e-3 * one.value);
}

TEST(FilterFunction, ParsevalOnCompositePulse) {
  const auto traj = propagate(testing::xpi2_schedule(2000));
  const auto channels = su2_standard_channels();
  const auto res = filter_functions(traj, channels, symmetric_grid(400.0, 40001));
  for (std::size_t q = 0; q < channels.size(); ++q) {
    // Time-domain oracle: trapezoid of |Rᵀχ|² on the trajectory nodes.
    double direct = 0.0;
    for (int k = 0; k + 1 < traj.nodes(); ++k) {
      const double a =
          (traj.adjoints[k].transpose() * channels[q].sensitivity(traj.controls[k])).squaredNorm();
      const double b = (traj.adjoints[k + 1].transpose() *
                        channels[q].sensitivity(traj.left_controls[k + 1]))
                           .squaredNorm();
      direct += 0.5 * (a + b) * (traj.times[k + 1] - traj.times[k]);
    }
    const auto est = avg_infidelity({res[q]}, {Psd::white(1.0)});
    EXPECT_NEAR(est.value / direct, 1.0, 2e-3) << channels[q].label;
  }
}

TEST(FilterFunction, MatchesDenseTrapezoidOracle) {
  const auto coarse = propagate(testing::xpi2_schedule(4000));
  const auto fine = propagate(testing::xpi2_schedule(64000));
  const auto ch = su2_standard_channels()[2];
  for (double w : {0.0, 0.13, 0.9, 3.7}) {
    CVector want = CVector::Zero(3);
    for (int k = 0; k + 1 < fine.nodes(); ++k) {
      const double t0 = fine.times[k], t1 = fine.times[k + 1];
      const CVector a = (fine.adjoints[k].transpose() * ch.sensitivity(fine.controls[k]))
                            .cast<Complex>() *
                        std::polar(1.0, -w * t0);
      const CVector b =
          (fine.adjoints[k + 1].transpose() * ch.sensitivity(fine.left_controls[k + 1]))
              .cast<Complex>() *
          std::polar(1.0, -w * t1);
      want += 0.5 * (t1 - t0) * (a + b);
    }
    EXPECT_LT((r_omega(coarse, ch, w) - want).norm(), 1e-5 * std::max(1.0, want.norm()));
  }
}

TEST(FilterFunction, ConvergesUnderGridRefinement) {
  const auto grid = default_grid(8 * pi, 801);
  const auto a = filter_functions(propagate(testing::xpi2_schedule(2000)), su2_standard_channels(), grid);
  const auto b = filter_functions(propagate(testing::xpi2_schedule(4000)), su2_standard_channels(), grid);
  for (std::size_t q = 0; q < a.size(); ++q) {
    const double peak = *std::max_element(b[q].filter.begin(), b[q].filter.end());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      EXPECT_LT(std::abs(a[q].filter[k] - b[q].filter[k]) / peak, 1e-6);
    }
  }
}

TEST(FilterFunction, QuasiStaticUsesZeroFrequency) {
  const double T = 2.0;
  const auto res = filter_functions(free_trajectory(T), {su2_standard_channels()[0]},
                                    symmetric_grid(10.0, 101));
  const auto est = avg_infidelity(res, {Psd::quasi_static(0.1)});
  EXPECT_NEAR(est.value, 0.01 * T * T / 4, 1e-15);
}

TEST(FilterFunction, DecaysAtHighFrequency) {
  const auto traj = propagate(testing::xpi2_schedule(4000));
  const auto ch = su2_standard_channels()[0];
  const auto f = filter_function(traj, ch, log_grid(10.0, 200.0, 40));
  for (std::size_t k = 0; k < f.omega.size(); ++k) {
    EXPECT_LT(f.filter[k] * f.omega[k] * f.omega[k], 10.0) << f.omega[k];
  }
}

TEST(FilterFunction, Grids) {
  const auto g = symmetric_grid(2.0, 5);
  EXPECT_EQ(g, (std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0}));
  const auto d = default_grid(5.0);
  EXPECT_EQ(d.size(), 4001u);
  EXPECT_DOUBLE_EQ(d.back(), 10.0);
  EXPECT_EQ(d[2000], 0.0);
  const auto l = log_grid(0.1, 10.0, 3);
  EXPECT_NEAR(l[1], 1.0, 1e-15);
  EXPECT_THROW(symmetric_grid(1.0, 1), std::invalid_argument);
  EXPECT_THROW(log_grid(0.0, 1.0, 3), std::invalid_argument);
}

TEST(FilterFunction, Prefactor) {
  EXPECT_DOUBLE_EQ(infidelity_prefactor(2), 1.0);
  EXPECT_DOUBLE_EQ(infidelity_prefactor(3), 2.0 / 3.0);
}

TEST(FilterFunction, RejectsMismatchedInputs) {
  const auto traj = free_trajectory(1.0);
  EXPECT_THROW(r_omega(traj, su3_standard_channels()[0], 0.0), std::invalid_argument);
  const auto res = filter_functions(traj, {su2_standard_channels()[0]}, symmetric_grid(1.0, 3));
  EXPECT_THROW(avg_infidelity(res, std::vector<Psd>{}), std::invalid_argument);
}

}  // namespace
}  // namespace gatequiv
