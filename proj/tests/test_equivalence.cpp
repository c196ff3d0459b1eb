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

#include "gatequiv/equivalence.hpp"
#include "test_support.hpp"

namespace gatequiv {
namespace {

using testing::expm;
using testing::kI;
using testing::pi;

AlgebraVector unit(int n, int i) { return AlgebraVector::Unit(n, i); }

TEST(Equivalence, ZeroProfileIsIdentityFrame) {
  const auto tr = z_axis_transform(NuProfile::zero(), pauli_basis(), 2.0);
  for (double t : {0.0, 0.8, 2.0}) {
    EXPECT_LT((tr.q(t) - RMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(tr.shift(t), AlgebraVector::Zero(3));
  }
}

TEST(Equivalence, ZRotationByProfileValue) {
  const double T = 4.0;
  const auto tr = z_axis_transform(NuProfile::sine_squared(pi / 3, T), pauli_basis(), T);
  const RMatrix q = tr.q(T / 2);
  RMatrix expected = RMatrix::Identity(3, 3);
  expected(0, 0) = expected(1, 1) = std::cos(pi / 3);
  expected(1, 0) = std::sin(pi / 3);
  expected(0, 1) = -std::sin(pi / 3);
  EXPECT_LT((q - expected).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((q - adjoint_of(tr.v(T / 2), tr.basis())).cwiseAbs().maxCoeff(), 1e-14);
  const CMatrix v = expm(-kI * (pi / 6) * testing::pauli(2));
  EXPECT_LT((tr.v(T / 2) - v).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Equivalence, ShiftIsHalfProfileRate) {
  const double T = 3.0, c = 0.9;
  const auto tr = z_axis_transform(NuProfile::sine_squared(c, T), pauli_basis(), T);
  for (double t : {0.2, 1.0, 2.6}) {
    EXPECT_NEAR(tr.shift(t)[2], c * pi / (2 * T) * std::sin(2 * pi * t / T), 1e-15);
    EXPECT_NEAR(tr.shift(t).head(2).norm(), 0.0, 1e-15);
    // iV†V̇ by central differences of V.
    const double h = 1e-5;
    const CMatrix vdot = (tr.v(t + h) - tr.v(t - h)) / (2 * h);
    EXPECT_LT((kI * tr.v(t).adjoint() * vdot - tr.connection(t)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Equivalence, EndpointCheck) {
  EXPECT_THROW(z_axis_transform(NuProfile::sine_squared(0.5, 2.0), pauli_basis(), 3.0),
               std::invalid_argument);
  const auto tr = axis_transform(pauli_basis(), unit(3, 2), NuProfile::sine_squared(0.5, 2.0), 3.0);
  EXPECT_GT(tr.endpoint_violation(), 0.1);
  EXPECT_THROW(axis_transform(pauli_basis(), unit(8, 2), NuProfile::zero(), 1.0),
               std::invalid_argument);
}

TEST(Equivalence, Su2ZAxisSatisfiesAllConditions) {
  const double T = 8 * pi;
  const auto tr = z_axis_transform(NuProfile::sine_squared(-0.46, T / 2), pauli_basis(), T);
  for (auto convention : {ChannelConvention::derivative, ChannelConvention::printed}) {
    const auto reports = check_conditions(tr, su2_standard_channels(convention));
    ASSERT_EQ(reports.size(), 3u);
    for (const auto& r : reports) {
      EXPECT_TRUE(r.passed()) << r.label << " " << r.eigenvector_violation << " "
                              << r.commutator_violation << " " << r.nullspace_violation;
    }
    EXPECT_NEAR(reports[0].eigenvalue, 1.0, 1e-12);
    EXPECT_TRUE(std::isnan(reports[1].eigenvalue));
  }
}

TEST(Equivalence, XAxisBreaksDetuningEigenvector) {
  const double T = 5.0;
  const auto tr = axis_transform(pauli_basis(), unit(3, 0), NuProfile::sine_squared(0.7, T), T);
  const auto reports = check_conditions(tr, su2_standard_channels());
  EXPECT_FALSE(reports[0].eigenvector_ok());
  EXPECT_GT(reports[0].eigenvector_violation, 0.1);
  EXPECT_FALSE(reports[0].passed());
  EXPECT_FALSE(reports[1].commutes());
}

TEST(Equivalence, UnitMultiplicativeModelFailsNullspace) {
  const double T = 5.0;
  const auto tr = z_axis_transform(NuProfile::sine_squared(0.7, T), pauli_basis(), T);
  const auto unusual = make_channel("unusual", AlgebraVector::Zero(3), RMatrix::Identity(3, 3));
  const auto r = check_conditions(tr, {unusual}).front();
  EXPECT_TRUE(r.eigenvector_ok());
  EXPECT_TRUE(r.commutes());
  EXPECT_FALSE(r.nullspace_ok());
  EXPECT_NEAR(r.nullspace_violation, 0.7 * pi / (2 * T), 1e-6);
}

TEST(Equivalence, Su3Lambda3SatisfiesAllConditions) {
  const auto p = resonant_pi_pulse(pi / 4, pi / 2, PulseEnvelope::Shape::constant, 1.0);
  const double T = p.envelope.duration();
  const auto tr = z_axis_transform(NuProfile::sine_squared(0.7, T), gell_mann_basis(), T);
  const auto reports = check_conditions(tr, su3_standard_channels());
  ASSERT_EQ(reports.size(), 5u);
  for (const auto& r : reports) EXPECT_TRUE(r.passed()) << r.label;
  // The printed amplitude matrix omits the seventh diagonal entry and so
  // does not commute with rotations in the (6,7) plane.
  const auto printed = check_conditions(tr, su3_standard_channels(ChannelConvention::printed));
  EXPECT_FALSE(printed[2].commutes());
}

TEST(Equivalence, TransformedScheduleMatchesClosedForms) {
  const auto pulse = testing::xpi2_pulse();
  const auto nu = NuProfile::sine_squared(-0.46186, pulse.gate_duration);
  const auto base = su2_schedule(pulse.params, pulse.duration(), 400);
  const auto tr = z_axis_transform(nu, pauli_basis(), pulse.duration());
  const auto mapped = transform_schedule(base, tr);
  const auto closed = modified_su2_schedule(pulse.params, nu, pulse.duration(), 400);
  EXPECT_EQ(mapped.breakpoints(), base.breakpoints());
  for (int k = 0; k <= 400; ++k) {
    EXPECT_LT((mapped(base.time(k)) - closed(base.time(k))).norm(), 1e-12);
  }

  const auto lp = resonant_pi_pulse(1.0, 0.3, PulseEnvelope::Shape::sine_squared, 1.0);
  const double T = lp.envelope.duration();
  const auto lnu = NuProfile::sine_squared(0.8, T);
  const auto lt = z_axis_transform(lnu, gell_mann_basis(), T);
  const auto lmapped = transform_schedule(lambda_schedule(lp, T, 50), lt);
  const auto lclosed = modified_lambda_schedule(lp, lnu, T, 50);
  for (double t : {0.1, 1.3, 3.3, 5.9}) EXPECT_LT((lmapped(t) - lclosed(t)).norm(), 1e-12);
}

TEST(Equivalence, IdentityAndZeroScheduleCases) {
  const auto base = testing::xpi2_schedule(100);
  const auto same = transform_schedule(base, z_axis_transform(NuProfile::zero(), pauli_basis(),
                                                             base.duration()));
  for (double t : {0.0, 3.0, 20.0}) EXPECT_EQ(same(t), base(t));
  const double T = 2.0;
  const auto tr = z_axis_transform(NuProfile::sine_squared(0.4, T), pauli_basis(), T);
  const auto zero = transform_schedule(su2_schedule(Su2Params::constant(0, 0, 0), T, 10), tr);
  for (double t : {0.3, 1.5}) EXPECT_LT((zero(t) - tr.shift(t)).norm(), 1e-15);
}

TEST(Equivalence, SelfComparisonIsExactlyZero) {
  const auto base = testing::xpi2_schedule(400);
  const auto rep = verify_equivalence(base, base, su2_standard_channels(), symmetric_grid(1.0, 21));
  EXPECT_EQ(rep.gate_distance, 0.0);
  EXPECT_EQ(rep.integrand_mismatch, 0.0);
  EXPECT_EQ(rep.max_filter_mismatch(), 0.0);
  EXPECT_TRUE(std::isnan(rep.sensitivity_mismatch));
}

TEST(Equivalence, CompositePairIsEquivalent) {
  const auto pulse = testing::xpi2_pulse();
  const auto base = testing::xpi2_schedule(4000);
  const auto tr = z_axis_transform(NuProfile::sine_squared(testing::kPublishedAmplitude,
                                                           pulse.gate_duration),
                                   pauli_basis(), pulse.duration());
  const auto channels = su2_standard_channels();
  const auto rep = verify_equivalence(base, tr, channels, default_grid(base.duration(), 401));
  EXPECT_LT(rep.gate_distance, 1e-8);
  EXPECT_LT(rep.max_filter_mismatch(), 1e-7);
  EXPECT_LT(rep.sensitivity_mismatch, 1e-12);
  EXPECT_LT(rep.endpoint_violation, 1e-12);
  EXPECT_LT(rep.integrand_mismatch, 1e-7);
  ASSERT_EQ(rep.channels.size(), 3u);
  EXPECT_GT(rep.channels[0].max_filter, 1.0);
  // The modified schedule itself, not only the transform, must be equivalent.
  const auto closed = testing::xpi2_dynamical(testing::kPublishedAmplitude, 4000);
  const auto rep2 = verify_equivalence(base, closed, channels, default_grid(base.duration(), 401));
  EXPECT_LT(rep2.gate_distance, 1e-8);
  EXPECT_LT(rep2.max_filter_mismatch(), 1e-7);
}

TEST(Equivalence, BrokenEndpointGivesPredictedGateDistance) {
  const auto pulse = testing::xpi2_pulse();
  const auto base = testing::xpi2_schedule(2000);
  for (double c : {1e-3, 1e-2, 0.1, 0.5}) {
    const auto nu = NuProfile::sine_squared(c, 1.5 * pulse.gate_duration);
    const auto tr = axis_transform(pauli_basis(), unit(3, 2), nu, pulse.duration());
    const double nu_t = nu.value(pulse.duration());
    EXPECT_NEAR(nu_t, 0.75 * c, 1e-12);
    const auto rep = verify_equivalence(base, tr, su2_standard_channels(), symmetric_grid(1.0, 5));
    // Ũ(T) = V(T) U(T), so the distance is 1 − cos(ν(T)/2) ≈ ν(T)²/8.
    EXPECT_NEAR(rep.gate_distance, 1.0 - std::cos(nu_t / 2), 1e-10);
    EXPECT_GT(rep.endpoint_violation, 0.0);
    // The filter functions remain invariant: R̃ᵀχ̃ = Rᵀχ pointwise.
    EXPECT_LT(rep.max_filter_mismatch(), 1e-7);
  }
}

TEST(Equivalence, GateDistance) {
  const CMatrix x = testing::pauli(0);
  EXPECT_NEAR(gate_distance(x, x), 0.0, 1e-15);
  EXPECT_NEAR(gate_distance(x, std::polar(1.0, 0.7) * x), 0.0, 1e-15);
  EXPECT_NEAR(gate_distance(x, testing::pauli(2)), 1.0, 1e-15);
  EXPECT_THROW(gate_distance(x, CMatrix::Identity(3, 3)), std::invalid_argument);
}

}  // namespace
}  // namespace gatequiv
