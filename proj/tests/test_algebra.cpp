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

#include "gatequiv/algebra.hpp"
#include "test_support.hpp"

namespace gatequiv {
namespace {

using testing::expm;
using testing::kI;
using testing::pi;

void expect_valid_basis(const GeneratorBasis& b) {
  const int n = b.size();
  for (int i = 0; i < n; ++i) {
    const CMatrix& g = b.generator(i);
    EXPECT_LT((g - g.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(std::abs(g.trace()), 1e-12);
    for (int j = 0; j < n; ++j) {
      EXPECT_NEAR(std::abs((g * b.generator(j)).trace() - (i == j ? 2.0 : 0.0)), 0.0, 1e-12);
      CMatrix rebuilt = CMatrix::Zero(b.dimension(), b.dimension());
      for (int k = 0; k < n; ++k) rebuilt += kI * b.structure_constant(i, j, k) * b.generator(k);
      const CMatrix comm = g * b.generator(j) - b.generator(j) * g;
      EXPECT_LT((comm - rebuilt).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Algebra, PauliBasisIsOrthonormalAndClosed) {
  const auto b = pauli_basis();
  EXPECT_EQ(b->dimension(), 2);
  EXPECT_EQ(b->size(), 3);
  expect_valid_basis(*b);
  EXPECT_NEAR(std::abs((b->generator(0) * b->generator(1)).trace()), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(b->structure_constant(0, 1, 2), 2.0);
  EXPECT_DOUBLE_EQ(b->structure_constant(1, 0, 2), -2.0);
}

TEST(Algebra, GellMannBasisIsOrthonormalAndClosed) {
  const auto b = gell_mann_basis();
  EXPECT_EQ(b->dimension(), 3);
  EXPECT_EQ(b->size(), 8);
  expect_valid_basis(*b);
  EXPECT_NEAR(b->structure_constant(0, 1, 2), 2.0, 1e-14);
  // Remaining standard constants, doubled by the trace-2 normalization.
  EXPECT_NEAR(b->structure_constant(0, 3, 6), 1.0, 1e-14);
  EXPECT_NEAR(b->structure_constant(3, 4, 7), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(b->structure_constant(5, 6, 7), std::sqrt(3.0), 1e-14);
  const CMatrix& l8 = b->generator(7);
  EXPECT_TRUE(l8.isDiagonal());
  EXPECT_NEAR(l8(0, 0).real(), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(l8(1, 1).real(), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(l8(2, 2).real(), -2.0 / std::sqrt(3.0), 1e-15);
}

TEST(Algebra, StructureConstantsAreTotallyAntisymmetric) {
  for (const auto& b : {pauli_basis(), gell_mann_basis()}) {
    const int n = b->size();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          const double f = b->structure_constant(i, j, k);
          EXPECT_NEAR(f, -b->structure_constant(j, i, k), 1e-14);
          EXPECT_NEAR(f, -b->structure_constant(i, k, j), 1e-14);
          EXPECT_NEAR(f, b->structure_constant(j, k, i), 1e-14);
        }
      }
    }
  }
}

TEST(Algebra, RejectsInvalidGenerators) {
  std::vector<CMatrix> g(3, CMatrix::Identity(2, 2));
  EXPECT_THROW(GeneratorBasis("bad", g), std::invalid_argument);
  std::vector<CMatrix> scaled;
  for (int i = 0; i < 3; ++i) scaled.push_back(2.0 * pauli_basis()->generator(i));
  EXPECT_THROW(GeneratorBasis("scaled", scaled), std::invalid_argument);
  EXPECT_THROW(GeneratorBasis("two", {pauli_basis()->generator(0), pauli_basis()->generator(1)}),
               std::invalid_argument);
  EXPECT_THROW(pauli_basis()->generator(3), std::out_of_range);
}

TEST(Algebra, ExpandAndCoefficientsRoundTrip) {
  std::mt19937_64 rng(3);
  for (const auto& b : {pauli_basis(), gell_mann_basis()}) {
    const AlgebraVector x = testing::random_vector(b->size(), rng);
    EXPECT_LT((b->coefficients(b->expand(x)) - x).norm(), 1e-13);
  }
}

TEST(Algebra, BracketMatchesMatrixCommutator) {
  std::mt19937_64 rng(5);
  for (const auto& b : {pauli_basis(), gell_mann_basis()}) {
    const AlgebraVector x = testing::random_vector(b->size(), rng);
    const AlgebraVector y = testing::random_vector(b->size(), rng);
    const CMatrix comm = b->expand(x) * b->expand(y) - b->expand(y) * b->expand(x);
    EXPECT_LT((comm - kI * b->expand(b->bracket(x, y))).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Algebra, ExpAlgebraMatchesDenseExponential) {
  std::mt19937_64 rng(7);
  for (const auto& b : {pauli_basis(), gell_mann_basis()}) {
    for (int trial = 0; trial < 5; ++trial) {
      const AlgebraVector x = testing::random_vector(b->size(), rng);
      const CMatrix u = exp_algebra(*b, x);
      EXPECT_LT((u - expm(-kI * b->expand(x))).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT(unitarity_defect(u), 1e-13);
    }
    EXPECT_LT((exp_algebra(*b, AlgebraVector::Zero(b->size())) -
               CMatrix::Identity(b->dimension(), b->dimension()))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
  }
}

TEST(Algebra, AdjointOfIdentityIsIdentity) {
  for (const auto& b : {pauli_basis(), gell_mann_basis()}) {
    const auto r = adjoint_of(CMatrix::Identity(b->dimension(), b->dimension()), *b);
    EXPECT_LT((r - RMatrix::Identity(b->size(), b->size())).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Algebra, AdjointOfQuarterTurnAboutZ) {
  const auto b = pauli_basis();
  const CMatrix u = expm(-kI * (pi / 4) * testing::pauli(2));
  // Oracle: evaluate tr(σ_i U σ_j U†)/2 entry by entry.
  RMatrix expected(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      expected(i, j) =
          (testing::pauli(i) * u * testing::pauli(j) * u.adjoint()).trace().real() / 2.0;
    }
  }
  const auto r = adjoint_of(u, *b);
  EXPECT_LT((r - expected).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((r * Eigen::Vector3d::UnitX() - Eigen::Vector3d::UnitY()).norm(), 1e-14);
  EXPECT_LT((r * Eigen::Vector3d::UnitY() + Eigen::Vector3d::UnitX()).norm(), 1e-14);
  EXPECT_LT((r * Eigen::Vector3d::UnitZ() - Eigen::Vector3d::UnitZ()).norm(), 1e-14);
}

TEST(Algebra, AdjointOfLambda3RotationHasBlockStructure) {
  const auto b = gell_mann_basis();
  const double nu = 0.73;
  const auto r = adjoint_of(expm(-kI * (nu / 2) * b->generator(2)), *b);
  auto rotation = [](double a) {
    Eigen::Matrix2d m;
    m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return m;
  };
  EXPECT_LT((r.block(0, 0, 2, 2) - rotation(nu)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((r.block(3, 3, 2, 2) - rotation(nu / 2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((r.block(5, 5, 2, 2) - rotation(-nu / 2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(r(2, 2), 1.0, 1e-14);
  EXPECT_NEAR(r(7, 7), 1.0, 1e-14);
  EXPECT_NEAR(r.cwiseAbs().sum(), r.block(0, 0, 2, 2).cwiseAbs().sum() +
                                      r.block(3, 3, 2, 2).cwiseAbs().sum() +
                                      r.block(5, 5, 2, 2).cwiseAbs().sum() + 2.0,
              1e-13);
}

TEST(Algebra, AdjointRejectsNonUnitary) {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 0) = 1.001;
  EXPECT_THROW(adjoint_of(m, *pauli_basis()), std::invalid_argument);
  EXPECT_THROW(adjoint_of(CMatrix::Identity(3, 3), *pauli_basis()), std::invalid_argument);
}

TEST(Algebra, AdjointIsAHomomorphismIntoSO) {
  std::mt19937_64 rng(11);
  for (const auto& b : {pauli_basis(), gell_mann_basis()}) {
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrix u1 = testing::random_unitary(b->dimension(), rng);
      const CMatrix u2 = testing::random_unitary(b->dimension(), rng);
      const auto r1 = adjoint_of(u1, *b);
      const auto r2 = adjoint_of(u2, *b);
      EXPECT_LT((adjoint_of(u1 * u2, *b) - r1 * r2).cwiseAbs().maxCoeff(), 1e-9);
      EXPECT_LT(orthogonality_defect(r1), 1e-10);
      EXPECT_NEAR(r1.determinant(), 1.0, 1e-10);
      const AlgebraVector x = testing::random_vector(b->size(), rng);
      EXPECT_LT((b->expand(r1 * x) - u1 * b->expand(x) * u1.adjoint()).cwiseAbs().maxCoeff(),
                1e-12);
    }
  }
}

TEST(Algebra, AdjointGeneratorExponentiatesToAdjointGroupElement) {
  for (const auto& b : {pauli_basis(), gell_mann_basis()}) {
    for (int i = 0; i < b->size(); ++i) {
      const RMatrix g = adjoint_generator(i, *b);
      EXPECT_LT((g + g.transpose()).cwiseAbs().maxCoeff(), 1e-15);
      for (double t : {0.1, 1.0, pi}) {
        const RMatrix lhs = exp_antisymmetric(t * g);
        const RMatrix rhs = adjoint_of(expm(-kI * (t / 2) * b->generator(i)), *b);
        EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-8) << b->name() << " i=" << i << " t=" << t;
        // Independent exponential of the real generator.
        const RMatrix dense = (t * g).exp();
        EXPECT_LT((lhs - dense).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
  }
  EXPECT_THROW(adjoint_generator(3, *pauli_basis()), std::out_of_range);
}

TEST(Algebra, SigmaZGeneratorIsRotationAboutZ) {
  const RMatrix lz = adjoint_generator(2, *pauli_basis());
  RMatrix expected = RMatrix::Zero(3, 3);
  expected(1, 0) = 1.0;
  expected(0, 1) = -1.0;
  EXPECT_LT((lz - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Algebra, RequireSameBasis) {
  EXPECT_NO_THROW(require_same_basis(*pauli_basis(), *pauli_basis()));
  EXPECT_THROW(require_same_basis(*pauli_basis(), *gell_mann_basis()), std::invalid_argument);
}

}  // namespace
}  // namespace gatequiv
