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

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gatequiv {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Real coefficient vector x of an su(N) element x·σ.
using AlgebraVector = Eigen::VectorXd;

/// Real (N²−1)×(N²−1) matrix R with U (x·σ) U† = (R x)·σ.
using AdjointMatrix = Eigen::MatrixXd;

/// Ordered traceless Hermitian generators of su(N), normalized so that
/// tr(σ_i σ_j) = 2 δ_ij, together with the structure constants defined by
/// [σ_i, σ_j] = i Σ_k f_ijk σ_k.
///
/// Instances are immutable once built and safe to share between threads.
class GeneratorBasis {
 public:
  GeneratorBasis(std::string name, std::vector<CMatrix> generators);

  const std::string& name() const { return name_; }
  /// Hilbert-space dimension N.
  int dimension() const { return dimension_; }
  /// Number of generators, N²−1.
  int size() const { return static_cast<int>(generators_.size()); }

  const CMatrix& generator(int i) const;
  double structure_constant(int i, int j, int k) const;

  /// x·σ for a coefficient vector x.
  CMatrix expand(const AlgebraVector& coefficients) const;
  /// Coefficients tr(σ_i A)/2 of the traceless Hermitian part of A.
  AlgebraVector coefficients(const CMatrix& matrix) const;
  /// c_k = Σ_ij f_ijk a_i b_j, so that [a·σ, b·σ] = i c·σ.
  AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b) const;

  bool operator==(const GeneratorBasis& other) const {
    return name_ == other.name_ && dimension_ == other.dimension_;
  }

 private:
  std::string name_;
  int dimension_;
  std::vector<CMatrix> generators_;
  std::vector<double> structure_;  // f_ijk, row-major over (i, j, k)
};

using BasisPtr = std::shared_ptr<const GeneratorBasis>;

/// Pauli x, y, z.
BasisPtr pauli_basis();
/// Gell-Mann λ₁…λ₈ in the standard order.
BasisPtr gell_mann_basis();

/// Throws std::invalid_argument unless the pointed-to bases agree.
void require_same_basis(const GeneratorBasis& a, const GeneratorBasis& b);

/// exp(−i x·σ). Closed form for su(2), Hermitian eigendecomposition otherwise.
CMatrix exp_algebra(const GeneratorBasis& basis, const AlgebraVector& x);

/// R_ij = tr(σ_i U σ_j U†)/2. Rejects U that is not unitary to 1e−10.
AdjointMatrix adjoint_of(const CMatrix& unitary, const GeneratorBasis& basis);

/// Lie-algebra adjoint generator of σ_i, [G_i]_jk = f_ikj / 2, normalized so
/// that exp(t G_i) = adjoint_of(exp(−i t σ_i / 2)).
RMatrix adjoint_generator(int index, const GeneratorBasis& basis);

/// Σ_i axis_i G_i.
RMatrix adjoint_generator(const AlgebraVector& axis, const GeneratorBasis& basis);

/// exp(A) for a real antisymmetric A (the adjoint image of a one-parameter
/// subgroup), via the Hermitian eigendecomposition of iA.
RMatrix exp_antisymmetric(const RMatrix& generator);

double unitarity_defect(const CMatrix& m);

/// 1 − |tr(A†B)|/N for unitaries A, B, evaluated as ‖A − e^{iθ}B‖²_F / 2N
/// with e^{iθ} the phase of tr(B†A). Exactly zero for identical inputs.
double unitary_distance(const CMatrix& a, const CMatrix& b);
double orthogonality_defect(const RMatrix& m);

}  // namespace gatequiv
