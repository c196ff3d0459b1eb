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

#include "gatequiv/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gatequiv {

namespace {

constexpr Complex kI{0.0, 1.0};

CMatrix elementary(int n, int row, int col, Complex value) {
  CMatrix m = CMatrix::Zero(n, n);
  m(row, col) = value;
  return m;
}

}  // namespace

GeneratorBasis::GeneratorBasis(std::string name, std::vector<CMatrix> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {
  if (generators_.empty()) {
    throw std::invalid_argument("GeneratorBasis: no generators");
  }
  dimension_ = static_cast<int>(generators_.front().rows());
  const int n = size();
  if (n != dimension_ * dimension_ - 1) {
    throw std::invalid_argument("GeneratorBasis: expected N^2-1 generators");
  }
  for (const auto& g : generators_) {
    if (g.rows() != dimension_ || g.cols() != dimension_) {
      throw std::invalid_argument("GeneratorBasis: generator shape mismatch");
    }
    if ((g - g.adjoint()).cwiseAbs().maxCoeff() > 1e-12 || std::abs(g.trace()) > 1e-12) {
      throw std::invalid_argument("GeneratorBasis: generators must be traceless Hermitian");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex t = (generators_[i] * generators_[j]).trace();
      if (std::abs(t - (i == j ? 2.0 : 0.0)) > 1e-12) {
        throw std::invalid_argument("GeneratorBasis: expected tr(s_i s_j) = 2 delta_ij");
      }
    }
  }
  // [σ_i, σ_j] = i Σ_k f_ijk σ_k  ⇒  f_ijk = tr([σ_i, σ_j] σ_k) / (2i).
  structure_.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CMatrix comm = generators_[i] * generators_[j] - generators_[j] * generators_[i];
      for (int k = 0; k < n; ++k) {
        const Complex f = (comm * generators_[k]).trace() / (2.0 * kI);
        structure_[(static_cast<std::size_t>(i) * n + j) * n + k] = f.real();
      }
    }
  }
}

const CMatrix& GeneratorBasis::generator(int i) const {
  if (i < 0 || i >= size()) throw std::out_of_range("GeneratorBasis: generator index");
  return generators_[i];
}

double GeneratorBasis::structure_constant(int i, int j, int k) const {
  const int n = size();
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) {
    throw std::out_of_range("GeneratorBasis: structure constant index");
  }
  return structure_[(static_cast<std::size_t>(i) * n + j) * n + k];
}

CMatrix GeneratorBasis::expand(const AlgebraVector& coefficients) const {
  if (coefficients.size() != size()) {
    throw std::invalid_argument("GeneratorBasis::expand: coefficient length mismatch");
  }
  CMatrix m = CMatrix::Zero(dimension_, dimension_);
  for (int i = 0; i < size(); ++i) m += coefficients[i] * generators_[i];
  return m;
}

AlgebraVector GeneratorBasis::coefficients(const CMatrix& matrix) const {
  AlgebraVector x(size());
  for (int i = 0; i < size(); ++i) x[i] = (generators_[i] * matrix).trace().real() / 2.0;
  return x;
}

AlgebraVector GeneratorBasis::bracket(const AlgebraVector& a, const AlgebraVector& b) const {
  const int n = size();
  AlgebraVector c = AlgebraVector::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0.0) continue;
      const double* f = &structure_[(static_cast<std::size_t>(i) * n + j) * n];
      for (int k = 0; k < n; ++k) c[k] += f[k] * a[i] * b[j];
    }
  }
  return c;
}

BasisPtr pauli_basis() {
  static const BasisPtr basis = [] {
    std::vector<CMatrix> g(3, CMatrix::Zero(2, 2));
    g[0] << 0, 1, 1, 0;
    g[1] << 0, -kI, kI, 0;
    g[2] << 1, 0, 0, -1;
    return std::make_shared<const GeneratorBasis>("pauli", std::move(g));
  }();
  return basis;
}

BasisPtr gell_mann_basis() {
  static const BasisPtr basis = [] {
    std::vector<CMatrix> g;
    g.push_back(elementary(3, 0, 1, 1.0) + elementary(3, 1, 0, 1.0));
    g.push_back(elementary(3, 0, 1, -kI) + elementary(3, 1, 0, kI));
    g.push_back(elementary(3, 0, 0, 1.0) + elementary(3, 1, 1, -1.0));
    g.push_back(elementary(3, 0, 2, 1.0) + elementary(3, 2, 0, 1.0));
    g.push_back(elementary(3, 0, 2, -kI) + elementary(3, 2, 0, kI));
    g.push_back(elementary(3, 1, 2, 1.0) + elementary(3, 2, 1, 1.0));
    g.push_back(elementary(3, 1, 2, -kI) + elementary(3, 2, 1, kI));
    CMatrix l8 = CMatrix::Zero(3, 3);
    l8.diagonal() << 1.0, 1.0, -2.0;
    g.push_back(l8 / std::sqrt(3.0));
    return std::make_shared<const GeneratorBasis>("gell-mann", std::move(g));
  }();
  return basis;
}

void require_same_basis(const GeneratorBasis& a, const GeneratorBasis& b) {
  if (!(a == b)) {
    throw std::invalid_argument("basis mismatch: " + a.name() + " vs " + b.name());
  }
}

CMatrix exp_algebra(const GeneratorBasis& basis, const AlgebraVector& x) {
  if (basis.dimension() == 2) {
    const double angle = x.norm();
    CMatrix u = CMatrix::Identity(2, 2) * std::cos(angle);
    if (angle > 0.0) {
      u -= kI * (std::sin(angle) / angle) * basis.expand(x);
    }
    return u;
  }
  const CMatrix h = basis.expand(x);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::VectorXd& w = eig.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases[i] = std::polar(1.0, -w[i]);
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

double unitarity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

double unitary_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("unitary_distance: shape mismatch");
  }
  const Complex overlap = (b.adjoint() * a).trace();
  const double magnitude = std::abs(overlap);
  const Complex phase = magnitude > 0.0 ? overlap / magnitude : Complex(1.0, 0.0);
  return (a - phase * b).squaredNorm() / (2.0 * static_cast<double>(a.rows()));
}

double orthogonality_defect(const RMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m.transpose() * m - RMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

AdjointMatrix adjoint_of(const CMatrix& unitary, const GeneratorBasis& basis) {
  if (unitary.rows() != basis.dimension() || unitary.cols() != basis.dimension()) {
    throw std::invalid_argument("adjoint_of: unitary does not match basis dimension");
  }
  if (unitarity_defect(unitary) > 1e-10) {
    throw std::invalid_argument("adjoint_of: matrix is not unitary");
  }
  const int n = basis.size();
  AdjointMatrix r(n, n);
  for (int j = 0; j < n; ++j) {
    const CMatrix rotated = unitary * basis.generator(j) * unitary.adjoint();
    for (int i = 0; i < n; ++i) {
      r(i, j) = (basis.generator(i) * rotated).trace().real() / 2.0;
    }
  }
  return r;
}

RMatrix adjoint_generator(int index, const GeneratorBasis& basis) {
  const int n = basis.size();
  if (index < 0 || index >= n) throw std::out_of_range("adjoint_generator: index");
  RMatrix g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) g(j, k) = 0.5 * basis.structure_constant(index, k, j);
  }
  return g;
}

RMatrix adjoint_generator(const AlgebraVector& axis, const GeneratorBasis& basis) {
  if (axis.size() != basis.size()) {
    throw std::invalid_argument("adjoint_generator: axis length mismatch");
  }
  RMatrix g = RMatrix::Zero(basis.size(), basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    if (axis[i] != 0.0) g += axis[i] * adjoint_generator(i, basis);
  }
  return g;
}

RMatrix exp_antisymmetric(const RMatrix& generator) {
  const CMatrix h = Complex(0.0, 1.0) * generator.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const Eigen::VectorXd& w = eig.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases[i] = std::polar(1.0, -w[i]);
  return (eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint()).real();
}

}  // namespace gatequiv
