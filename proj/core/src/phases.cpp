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


#include "gatequiv/phases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gatequiv/quadrature.hpp"

namespace gatequiv {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

CVector normalized(const CVector& state, int dimension) {
  if (state.size() != dimension) {
    throw std::invalid_argument("state dimension does not match the trajectory");
  }
  const double n = state.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("state has zero norm");
  return state / n;
}

// Integrates f over each smooth run and returns the running total at every node.
template <class F>
std::vector<double> running_integral(const Trajectory& traj, F&& value_at) {
  std::vector<double> out(traj.times.size(), 0.0);
  double offset = 0.0;
  for (const auto& [first, last] : traj.runs) {
    std::vector<double> t(traj.times.begin() + first, traj.times.begin() + last + 1);
    std::vector<double> f;
    for (int k = first; k <= last; ++k) f.push_back(value_at(k, k == last && k != first));
    const auto c = cumulative_integral(t, f);
    for (int k = first; k <= last; ++k) out[k] = offset + c[k - first];
    offset = out[last];
  }
  return out;
}

}  // namespace

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

AbelianPhaseDecomposition abelian_decompose(const Trajectory& traj, const CVector& state,
                                            double cyclic_tolerance) {
  const GeneratorBasis& basis = *traj.basis;
  AbelianPhaseDecomposition out;
  out.initial_state = normalized(state, basis.dimension());
  const CVector& psi0 = out.initial_state;

  const CVector final_state = traj.final_unitary() * psi0;
  const Complex overlap = psi0.dot(final_state);
  if ((final_state - overlap * psi0).norm() > cyclic_tolerance) {
    throw std::domain_error("abelian_decompose: initial state is not cyclic under U(T)");
  }

  std::vector<CVector> states;
  states.reserve(traj.times.size());
  for (const auto& u : traj.unitaries) states.push_back(u * psi0);

  const auto energy = running_integral(traj, [&](int k, bool left) {
    const AlgebraVector& h = left ? traj.left_controls[k] : traj.controls[k];
    return states[k].dot(basis.expand(h) * states[k]).real();
  });

  out.times = traj.times;
  out.total_path.resize(traj.times.size());
  out.dynamical_path.resize(traj.times.size());
  out.geometric_path.resize(traj.times.size());
  double previous = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double raw = std::arg(psi0.dot(states[k]));
    const double unwrapped = k == 0 ? raw : previous + wrap_phase(raw - previous);
    previous = unwrapped;
    out.total_path[k] = unwrapped;
    out.dynamical_path[k] = -energy[k];
    out.geometric_path[k] = unwrapped + energy[k];
  }
  out.total = out.total_path.back();
  out.dynamical = out.dynamical_path.back();
  out.geometric = out.geometric_path.back();
  return out;
}

std::pair<double, double> phase_shift_under_transform(const Trajectory& traj,
                                                      const FrameTransform& transform,
                                                      const CVector& state) {
  require_same_basis(*traj.basis, transform.basis());
  if (transform.endpoint_violation() > 1e-10) {
    throw std::invalid_argument("phase_shift_under_transform: V endpoints are not the identity");
  }
  const CVector psi0 = normalized(state, traj.basis->dimension());
  const auto shift = running_integral(traj, [&](int k, bool) {
    const CVector psi = traj.unitaries[k] * psi0;
    return psi.dot(transform.connection(traj.times[k]) * psi).real();
  });
  return {shift.back(), -shift.back()};
}

CyclicFrame holonomic_cyclic_frame(const PulseEnvelope& envelope, double theta, double phi,
                                   double period) {
  if (!(period > 0.0)) throw std::invalid_argument("holonomic_cyclic_frame: bad period");
  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  const Complex em = std::polar(1.0, -phi / 2.0);
  const Complex ep = std::polar(1.0, phi / 2.0);
  CVector dark(3);
  dark << em * c, ep * s, 0.0;
  CVector bright(3);
  bright << em * s, -ep * c, 0.0;
  CVector excited(3);
  excited << 0.0, 0.0, 1.0;

  CyclicFrame frame;
  frame.period = period;
  frame.states = [=](double t) {
    const double area = envelope.area_until(t);
    const Complex g = std::polar(1.0, area);
    CMatrix m(3, 3);
    m.col(0) = dark;
    m.col(1) = g * (std::cos(area) * bright - kI * std::sin(area) * excited);
    m.col(2) = g * (std::cos(area) * excited - kI * std::sin(area) * bright);
    return m;
  };
  frame.cyclicity_defect = (frame.states(period) - frame.states(0.0)).cwiseAbs().maxCoeff();
  return frame;
}

FrameFunction transformed_frame(FrameFunction frame, const FrameTransform& transform) {
  return [frame = std::move(frame), transform](double t) -> CMatrix {
    return transform.v(t) * frame(t);
  };
}

// Fourth-order five-point derivative stencils (in units of 1/12h); row j
// differentiates at the j-th point of the window, so the ends use
// one-sided rows.
constexpr double kFivePointStencil[5][5] = {{-25.0, 48.0, -36.0, 16.0, -3.0},
                                            {-3.0, -10.0, 18.0, -6.0, 1.0},
                                            {1.0, -8.0, 0.0, 8.0, -1.0},
                                            {-1.0, 6.0, -18.0, 10.0, 3.0},
                                            {3.0, -16.0, 36.0, -48.0, 25.0}};

NonAbelianPhaseData nonabelian_connection(const FrameFunction& frame,
                                          const ControlSchedule& schedule) {
  const GeneratorBasis& basis = schedule.basis();
  const int n = schedule.steps();
  const double dt = schedule.dt();
  NonAbelianPhaseData data;

  std::vector<CMatrix> phi;
  phi.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    data.times.push_back(schedule.time(k));
    phi.push_back(frame(data.times.back()));
    const CMatrix& f = phi.back();
    if (f.rows() != basis.dimension()) {
      throw std::invalid_argument("nonabelian_connection: frame dimension mismatch");
    }
    const double gram =
        (f.adjoint() * f - CMatrix::Identity(f.cols(), f.cols())).cwiseAbs().maxCoeff();
    data.gram_deviation = std::max(data.gram_deviation, gram);
    if (gram > 1e-9) {
      throw std::invalid_argument("nonabelian_connection: frame not orthonormal at t = " +
                                  std::to_string(data.times.back()));
    }
    if (k > 0) {
      const CMatrix& prev = phi[phi.size() - 2];
      for (Eigen::Index a = 0; a < f.cols(); ++a) {
        if (std::abs(prev.col(a).dot(f.col(a))) < 0.5) {
          throw std::domain_error("nonabelian_connection: frame discontinuity near t = " +
                                  std::to_string(data.times.back()));
        }
      }
    }
  }

  auto derivative = [&](int k, double h, auto&& at) -> CMatrix {
    const double t = data.times[k];
    if (n < 4) {
      if (k == 0) return (-3.0 * at(t) + 4.0 * at(t + h) - at(t + 2 * h)) / (2.0 * h);
      if (k == n) return (3.0 * at(t) - 4.0 * at(t - h) + at(t - 2 * h)) / (2.0 * h);
      return (at(t + h) - at(t - h)) / (2.0 * h);
    }
    const int j = k < 2 ? k : (k > n - 2 ? k - (n - 4) : 2);
    CMatrix d = kFivePointStencil[j][0] * at(t - j * h);
    for (int i = 1; i < 5; ++i) d += kFivePointStencil[j][i] * at(t + (i - j) * h);
    return d / (12.0 * h);
  };
  auto on_grid = [&](double t) -> CMatrix {
    const auto k = static_cast<std::size_t>(std::lround(t / dt));
    return phi[std::min<std::size_t>(k, phi.size() - 1)];
  };

  for (int k = 0; k <= n; ++k) {
    const CMatrix& f = phi[k];
    const CMatrix raw = kI * f.adjoint() * derivative(k, dt, on_grid);
    const CMatrix herm = 0.5 * (raw + raw.adjoint());
    data.hermiticity_defect =
        std::max(data.hermiticity_defect, (0.5 * (raw - raw.adjoint())).cwiseAbs().maxCoeff());
    const CMatrix fine = kI * f.adjoint() * derivative(k, dt / 2.0, frame);
    const CMatrix fine_herm = 0.5 * (fine + fine.adjoint());
    data.richardson_change = std::max(data.richardson_change, (herm - fine_herm).cwiseAbs().maxCoeff());
    data.connection.push_back(herm);
    data.energy.push_back(-(f.adjoint() * basis.expand(schedule(data.times[k])) * f));
  }
  return data;
}

CMatrix reconstruct_block(const NonAbelianPhaseData& data) {
  const auto nodes = static_cast<int>(data.times.size());
  if (nodes < 2) throw std::invalid_argument("reconstruct_block: need >= 2 nodes");
  const Eigen::Index d = data.connection.front().rows();
  auto generator = [&](int k) -> CMatrix { return data.connection[k] + data.energy[k]; };
  // 𝒜 + ℰ at time t from the cubic through the four nodes around interval k.
  auto interpolate = [&](int k, double t) -> CMatrix {
    if (nodes < 4) {
      const double f = (t - data.times[k]) / (data.times[k + 1] - data.times[k]);
      return (1.0 - f) * generator(k) + f * generator(k + 1);
    }
    const int first = std::clamp(k - 1, 0, nodes - 4);
    CMatrix g = CMatrix::Zero(d, d);
    for (int i = first; i < first + 4; ++i) {
      double w = 1.0;
      for (int j = first; j < first + 4; ++j) {
        if (j != i) w *= (t - data.times[j]) / (data.times[i] - data.times[j]);
      }
      g += w * generator(i);
    }
    return g;
  };
  const double c1 = 0.5 - std::sqrt(3.0) / 6.0;
  const double c2 = 0.5 + std::sqrt(3.0) / 6.0;
  CMatrix u = CMatrix::Identity(d, d);
  for (int k = 0; k + 1 < nodes; ++k) {
    const double h = data.times[k + 1] - data.times[k];
    const CMatrix g1 = interpolate(k, data.times[k] + c1 * h);
    const CMatrix g2 = interpolate(k, data.times[k] + c2 * h);
    // Fourth-order Magnus exponent of u̇ = i G u, written as i K with K Hermitian.
    CMatrix k4 = 0.5 * h * (g1 + g2) + kI * (std::sqrt(3.0) / 12.0) * h * h * (g2 * g1 - g1 * g2);
    k4 = 0.5 * (k4 + k4.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(k4);
    CVector phases(d);
    for (Eigen::Index i = 0; i < d; ++i) phases[i] = std::polar(1.0, eig.eigenvalues()[i]);
    u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint() * u;
  }
  return u;
}

double reconstruction_error(const NonAbelianPhaseData& data, const FrameFunction& frame,
                            const CMatrix& propagator) {
  const CMatrix u = reconstruct_block(data);
  const CMatrix start = frame(data.times.front());
  const CMatrix end = frame(data.times.back());
  return (propagator * start - end * u).norm();
}

CMatrix holonomic_gate(double theta, double phi) {
  CMatrix g(2, 2);
  g << std::cos(theta), std::polar(1.0, -phi) * std::sin(theta),
      std::polar(1.0, phi) * std::sin(theta), -std::cos(theta);
  return g;
}

}  // namespace gatequiv
