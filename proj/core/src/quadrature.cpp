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


#include "gatequiv/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gatequiv {

namespace {

// μ_m = ∫₀ᴸ s^m e^{−iωs} ds for m = 0, 1, 2.
std::array<Complex, 3> moments(double length, double omega) {
  const double theta = omega * length;
  std::array<Complex, 3> mu{};
  if (std::abs(theta) < 1.0) {
    const Complex z(0.0, -theta);
    Complex term = 1.0;  // z^k / k!
    for (int k = 0; k < 40; ++k) {
      for (int m = 0; m < 3; ++m) mu[m] += term / static_cast<double>(m + k + 1);
      term *= z / static_cast<double>(k + 1);
      if (std::abs(term) < 1e-18) break;
    }
    double scale = length;
    for (int m = 0; m < 3; ++m, scale *= length) mu[m] *= scale;
    return mu;
  }
  const Complex iw(0.0, omega);
  const Complex edge = std::polar(1.0, -theta);
  mu[0] = (1.0 - edge) / iw;
  mu[1] = (mu[0] - length * edge) / iw;
  mu[2] = (2.0 * mu[1] - length * length * edge) / iw;
  return mu;
}

// Coefficients (c0, c1, c2) of the Lagrange basis polynomial for node j,
// in the local variable s, given node offsets p.
template <std::size_t K>
std::array<double, 3> lagrange(const std::array<double, K>& p, std::size_t j) {
  std::array<double, 3> c{1.0, 0.0, 0.0};
  double denom = 1.0;
  for (std::size_t i = 0; i < K; ++i) {
    if (i == j) continue;
    denom *= p[j] - p[i];
    // Multiply the polynomial by (s − p_i).
    c = {-p[i] * c[0], c[0] - p[i] * c[1], c[1] - p[i] * c[2]};
  }
  for (double& v : c) v /= denom;
  return c;
}

template <std::size_t K>
void accumulate(std::vector<Complex>& w, std::size_t first, const std::array<double, K>& p,
                double origin, double length, double omega) {
  const auto mu = moments(length, omega);
  const Complex phase = std::polar(1.0, -omega * origin);
  for (std::size_t j = 0; j < K; ++j) {
    const auto c = lagrange(p, j);
    w[first + j] += phase * (c[0] * mu[0] + c[1] * mu[1] + c[2] * mu[2]);
  }
}

}  // namespace

std::vector<Complex> oscillatory_weights(std::span<const double> t, double omega) {
  const std::size_t n = t.size();
  if (n < 2) throw std::invalid_argument("oscillatory_weights: need at least two nodes");
  for (std::size_t k = 1; k < n; ++k) {
    if (!(t[k] > t[k - 1])) {
      throw std::invalid_argument("oscillatory_weights: nodes must be strictly increasing");
    }
  }
  std::vector<Complex> w(n, Complex(0.0));
  if (n == 2) {
    accumulate<2>(w, 0, {0.0, t[1] - t[0]}, t[0], t[1] - t[0], omega);
    return w;
  }
  const std::size_t intervals = n - 1;
  std::size_t k = 0;
  for (; k + 2 <= intervals; k += 2) {
    accumulate<3>(w, k, {0.0, t[k + 1] - t[k], t[k + 2] - t[k]}, t[k], t[k + 2] - t[k], omega);
  }
  if (k < intervals) {
    // Last interval [t_{n−2}, t_{n−1}] on the parabola through the final three nodes.
    const double o = t[n - 2];
    accumulate<3>(w, n - 3, {t[n - 3] - o, 0.0, t[n - 1] - o}, o, t[n - 1] - o, omega);
  }
  return w;
}

std::vector<double> smooth_weights(std::span<const double> t) {
  const auto w = oscillatory_weights(t, 0.0);
  std::vector<double> r(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) r[k] = w[k].real();
  return r;
}

std::vector<double> cumulative_integral(std::span<const double> t,
                                        std::span<const double> f) {
  const std::size_t n = t.size();
  if (n < 2 || f.size() != n) {
    throw std::invalid_argument("cumulative_integral: need >= 2 nodes and matching values");
  }
  std::vector<double> out(n, 0.0);
  // ∫_lo^hi of the parabola through (p_j, v_j), in coordinates local to the panel.
  auto parabola = [](const std::array<double, 3>& p, const std::array<double, 3>& v, double lo,
                     double hi) {
    double total = 0.0;
    for (std::size_t j = 0; j < 3; ++j) {
      const auto c = lagrange(p, j);
      total += v[j] * (c[0] * (hi - lo) + c[1] * (hi * hi - lo * lo) / 2.0 +
                       c[2] * (hi * hi * hi - lo * lo * lo) / 3.0);
    }
    return total;
  };
  if (n == 2) {
    out[1] = 0.5 * (t[1] - t[0]) * (f[0] + f[1]);
    return out;
  }
  const std::size_t intervals = n - 1;
  std::size_t k = 0;
  for (; k + 2 <= intervals; k += 2) {
    const std::array<double, 3> p{0.0, t[k + 1] - t[k], t[k + 2] - t[k]};
    const std::array<double, 3> v{f[k], f[k + 1], f[k + 2]};
    out[k + 1] = out[k] + parabola(p, v, 0.0, p[1]);
    out[k + 2] = out[k] + parabola(p, v, 0.0, p[2]);
  }
  if (k < intervals) {
    const double o = t[n - 2];
    const std::array<double, 3> p{t[n - 3] - o, 0.0, t[n - 1] - o};
    const std::array<double, 3> v{f[n - 3], f[n - 2], f[n - 1]};
    out[n - 1] = out[n - 2] + parabola(p, v, 0.0, p[2]);
  }
  return out;
}

}  // namespace gatequiv
