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

#include <string>
#include <variant>
#include <vector>

#include "gatequiv/algebra.hpp"

namespace gatequiv {

// Power spectral densities are two-sided in angular frequency:
//   ⟨δ(t) δ(t+τ)⟩ = ∫ S(ω) e^{iωτ} dω / 2π.
// A white level S₀ therefore means ⟨δ(t) δ(t')⟩ = S₀ δ(t − t').

struct WhitePsd {
  double level = 0.0;
};

/// S(ω) = A / |ω|^α for ω_ir ≤ |ω| ≤ ω_uv, zero elsewhere.
struct PowerLawPsd {
  double amplitude = 0.0;
  double exponent = 1.0;
  double ir_cutoff = 0.0;
  double uv_cutoff = 0.0;
};

/// Piecewise-linear in |ω| between the given nodes, zero beyond the last one.
struct TabulatedPsd {
  std::vector<double> omega;
  std::vector<double> density;
};

/// Static offset with standard deviation σ, S(ω) = 2π σ² δ(ω).
struct QuasiStaticPsd {
  double sigma = 0.0;
};

class Psd {
 public:
  using Variant = std::variant<WhitePsd, PowerLawPsd, TabulatedPsd, QuasiStaticPsd>;

  Psd() : spec_(WhitePsd{}) {}
  Psd(Variant spec);  // NOLINT(google-explicit-constructor)

  static Psd white(double level) { return Psd(WhitePsd{level}); }
  static Psd power_law(double amplitude, double exponent, double ir, double uv) {
    return Psd(PowerLawPsd{amplitude, exponent, ir, uv});
  }
  static Psd quasi_static(double sigma) { return Psd(QuasiStaticPsd{sigma}); }

  /// Continuous part of S(ω). Zero for the quasi-static variant.
  double operator()(double omega) const;
  /// Largest |ω| at which S can be non-zero (infinity for white noise, zero
  /// for quasi-static).
  double support_limit() const;
  bool is_quasi_static() const { return std::holds_alternative<QuasiStaticPsd>(spec_); }
  bool is_white() const { return std::holds_alternative<WhitePsd>(spec_); }
  bool is_zero() const;
  /// Multiplies the density by `factor` (≥ 0).
  Psd scaled(double factor) const;

  const Variant& spec() const { return spec_; }
  std::string describe() const;

 private:
  Variant spec_;
};

/// One stochastic variable δ_q entering as δ_q χ_q[h_c]·σ with
/// χ_q[h] = a_q + M_q h.
struct NoiseChannel {
  std::string label;
  AlgebraVector additive;
  RMatrix multiplicative;
  Psd psd;

  AlgebraVector sensitivity(const AlgebraVector& control) const;
  bool is_trivial() const;
};

NoiseChannel make_channel(std::string label, AlgebraVector additive, RMatrix multiplicative,
                          Psd psd = {});

/// `derivative` builds every (a_q, M_q) as the exact first derivative of the
/// control vector under the physical perturbation (Δ→Δ+δ, φ→φ+δ,
/// Ω→Ω(1+δ), θ→θ+δ). `printed` reproduces the literal published tables:
/// M_φ and M_Ω carry an extra ½ in su(2); in su(3) a_{Δ_k} carries 2π and
/// M_Ω lacks its E₇₇ term.
enum class ChannelConvention { derivative, printed };

/// Channels in order: detuning, phase, amplitude.
std::vector<NoiseChannel> su2_standard_channels(
    ChannelConvention convention = ChannelConvention::derivative);

/// Channels in order: detuning0, detuning1, amplitude, theta, phi.
std::vector<NoiseChannel> su3_standard_channels(
    ChannelConvention convention = ChannelConvention::derivative);

/// Matrix with a single 1 at the 1-based position (i, j).
RMatrix elementary_matrix(int size, int i, int j);

}  // namespace gatequiv
