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

#include "gatequiv/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gatequiv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Psd::Psd(Variant spec) : spec_(std::move(spec)) {
  std::visit(
      overloaded{
          [](const WhitePsd& w) {
            if (!(w.level >= 0.0) || !std::isfinite(w.level)) {
              throw std::invalid_argument("white PSD level must be finite and >= 0");
            }
          },
          [](const PowerLawPsd& p) {
            if (!(p.amplitude >= 0.0) || !std::isfinite(p.amplitude)) {
              throw std::invalid_argument("power-law PSD amplitude must be finite and >= 0");
            }
            if (!(p.ir_cutoff > 0.0 && p.ir_cutoff < p.uv_cutoff) || !std::isfinite(p.uv_cutoff)) {
              throw std::invalid_argument("power-law PSD needs 0 < ir_cutoff < uv_cutoff < inf");
            }
          },
          [](const TabulatedPsd& t) {
            if (t.omega.size() < 2 || t.omega.size() != t.density.size()) {
              throw std::invalid_argument("tabulated PSD needs >= 2 matching (omega, S) pairs");
            }
            if (!std::is_sorted(t.omega.begin(), t.omega.end()) || t.omega.front() < 0.0) {
              throw std::invalid_argument("tabulated PSD omega must be sorted and >= 0");
            }
            for (double s : t.density) {
              if (!(s >= 0.0) || !std::isfinite(s)) {
                throw std::invalid_argument("tabulated PSD values must be finite and >= 0");
              }
            }
          },
          [](const QuasiStaticPsd& q) {
            if (!(q.sigma >= 0.0) || !std::isfinite(q.sigma)) {
              throw std::invalid_argument("quasi-static sigma must be finite and >= 0");
            }
          },
      },
      spec_);
}

double Psd::operator()(double omega) const {
  const double w = std::abs(omega);
  return std::visit(
      overloaded{
          [](const WhitePsd& p) { return p.level; },
          [w](const PowerLawPsd& p) {
            if (w < p.ir_cutoff || w > p.uv_cutoff) return 0.0;
            return p.amplitude / std::pow(w, p.exponent);
          },
          [w](const TabulatedPsd& p) {
            if (w > p.omega.back()) return 0.0;
            if (w <= p.omega.front()) return p.density.front();
            const auto it = std::upper_bound(p.omega.begin(), p.omega.end(), w);
            const auto i = static_cast<std::size_t>(it - p.omega.begin());
            const double f = (w - p.omega[i - 1]) / (p.omega[i] - p.omega[i - 1]);
            return (1.0 - f) * p.density[i - 1] + f * p.density[i];
          },
          [](const QuasiStaticPsd&) { return 0.0; },
      },
      spec_);
}

double Psd::support_limit() const {
  return std::visit(overloaded{
                        [](const WhitePsd&) { return std::numeric_limits<double>::infinity(); },
                        [](const PowerLawPsd& p) { return p.uv_cutoff; },
                        [](const TabulatedPsd& p) { return p.omega.back(); },
                        [](const QuasiStaticPsd&) { return 0.0; },
                    },
                    spec_);
}

bool Psd::is_zero() const {
  return std::visit(
      overloaded{
          [](const WhitePsd& p) { return p.level == 0.0; },
          [](const PowerLawPsd& p) { return p.amplitude == 0.0; },
          [](const TabulatedPsd& p) {
            return std::all_of(p.density.begin(), p.density.end(), [](double s) { return s == 0.0; });
          },
          [](const QuasiStaticPsd& p) { return p.sigma == 0.0; },
      },
      spec_);
}

Psd Psd::scaled(double factor) const {
  if (!(factor >= 0.0)) throw std::invalid_argument("Psd::scaled: factor must be >= 0");
  return std::visit(overloaded{
                        [factor](WhitePsd p) { p.level *= factor; return Psd(p); },
                        [factor](PowerLawPsd p) { p.amplitude *= factor; return Psd(p); },
                        [factor](TabulatedPsd p) {
                          for (double& s : p.density) s *= factor;
                          return Psd(std::move(p));
                        },
                        [factor](QuasiStaticPsd p) { p.sigma *= std::sqrt(factor); return Psd(p); },
                    },
                    spec_);
}

std::string Psd::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const WhitePsd& p) { os << "white(level=" << p.level << ")"; },
                 [&](const PowerLawPsd& p) {
                   os << "power_law(amplitude=" << p.amplitude << ", exponent=" << p.exponent
                      << ", ir=" << p.ir_cutoff << ", uv=" << p.uv_cutoff << ")";
                 },
                 [&](const TabulatedPsd& p) { os << "tabulated(" << p.omega.size() << " nodes)"; },
                 [&](const QuasiStaticPsd& p) { os << "quasi_static(sigma=" << p.sigma << ")"; },
             },
             spec_);
  return os.str();
}

// ---------------------------------------------------------------------------

AlgebraVector NoiseChannel::sensitivity(const AlgebraVector& control) const {
  if (control.size() != additive.size()) {
    throw std::invalid_argument("NoiseChannel::sensitivity: dimension mismatch for " + label);
  }
  return additive + multiplicative * control;
}

bool NoiseChannel::is_trivial() const {
  return additive.isZero(0.0) && multiplicative.isZero(0.0);
}

NoiseChannel make_channel(std::string label, AlgebraVector additive, RMatrix multiplicative,
                          Psd psd) {
  const auto n = additive.size();
  if (multiplicative.rows() != n || multiplicative.cols() != n) {
    throw std::invalid_argument("make_channel: M_q must be square and match a_q");
  }
  if (!additive.allFinite() || !multiplicative.allFinite()) {
    throw std::invalid_argument("make_channel: non-finite entries");
  }
  return NoiseChannel{std::move(label), std::move(additive), std::move(multiplicative),
                      std::move(psd)};
}

RMatrix elementary_matrix(int size, int i, int j) {
  if (i < 1 || j < 1 || i > size || j > size) {
    throw std::out_of_range("elementary_matrix: index outside 1..size");
  }
  RMatrix e = RMatrix::Zero(size, size);
  e(i - 1, j - 1) = 1.0;
  return e;
}

std::vector<NoiseChannel> su2_standard_channels(ChannelConvention convention) {
  const double scale = convention == ChannelConvention::printed ? 0.5 : 1.0;
  const AlgebraVector zero = AlgebraVector::Zero(3);
  const AlgebraVector z_half = AlgebraVector::Unit(3, 2) * 0.5;
  const RMatrix yx = elementary_matrix(3, 2, 1);
  const RMatrix xy = elementary_matrix(3, 1, 2);
  const RMatrix xx = elementary_matrix(3, 1, 1);
  const RMatrix yy = elementary_matrix(3, 2, 2);
  return {
      make_channel("detuning", z_half, RMatrix::Zero(3, 3)),
      make_channel("phase", zero, scale * (yx - xy)),
      make_channel("amplitude", zero, scale * (xx + yy)),
  };
}

std::vector<NoiseChannel> su3_standard_channels(ChannelConvention convention) {
  const bool printed = convention == ChannelConvention::printed;
  const double detuning_scale = printed ? 2.0 * std::numbers::pi : 1.0;
  auto e = [](int i, int j) { return elementary_matrix(8, i, j); };

  std::vector<NoiseChannel> channels;
  for (int k = 0; k < 2; ++k) {
    AlgebraVector a = AlgebraVector::Zero(8);
    a[2] = detuning_scale * (k == 0 ? 0.5 : -0.5);
    a[7] = detuning_scale * 0.5 / std::sqrt(3.0);
    channels.push_back(make_channel("detuning" + std::to_string(k), a, RMatrix::Zero(8, 8)));
  }
  RMatrix m_amplitude = e(4, 4) + e(5, 5) + e(6, 6);
  if (!printed) m_amplitude += e(7, 7);
  const AlgebraVector zero = AlgebraVector::Zero(8);
  channels.push_back(make_channel("amplitude", zero, m_amplitude));
  channels.push_back(make_channel("theta", zero, 0.5 * (e(5, 7) - e(7, 5) + e(6, 4) - e(4, 6))));
  channels.push_back(make_channel("phi", zero, 0.5 * (e(5, 4) - e(4, 5) + e(6, 7) - e(7, 6))));
  return channels;
}

}  // namespace gatequiv
