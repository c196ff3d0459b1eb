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

#include <span>
#include <vector>

#include "gatequiv/algebra.hpp"

namespace gatequiv {

/// Weights w_j such that Σ_j w_j f(t_j) equals ∫ p(t) e^{−iωt} dt over
/// [t_0, t_last], where p is the composite quadratic interpolant of the
/// samples (pairs of intervals share a parabola; an odd trailing interval
/// reuses the last three nodes; two nodes fall back to a straight line).
/// Nodes must be strictly increasing. Moments are evaluated in closed form,
/// with a power series when |ω h| is small.
std::vector<Complex> oscillatory_weights(std::span<const double> nodes, double omega);

/// The ω = 0 case: a Simpson-type rule valid on non-uniform nodes.
std::vector<double> smooth_weights(std::span<const double> nodes);

/// Running integral ∫_{t_0}^{t_k} p(t) dt of the same interpolant at every
/// node. The last entry equals Σ_j smooth_weights_j f_j.
std::vector<double> cumulative_integral(std::span<const double> nodes,
                                        std::span<const double> values);

}  // namespace gatequiv
