// Copyright 2026 The spinmagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "spinmagic/symmetric_state.hpp"

namespace spinmagic {

/// Husimi function Q(theta, phi) = |<theta, phi|psi>|^2 on a regular
/// theta x phi grid, max-normalized; raw values kept for the identity
/// quadrature (2J+1)/(4 pi) * integral = 1.
struct HusimiGrid {
    std::vector<double> thetas;  // size P, [0, pi]
    std::vector<double> phis;    // size Q, [0, 2 pi]
    std::vector<double> values;  // P*Q, row-major over theta, in [0, 1]
    std::vector<double> raw;     // unnormalized |<theta,phi|psi>|^2

    double value(int it, int ip) const {
        return values[static_cast<size_t>(it) * phis.size() + ip];
    }

    /// Trapezoid quadrature of raw * (2J+1)/(4 pi) over the sphere.
    double identity_quadrature(int n_qubits) const;
};

HusimiGrid husimi(const SymmetricState& state, int p_theta, int q_phi);

}  // namespace spinmagic
