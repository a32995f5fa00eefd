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

#include <Eigen/Dense>
#include <vector>

#include "spinmagic/symmetric_state.hpp"

namespace spinmagic {

/// Hermitian operator on the Dicke sector that is tridiagonal in the
/// z basis: real diagonal plus a complex super-diagonal (the
/// sub-diagonal is its conjugate). Collective generators J_x, J_y, J_z,
/// their linear combinations, and the two-axis twisting Hamiltonian all
/// have this form.
struct TridiagonalOperator {
    std::vector<double> diag;     // dim entries
    std::vector<Complex> super;   // dim-1 entries, element (k+1, k) is conj

    int dim() const { return static_cast<int>(diag.size()); }
    bool is_diagonal() const;
};

/// cx*J_x + cy*J_y + cz*J_z in the z-quantized Dicke basis:
/// diagonal cz*m, element <m+1| . |m> = (cx + i cy)/2 * sqrt((J-m)(J+m+1)).
/// Throws std::invalid_argument on the zero vector.
TridiagonalOperator collective_generator(int n_qubits, double cx, double cy,
                                         double cz);

/// J_z J_y + J_y J_z (the two-axis counter-twisting generator
/// (ZY + YZ)/4 in collective form); zero diagonal.
TridiagonalOperator tact_generator(int n_qubits);

/// Eigen-decomposition of a Hermitian tridiagonal operator. The complex
/// super-diagonal is gauged to a real symmetric tridiagonal problem and
/// solved with the standard implicit-shift QL/QR kernel; the phase gauge
/// is restored on the eigenvectors.
struct SpectralDecomposition {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;  // columns
};

SpectralDecomposition spectral(const TridiagonalOperator& op);

/// exp(-i angle G)|psi> through the spectral decomposition. Diagonal
/// generators take an exact log-domain fast path that never leaves the
/// log representation.
SymmetricState apply_exponential(const TridiagonalOperator& generator,
                                 double angle, const SymmetricState& state);

SymmetricState apply_exponential(const SpectralDecomposition& spec,
                                 double angle, const SymmetricState& state);

/// R_mu(angle) = exp(-i angle J_mu) and friends.
inline SymmetricState apply_rotation(const SymmetricState& state,
                                     const TridiagonalOperator& generator,
                                     double angle) {
    return apply_exponential(generator, angle, state);
}

struct Moments {
    double mean;
    double variance;
};

/// <G> and <G^2> - <G>^2 (variance clipped at -1e-12 from below).
Moments moments(const SymmetricState& state, const TridiagonalOperator& g);

/// Symmetrized covariance (<G1 G2 + G2 G1>/2 - <G1><G2>).
double cross_covariance(const SymmetricState& state,
                        const TridiagonalOperator& g1,
                        const TridiagonalOperator& g2);

}  // namespace spinmagic
