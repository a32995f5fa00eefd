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

#include "spinmagic/coherent_algebra.hpp"
#include "spinmagic/symmetric_state.hpp"

namespace spinmagic {

/// Reference oracle: expands the state to 2^N amplitudes and transforms
/// the density matrix into all 4^N Pauli coefficients. Exact and
/// structurally independent of the symmetric-class paths. Requires
/// N <= 14 (memory is 16 * 4^N bytes) and 2q an even positive integer.
double sre_oracle_statevector(const SymmetricState& state, double q);

/// <psi|P_rep|psi> for one permutation class, via closed combinatorial
/// sums over the up-spin assignments of the X/Y/Z/I site blocks.
/// O(N * (n_x + n_y)) once the per-class tables are built.
double pauli_class_expectation(const SymmetricState& state,
                               const PauliClass& cls);

/// Exact SRE from the class sum
/// M_q = 1/(1-q) log2(2^-N sum_cls mult * <P_rep>^{2q}).
/// Practical to N ~ 200; 2q must be an even positive integer.
double sre_exact_symmetric(const SymmetricState& state, double q);

/// The 12 coefficients c^{(sigma)}_{n,m} of the closed-form SRE
/// estimator, sigma in {X,Y,Z}, n,m in {1,2}. Real by construction:
/// c_{1,m} = |a_{+s}|^2 + (-1)^m |a_{-s}|^2,
/// c_{2,2} = 2 Re(conj(a_{-s}) a_{+s}), c_{2,1} = -2 Im(...) with the
/// principal branch sqrt(-1) = +i. Both forms are cross-checked to
/// 1e-10 during construction.
struct MagicCoefficients {
    // c[sigma][n-1][m-1]
    double c[3][2][2];
};

MagicCoefficients magic_coefficients(const OverlapSextet& sextet);

/// Closed-form large-N SRE estimator:
/// M_q ~ 1/(1-q) log2(1/2 sum |c|^{2q}). Any real q > 0, q != 1.
double sre_approx(const OverlapSextet& sextet, double q, int n_qubits);

/// Wineland squeezing parameter xi^2 = N min_n Var(n.(J_y, J_z)) / <J_x>^2
/// with the analytic transverse minimization. The collective-Pauli and
/// J-operator definitions agree (the factors of two cancel). Throws
/// std::domain_error when the mean spin vanishes (GHZ point).
double squeezing_parameter(const SymmetricState& state);

enum class BellAxis { X, Y, Z };

/// Many-body Bell correlator E = |<J_+^N>/N!|^2 along the given
/// quantization axis, evaluated as the product of the extremal-state
/// overlap magnitudes (J_+^N / N! is exactly |top><bottom| in the ladder
/// axis). Q = N + log2(E); Q > 0 witnesses Bell correlations.
struct BellResult {
    double log2_e;  // -inf allowed
    double q;       // N + log2_e
};

BellResult bell_correlator(const SymmetricState& state,
                           BellAxis axis = BellAxis::X);

/// High-precision Bell correlator for the OAT state U(chi_t)|+X>.
/// The extremal overlaps are alternating binomial sums that cancel to
/// e^{-N}-scale values; the generic log-domain path bottoms out near a
/// 1e-13 amplitude floor, so this routine carries the terms in quad
/// precision and stays faithful down to log2(E) ~ -430.
BellResult oat_bell_correlator(int n_qubits, double chi_t,
                               BellAxis axis = BellAxis::X);

}  // namespace spinmagic
