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
#include "spinmagic/collective.hpp"
#include "spinmagic/symmetric_state.hpp"

namespace spinmagic {

enum class TwistProtocol { OAT, TACT };

/// One-axis twisting exp(-i chi_t J_z^2): amplitude k picks up the phase
/// e^{-i chi_t (k-J)^2}. Diagonal, so exact in the log domain and norm
/// preserving by construction.
SymmetricState evolve_oat(const SymmetricState& state, double chi_t);

/// Two-axis counter-twisting exp(-i chi_t (J_z J_y + J_y J_z)) via the
/// spectral decomposition of the tridiagonal generator.
SymmetricState evolve_tact(const SymmetricState& state, double chi_t);

/// Product state polarized along +x: the OAT/TACT initial state.
SymmetricState plus_x_state(int n_qubits);

/// n-head kitten state: the OAT state at chi_t = pi/n assembled as the
/// superposition of rotated GHZ states
/// sqrt(2/n) e^{-i pi/4} sum_s e^{i pi s^2/n} U_z(phi_s)|GHZ_x(theta_s)>
/// with phi_s = 2 pi s / n and theta_s = pi s + pi n / 4 (mod 2 pi).
/// Requires even n_heads >= 2. Equals evolve_oat(|+X>, pi/n) including
/// the global phase.
SymmetricState kitten_state(int n_qubits, int n_heads);

/// |GHZ_x(theta)> = (|+X> + e^{i theta}|-X>)/sqrt(2).
SymmetricState ghz_x(int n_qubits, double theta);

/// The kitten as a coherent superposition (for the exact-coherent SRE
/// path): n equally weighted heads on the equator.
CoherentSuperposition kitten_superposition(int n_qubits, int n_heads);

/// Generalized GHZ state (|theta=0,phi=0> + |theta=2eps,phi=0>)/sqrt(K),
/// K = 2(1 + cos^{2J}(eps)); requires two_epsilon in [0, pi].
CoherentSuperposition generalized_ghz(int n_qubits, double two_epsilon);

/// Dicke basis state |J = N/2, m>; requires |m| <= J.
SymmetricState dicke_state(int n_qubits, int m);

struct SqueezingOptimum {
    double t_best;    // dimensionless chi t
    double xi2_best;
};

/// Minimizes the Wineland parameter over chi_t in (0, 4 * t_guess] with a
/// >= 200 point grid seeded at the asymptotic guess (3^{1/6} N^{-2/3} for
/// OAT, log(2N)/(2N) for TACT), refined by golden section to relative
/// tolerance 1e-6.
SqueezingOptimum find_best_squeezing(int n_qubits, TwistProtocol protocol);

}  // namespace spinmagic
