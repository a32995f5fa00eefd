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

#include <string>
#include <vector>

#include "spinmagic/log_complex.hpp"

namespace spinmagic {

/// The six cardinal directions on the Bloch sphere. The corresponding
/// collective states are the only stabilizer states in the maximal-spin
/// sector.
enum class Cardinal { PlusX, MinusX, PlusY, MinusY, PlusZ, MinusZ };

const char* cardinal_name(Cardinal c);

/// Permutation-symmetric N-qubit state in the maximal-spin sector,
/// stored as N+1 Dicke amplitudes quantized along z.
///
/// Index convention: amplitude k multiplies |J = N/2, m = k - J>, i.e.
/// k counts the number of up spins. |+Z> = |J, J> sits at k = N.
///
/// States are kept normalized with a canonical global phase: the
/// largest-magnitude amplitude has phase 0. All physical quantities are
/// phase invariant; the canonical phase makes overlap sextets
/// reproducible.
class SymmetricState {
  public:
    /// Builds a state from raw amplitudes (make_state). Requires even n,
    /// n+1 amplitudes, and a norm within `norm_tolerance` of 1 before
    /// renormalization. Throws std::invalid_argument otherwise.
    static SymmetricState from_amplitudes(int n_qubits,
                                          std::vector<LogComplex> amplitudes,
                                          double norm_tolerance = 1e-6);

    /// Spin coherent state |theta, phi>, amplitudes
    /// c_k = sqrt(C(N,k)) cos^{N-k}(theta/2) (sin(theta/2) e^{-i phi})^k.
    /// theta = 0 lands on |J, -J> (the -Z pole), theta = pi on |J, +J>.
    /// Poles take phi = 0 by convention. Binomials go through log-gamma,
    /// so n = 2000 is fine.
    static SymmetricState coherent(int n_qubits, double theta, double phi);

    /// Dicke basis vector |J = N/2, m>.
    static SymmetricState dicke(int n_qubits, int m);

    /// Cardinal coherent states with the phase conventions of the
    /// rotation construction |+Z> = |up...up>, |+X> = R_y(pi/2)|+Z>,
    /// |+Y> = R_x(-pi/2)|+Z>, |-Z> = R_y(pi)|+Z>, and
    /// |-X> = R_z(pi)|+X>, |-Y> = R_z(pi)|+Y>.
    static SymmetricState cardinal(int n_qubits, Cardinal c);

    int n_qubits() const { return n_; }
    int dim() const { return n_ + 1; }
    double total_spin() const { return 0.5 * n_; }
    const std::vector<LogComplex>& amplitudes() const { return amps_; }
    const LogComplex& amplitude(int k) const { return amps_[k]; }

    /// |sum_k |c_k|^2 - 1| accumulated largest-first.
    double norm_defect() const;

    /// Linear-domain copy of the amplitudes. Components below the double
    /// underflow threshold flush to zero; callers needing 2^{-N}-scale
    /// amplitudes must stay in the log domain.
    std::vector<Complex> to_vector() const;

    /// Renormalizes and canonicalizes a linear-domain vector (used after
    /// spectral evolutions, which preserve the norm to 1e-10 anyway).
    static SymmetricState from_vector(int n_qubits,
                                      const std::vector<Complex>& v);

    /// Replaces the amplitudes without renormalizing; the caller
    /// guarantees unitarity (diagonal evolutions).
    SymmetricState with_amplitudes_unit(std::vector<LogComplex> amps) const;

  private:
    SymmetricState(int n, std::vector<LogComplex> a)
        : n_(n), amps_(std::move(a)) {}
    void canonicalize();

    int n_ = 0;
    std::vector<LogComplex> amps_;
};

/// <bra|ket> in the log domain with double-double accumulation.
/// Guarantees overlap(a, b) == conj(overlap(b, a)) exactly and
/// |overlap| <= 1 + 1e-12 for normalized inputs.
LogComplex overlap(const SymmetricState& bra, const SymmetricState& ket);

/// The six projections <s sigma|psi> that determine the large-N SRE.
struct OverlapSextet {
    LogComplex a_plus_x, a_minus_x;
    LogComplex a_plus_y, a_minus_y;
    LogComplex a_plus_z, a_minus_z;

    const LogComplex& get(Cardinal c) const;
};

OverlapSextet overlap_sextet(const SymmetricState& state);

/// Fidelity |<a|b>|^2.
double fidelity(const SymmetricState& a, const SymmetricState& b);

}  // namespace spinmagic
