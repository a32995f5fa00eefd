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

#include <array>
#include <vector>

#include "spinmagic/symmetric_state.hpp"

namespace spinmagic {

/// Multiset label (n_x, n_y, n_z, n_i) for a permutation class of Pauli
/// strings; the block representative acts with X on the first n_x sites,
/// then Y, Z, I blocks.
struct PauliClass {
    int n_x = 0, n_y = 0, n_z = 0, n_i = 0;
    int total() const { return n_x + n_y + n_z + n_i; }
};

/// Per-qubit matrix elements of X, Y, Z, I between two spin coherent
/// directions. Angles follow the rotation parametrization
/// |theta, phi> = R_z(phi) R_y(theta) |up...up> (theta measured from the
/// +Z pole), under which the product
/// alpha^{n_x} beta^{n_y} gamma^{n_z} kappa^{n_i} is the exact
/// coherent-basis matrix element of the class representative.
/// Satisfies |alpha|^2 + |beta|^2 + |gamma|^2 + |kappa|^2 = 2.
struct ElementaryCoefficients {
    Complex alpha, beta, gamma, kappa;
};

ElementaryCoefficients elementary_coefficients(double theta_i, double phi_i,
                                               double theta_j, double phi_j);

struct CoherentAngles {
    double theta;
    double phi;
};

/// Cardinal directions in the rotation parametrization used by the
/// elementary coefficients: +Z=(0,0), -Z=(pi,0), +X=(pi/2,0),
/// -X=(pi/2,pi), +Y=(pi/2,pi/2), -Y=(pi/2,-pi/2).
CoherentAngles cardinal_angles(Cardinal c);

/// <theta_i, phi_i | P_rep | theta_j, phi_j> for the block representative
/// of `cls`, in the log domain. Throws if cls.total() != n_qubits.
LogComplex coherent_matrix_element(int n_qubits, CoherentAngles bra,
                                   CoherentAngles ket, const PauliClass& cls);

/// One entry of the cardinal-pair table.
struct CardinalTableEntry {
    Cardinal bra;
    Cardinal ket;
    Complex value;
};

/// The 12 system-size-independent matrix elements <s sigma|P|s' sigma'>
/// for the six diagonal and six antipodal cardinal pairs. Every entry is
/// 0 unless its delta conditions hold, in which case it is a fourth root
/// of unity (times the class parity signs). Values are exact: the
/// cardinal angles are evaluated with quarter-turn trigonometry.
std::array<CardinalTableEntry, 12> cardinal_table(int n_qubits,
                                                  const PauliClass& cls);

/// Few-component decomposition over spin coherent states; the enabling
/// representation for exact large-N SRE of twisting-protocol states.
class CoherentSuperposition {
  public:
    struct Component {
        LogComplex weight;
        double theta;
        double phi;
    };

    CoherentSuperposition(int n_qubits, std::vector<Component> components);

    int n_qubits() const { return n_; }
    const std::vector<Component>& components() const { return comps_; }

    /// |<psi|psi> - 1| via the Gram matrix of coherent overlaps.
    double norm_defect() const;

    /// Rescales the weights so the implied state has unit norm.
    CoherentSuperposition normalized() const;

    /// Expands into Dicke amplitudes (log domain throughout).
    SymmetricState to_state() const;

  private:
    int n_;
    std::vector<Component> comps_;
};

/// Exact SRE M_q of a normalized coherent superposition, by enumerating
/// all (n_x, n_y, n_z, n_i) classes and expanding <psi|P|psi> over
/// component pairs. Cost is components^2 per class; requires <= 64
/// components and 2q an even integer (class expectations are real up to
/// a <= 1e-10 residue, which is checked and discarded).
double sre_exact_coherent(const CoherentSuperposition& sup, double q);

}  // namespace spinmagic
