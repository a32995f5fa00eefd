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
#include <cstdint>
#include <stdexcept>

#include "spinmagic/symmetric_state.hpp"

namespace spinmagic {

/// Raised by the verbatim t=0 calibration, whose first-order fringe
/// vanishes identically (the kicked coherent overlap is symmetric under
/// phi -> phi + pi).
class DegenerateGainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class CalibrationMode { PaperLiteral, AnalyticGain };

/// Twist-echo overlap readout: prepare U(t)|+X>, apply a small
/// tangent-plane kick R(theta, phi), untwist with U(t)^dagger, map the
/// target cardinal onto +Z, and detect the top Dicke level.
struct ReadoutPlan {
    int n_qubits = 0;
    double chi_t = 0.0;        // state-prep twisting phase
    double kick_angle = 0.01;  // theta, in (0, 0.3]
    Cardinal target = Cardinal::PlusX;
    std::vector<double> analysis_phases = {0.0, M_PI_2};
    std::uint64_t shots = 0;   // 0 = exact probabilities
    std::uint64_t seed = 0;

    void validate() const;
};

struct CalibrationGain {
    double offset_cos = 0.0;  // A at analysis phase 0
    double offset_sin = 0.0;  // A at analysis phase pi/2
    double gain = 0.0;        // B
    CalibrationMode mode = CalibrationMode::PaperLiteral;
};

/// Exact probability of the all-spins-up outcome of the full sequence
/// P = |<+Z| M_target U^dag R_tan(theta, phi) U |+X>|^2.
double readout_probability(const ReadoutPlan& plan, double analysis_phase);

/// PaperLiteral: A = (P_cal(0) + P_cal(pi))/2, B = (P_cal(0) - P_cal(pi))/2
/// at t = 0; raises DegenerateGainError because |B| < 1e-12 exactly.
/// AnalyticGain: B from the finite-difference response of P to a
/// synthetically displaced reference (the target cardinal displaced along
/// its first ladder level, whose overlap is known); the offsets anchor
/// the t=0 baselines so the t=0 state is estimated exactly.
CalibrationGain calibrate(int n_qubits, Cardinal target, double kick_angle,
                          CalibrationMode mode);

struct OverlapEstimate {
    Complex value;
    double sigma_re = 0.0;  // binomial propagation; 0 when shots == 0
    double sigma_im = 0.0;
};

/// Two-phase quadrature estimator
/// Re a = (P(0) - A_cos)/B, Im a = -(P(pi/2) - A_sin)/B.
/// With shots > 0, probabilities are replaced by binomial frequencies
/// drawn deterministically from the plan's seed.
OverlapEstimate estimate_overlap(const ReadoutPlan& plan,
                                 const CalibrationGain& gain);

struct SextetEstimate {
    std::array<OverlapEstimate, 6> entries;  // Cardinal enum order
    const OverlapEstimate& get(Cardinal c) const {
        return entries[static_cast<int>(c)];
    }
};

/// Runs all six targets with AnalyticGain calibration.
SextetEstimate estimate_sextet(int n_qubits, double chi_t, double kick_angle,
                               std::uint64_t shots, std::uint64_t seed);

}  // namespace spinmagic
