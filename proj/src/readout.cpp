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

#include "spinmagic/readout.hpp"

#include <cmath>
#include <random>

#include "spinmagic/collective.hpp"
#include "spinmagic/protocols.hpp"

namespace spinmagic {

namespace {

struct Frame {
    int sign;          // +1 or -1
    int axis;          // 0 = X, 1 = Y, 2 = Z
};

Frame frame_of(Cardinal c) {
    switch (c) {
        case Cardinal::PlusX: return {+1, 0};
        case Cardinal::MinusX: return {-1, 0};
        case Cardinal::PlusY: return {+1, 1};
        case Cardinal::MinusY: return {-1, 1};
        case Cardinal::PlusZ: return {+1, 2};
        case Cardinal::MinusZ: return {-1, 2};
    }
    return {+1, 0};
}

/// Tangent-plane kick generator cos(phi) J_beta^{(s)} + sin(phi) J_gamma^{(s)}
/// with (beta, gamma, sigma) right-handed and J^{(s)} = s J.
TridiagonalOperator kick_generator(int n, Cardinal target, double phi) {
    Frame f = frame_of(target);
    double c[3] = {0.0, 0.0, 0.0};
    int beta = (f.axis + 1) % 3, gamma = (f.axis + 2) % 3;
    c[beta] = f.sign * std::cos(phi);
    c[gamma] = f.sign * std::sin(phi);
    return collective_generator(n, c[0], c[1], c[2]);
}

double probability_for_state(const SymmetricState& prepared, int n,
                             double chi_t, double theta, Cardinal target,
                             double phi) {
    SymmetricState st = prepared;
    if (theta != 0.0)
        st = apply_exponential(kick_generator(n, target, phi), theta, st);
    st = evolve_oat(st, -chi_t);
    LogComplex amp = overlap(SymmetricState::cardinal(n, target), st);
    if (amp.is_zero()) return 0.0;
    double p = std::exp(amp.abs2_log());
    return std::min(p, 1.0);
}

constexpr double kMaxKick = 0.3;

void validate_common(int n, double theta, bool allow_zero) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("even positive qubit count required");
    if (theta < 0.0 || theta > kMaxKick || (!allow_zero && theta == 0.0))
        throw std::invalid_argument("kick angle must lie in (0, 0.3]");
}

/// Splitmix64; every (target, phase) pair owns an independent substream.
std::uint64_t mix_seed(std::uint64_t seed, int target, int phase) {
    std::uint64_t z =
        seed + 0x9e3779b97f4a7c15ull * (1 + target * 8 + phase);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double sample_frequency(double p, std::uint64_t shots, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < shots; ++s)
        if (u(gen) < p) ++hits;
    return double(hits) / double(shots);
}

}  // namespace

void ReadoutPlan::validate() const {
    validate_common(n_qubits, kick_angle, false);
    if (shots > 100000000ull)
        throw std::invalid_argument("shot count above 1e8 not supported");
    // the two-phase estimator reads the quadratures at 0 and pi/2;
    // arbitrary phases are for probability scans
    if (analysis_phases.size() < 2 || analysis_phases[0] != 0.0 ||
        analysis_phases[1] != M_PI_2)
        throw std::invalid_argument(
            "estimation plans use analysis phases {0, pi/2}");
}

double readout_probability(const ReadoutPlan& plan, double analysis_phase) {
    validate_common(plan.n_qubits, plan.kick_angle, true);
    SymmetricState prepared =
        evolve_oat(plus_x_state(plan.n_qubits), plan.chi_t);
    return probability_for_state(prepared, plan.n_qubits, plan.chi_t,
                                 plan.kick_angle, plan.target, analysis_phase);
}

CalibrationGain calibrate(int n_qubits, Cardinal target, double kick_angle,
                          CalibrationMode mode) {
    validate_common(n_qubits, kick_angle, false);
    SymmetricState ref = plus_x_state(n_qubits);  // t = 0 reference
    auto pcal = [&](double phi) {
        return probability_for_state(ref, n_qubits, 0.0, kick_angle, target,
                                     phi);
    };
    CalibrationGain g;
    g.mode = mode;
    if (mode == CalibrationMode::PaperLiteral) {
        double p0 = pcal(0.0), ppi = pcal(M_PI);
        g.offset_cos = 0.5 * (p0 + ppi);
        g.offset_sin = g.offset_cos;
        g.gain = 0.5 * (p0 - ppi);
        if (std::abs(g.gain) < 1e-12)
            throw DegenerateGainError(
                "t=0 calibration fringe vanishes: the kicked coherent "
                "overlap is symmetric under phi -> phi + pi, so B = 0");
        return g;
    }

    // Analytic gain: finite-difference response of P(phi = 0) to a
    // reference displaced along the gamma tangent of the target (the
    // displacement that the phi = 0 kick converts into a first-order
    // fringe; the beta tangent dephases and gives none). The reference
    // overlap stays known, 1/sqrt(1 + eps^2).
    SymmetricState card = SymmetricState::cardinal(n_qubits, target);
    TridiagonalOperator k0 = kick_generator(n_qubits, target, M_PI_2);
    std::vector<Complex> base = card.to_vector();
    std::vector<Complex> tang(base.size());
    {
        // normalized K|target>, the unit tangent vector
        const auto& sup = k0.super;
        for (size_t k = 0; k < base.size(); ++k) {
            Complex acc = k0.diag[k] * base[k];
            if (k + 1 < base.size()) acc += std::conj(sup[k]) * base[k + 1];
            if (k > 0) acc += sup[k - 1] * base[k - 1];
            tang[k] = acc;
        }
        double norm = 0.0;
        for (const auto& v : tang) norm += std::norm(v);
        norm = std::sqrt(norm);
        for (auto& v : tang) v /= norm;
    }
    const double eps = 1e-3;
    auto displaced = [&](double e) {
        std::vector<Complex> v(base.size());
        double norm = std::sqrt(1.0 + e * e);
        for (size_t k = 0; k < base.size(); ++k)
            v[k] = (base[k] + e * tang[k]) / norm;
        return SymmetricState::from_vector(n_qubits, v);
    };
    double pp = probability_for_state(displaced(+eps), n_qubits, 0.0,
                                      kick_angle, target, 0.0);
    double pm = probability_for_state(displaced(-eps), n_qubits, 0.0,
                                      kick_angle, target, 0.0);
    g.gain = std::abs(pp - pm) / (2.0 * eps);
    if (g.gain < 1e-12)
        throw DegenerateGainError("analytic gain underflowed");
    // Anchor the two quadrature baselines at the exact t=0 values so the
    // unevolved state is estimated without error.
    Complex x = overlap(card, ref).to_complex();
    g.offset_cos = pcal(0.0) - g.gain * x.real();
    g.offset_sin = pcal(M_PI_2) + g.gain * x.imag();
    return g;
}

OverlapEstimate estimate_overlap(const ReadoutPlan& plan,
                                 const CalibrationGain& gain) {
    plan.validate();
    if (std::abs(gain.gain) < 1e-12)
        throw DegenerateGainError("calibration gain is degenerate");
    SymmetricState prepared =
        evolve_oat(plus_x_state(plan.n_qubits), plan.chi_t);
    double p0 = probability_for_state(prepared, plan.n_qubits, plan.chi_t,
                                      plan.kick_angle, plan.target, 0.0);
    double p90 = probability_for_state(prepared, plan.n_qubits, plan.chi_t,
                                       plan.kick_angle, plan.target, M_PI_2);
    OverlapEstimate est;
    if (plan.shots > 0) {
        int tgt = static_cast<int>(plan.target);
        p0 = sample_frequency(p0, plan.shots, mix_seed(plan.seed, tgt, 0));
        p90 = sample_frequency(p90, plan.shots, mix_seed(plan.seed, tgt, 1));
        est.sigma_re =
            std::sqrt(std::max(p0 * (1.0 - p0), 0.0) / double(plan.shots)) /
            std::abs(gain.gain);
        est.sigma_im =
            std::sqrt(std::max(p90 * (1.0 - p90), 0.0) / double(plan.shots)) /
            std::abs(gain.gain);
    }
    est.value = {(p0 - gain.offset_cos) / gain.gain,
                 -(p90 - gain.offset_sin) / gain.gain};
    return est;
}

SextetEstimate estimate_sextet(int n_qubits, double chi_t, double kick_angle,
                               std::uint64_t shots, std::uint64_t seed) {
    SextetEstimate out;
    for (int t = 0; t < 6; ++t) {
        Cardinal target = static_cast<Cardinal>(t);
        CalibrationGain gain =
            calibrate(n_qubits, target, kick_angle, CalibrationMode::AnalyticGain);
        ReadoutPlan plan;
        plan.n_qubits = n_qubits;
        plan.chi_t = chi_t;
        plan.kick_angle = kick_angle;
        plan.target = target;
        plan.shots = shots;
        plan.seed = seed;
        out.entries[t] = estimate_overlap(plan, gain);
    }
    return out;
}

}  // namespace spinmagic
