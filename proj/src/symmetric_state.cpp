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

#include "spinmagic/symmetric_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinmagic {

namespace {

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0);
}

void require_even_positive(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(
            "symmetric states require an even positive qubit count, got " +
            std::to_string(n));
}

/// log(sum |c_k|^2), largest term first.
double log_norm_squared(const std::vector<LogComplex>& amps) {
    double mx = -std::numeric_limits<double>::infinity();
    for (const auto& a : amps) mx = std::max(mx, a.abs2_log());
    if (std::isinf(mx)) return mx;
    DoubleDouble acc;
    for (const auto& a : amps) {
        if (a.is_zero()) continue;
        acc.add(std::exp(a.abs2_log() - mx));
    }
    return mx + std::log(acc.value());
}

}  // namespace

const char* cardinal_name(Cardinal c) {
    switch (c) {
        case Cardinal::PlusX: return "+X";
        case Cardinal::MinusX: return "-X";
        case Cardinal::PlusY: return "+Y";
        case Cardinal::MinusY: return "-Y";
        case Cardinal::PlusZ: return "+Z";
        case Cardinal::MinusZ: return "-Z";
    }
    return "?";
}

SymmetricState SymmetricState::from_amplitudes(
    int n_qubits, std::vector<LogComplex> amplitudes, double norm_tolerance) {
    require_even_positive(n_qubits);
    if (static_cast<int>(amplitudes.size()) != n_qubits + 1)
        throw std::invalid_argument("expected " + std::to_string(n_qubits + 1) +
                                    " amplitudes, got " +
                                    std::to_string(amplitudes.size()));
    double ln2 = log_norm_squared(amplitudes);
    if (std::isinf(ln2))
        throw std::invalid_argument("zero amplitude vector");
    if (std::abs(std::expm1(ln2)) > norm_tolerance)
        throw std::invalid_argument("norm defect " +
                                    std::to_string(std::abs(std::expm1(ln2))) +
                                    " exceeds tolerance");
    for (auto& a : amplitudes)
        if (!a.is_zero()) a.log_mag -= 0.5 * ln2;
    SymmetricState s(n_qubits, std::move(amplitudes));
    s.canonicalize();
    return s;
}

void SymmetricState::canonicalize() {
    int imax = 0;
    for (int k = 1; k < dim(); ++k)
        if (amps_[k].log_mag > amps_[imax].log_mag) imax = k;
    double ph = amps_[imax].phase;
    if (ph == 0.0) return;
    for (auto& a : amps_)
        if (!a.is_zero()) a.phase = wrap_phase(a.phase - ph);
}

SymmetricState SymmetricState::coherent(int n_qubits, double theta,
                                        double phi) {
    require_even_positive(n_qubits);
    const int n = n_qubits;
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    std::vector<LogComplex> amps(n + 1);
    if (std::abs(s) < 1e-300) {          // theta = 0 pole: |J,-J>
        amps[0] = LogComplex::one();
    } else if (std::abs(c) < 1e-300) {   // theta = pi pole: |J,+J>
        amps[n] = LogComplex::one();
    } else {
        double lc = std::log(std::abs(c)), ls = std::log(std::abs(s));
        double pc = c < 0 ? M_PI : 0.0, ps = s < 0 ? M_PI : 0.0;
        for (int k = 0; k <= n; ++k) {
            double lm = 0.5 * log_binomial(n, k) + (n - k) * lc + k * ls;
            double ph = (n - k) * pc + k * (ps - phi);
            amps[k] = LogComplex::from_polar_log(lm, ph);
        }
    }
    SymmetricState st(n, std::move(amps));
    st.canonicalize();
    return st;
}

SymmetricState SymmetricState::dicke(int n_qubits, int m) {
    require_even_positive(n_qubits);
    int j = n_qubits / 2;
    if (m < -j || m > j)
        throw std::invalid_argument("Dicke m out of range");
    std::vector<LogComplex> amps(n_qubits + 1);
    amps[m + j] = LogComplex::one();
    return SymmetricState(n_qubits, std::move(amps));
}

SymmetricState SymmetricState::cardinal(int n_qubits, Cardinal c) {
    require_even_positive(n_qubits);
    const int n = n_qubits;
    const int j = n / 2;
    std::vector<LogComplex> amps(n + 1);
    auto equatorial = [&](double phase_per_k, double base) {
        for (int k = 0; k <= n; ++k)
            amps[k] = LogComplex::from_polar_log(
                0.5 * log_binomial(n, k) - 0.5 * n * M_LN2,
                base + phase_per_k * k);
    };
    switch (c) {
        case Cardinal::PlusZ: amps[n] = LogComplex::one(); break;
        case Cardinal::MinusZ: amps[0] = LogComplex::one(); break;
        case Cardinal::PlusX: equatorial(0.0, 0.0); break;
        case Cardinal::MinusX:
            // R_z(pi)|+X>: phase e^{-i pi (k - j)}
            for (int k = 0; k <= n; ++k)
                amps[k] = LogComplex::from_polar_log(
                    0.5 * log_binomial(n, k) - 0.5 * n * M_LN2,
                    ((k - j) % 2 == 0) ? 0.0 : M_PI);
            break;
        case Cardinal::PlusY:
            // R_x(-pi/2)|+Z>: amplitude i^{n-k}
            equatorial(-M_PI_2, n * M_PI_2);
            break;
        case Cardinal::MinusY:
            // R_z(pi)|+Y>: extra e^{-i pi (k - j)}
            for (int k = 0; k <= n; ++k)
                amps[k] = LogComplex::from_polar_log(
                    0.5 * log_binomial(n, k) - 0.5 * n * M_LN2,
                    (n - k) * M_PI_2 + ((k - j) % 2 == 0 ? 0.0 : M_PI));
            break;
    }
    SymmetricState st(n, std::move(amps));
    st.canonicalize();
    return st;
}

double SymmetricState::norm_defect() const {
    return std::abs(std::expm1(log_norm_squared(amps_)));
}

std::vector<Complex> SymmetricState::to_vector() const {
    std::vector<Complex> v(amps_.size());
    for (size_t k = 0; k < amps_.size(); ++k) v[k] = amps_[k].to_complex();
    return v;
}

SymmetricState SymmetricState::from_vector(int n_qubits,
                                           const std::vector<Complex>& v) {
    require_even_positive(n_qubits);
    if (static_cast<int>(v.size()) != n_qubits + 1)
        throw std::invalid_argument("amplitude count mismatch");
    std::vector<LogComplex> amps(v.size());
    for (size_t k = 0; k < v.size(); ++k)
        amps[k] = LogComplex::from_cartesian(v[k]);
    return SymmetricState(n_qubits, std::move(amps));
}

SymmetricState SymmetricState::with_amplitudes_unit(
    std::vector<LogComplex> amps) const {
    if (amps.size() != amps_.size())
        throw std::invalid_argument("amplitude count mismatch");
    return SymmetricState(n_, std::move(amps));
}

LogComplex overlap(const SymmetricState& bra, const SymmetricState& ket) {
    if (bra.n_qubits() != ket.n_qubits())
        throw std::invalid_argument("overlap of states with different n");
    std::vector<LogComplex> terms(bra.dim());
    for (int k = 0; k < bra.dim(); ++k)
        terms[k] = bra.amplitude(k).conj() * ket.amplitude(k);
    return log_sum(terms);
}

const LogComplex& OverlapSextet::get(Cardinal c) const {
    switch (c) {
        case Cardinal::PlusX: return a_plus_x;
        case Cardinal::MinusX: return a_minus_x;
        case Cardinal::PlusY: return a_plus_y;
        case Cardinal::MinusY: return a_minus_y;
        case Cardinal::PlusZ: return a_plus_z;
        case Cardinal::MinusZ: return a_minus_z;
    }
    return a_plus_x;
}

OverlapSextet overlap_sextet(const SymmetricState& state) {
    const int n = state.n_qubits();
    OverlapSextet s;
    s.a_plus_x = overlap(SymmetricState::cardinal(n, Cardinal::PlusX), state);
    s.a_minus_x = overlap(SymmetricState::cardinal(n, Cardinal::MinusX), state);
    s.a_plus_y = overlap(SymmetricState::cardinal(n, Cardinal::PlusY), state);
    s.a_minus_y = overlap(SymmetricState::cardinal(n, Cardinal::MinusY), state);
    // +/-Z projections are single amplitudes.
    s.a_plus_z = state.amplitude(n);
    s.a_minus_z = state.amplitude(0);
    return s;
}

double fidelity(const SymmetricState& a, const SymmetricState& b) {
    LogComplex ov = overlap(a, b);
    if (ov.is_zero()) return 0.0;
    return std::exp(ov.abs2_log());
}

}  // namespace spinmagic
