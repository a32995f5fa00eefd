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

#include "spinmagic/collective.hpp"

#include <cmath>
#include <stdexcept>

#include <lapacke.h>

namespace spinmagic {

bool TridiagonalOperator::is_diagonal() const {
    for (const auto& s : super)
        if (s != Complex(0.0, 0.0)) return false;
    return true;
}

TridiagonalOperator collective_generator(int n_qubits, double cx, double cy,
                                         double cz) {
    if (n_qubits < 2 || n_qubits % 2 != 0)
        throw std::invalid_argument("even positive qubit count required");
    if (cx == 0.0 && cy == 0.0 && cz == 0.0)
        throw std::invalid_argument("zero generator direction");
    const double j = 0.5 * n_qubits;
    TridiagonalOperator op;
    op.diag.resize(n_qubits + 1);
    op.super.resize(n_qubits);
    for (int k = 0; k <= n_qubits; ++k) op.diag[k] = cz * (k - j);
    for (int k = 0; k < n_qubits; ++k) {
        double m = k - j;
        double ladder = std::sqrt((j - m) * (j + m + 1.0));
        // element <k+1| G |k>
        op.super[k] = 0.5 * Complex(cx, -cy) * ladder;
    }
    return op;
}

TridiagonalOperator tact_generator(int n_qubits) {
    if (n_qubits < 2 || n_qubits % 2 != 0)
        throw std::invalid_argument("even positive qubit count required");
    const double j = 0.5 * n_qubits;
    TridiagonalOperator op;
    op.diag.assign(n_qubits + 1, 0.0);
    op.super.resize(n_qubits);
    for (int k = 0; k < n_qubits; ++k) {
        double m = k - j;
        double ladder = std::sqrt((j - m) * (j + m + 1.0));
        // <k+1| J_z J_y + J_y J_z |k> = -(i/2)(2m+1) sqrt((J-m)(J+m+1))
        op.super[k] = Complex(0.0, -0.5 * (2.0 * m + 1.0)) * ladder;
    }
    return op;
}

SpectralDecomposition spectral(const TridiagonalOperator& op) {
    const int d = op.dim();
    Eigen::VectorXd diag(d), sub(std::max(0, d - 1));
    std::vector<Complex> gauge(d);
    gauge[0] = 1.0;
    for (int k = 0; k < d; ++k) diag[k] = op.diag[k];
    for (int k = 0; k + 1 < d; ++k) {
        double r = std::abs(op.super[k]);
        sub[k] = r;
        Complex ph = r > 0.0 ? op.super[k] / r : Complex(1.0, 0.0);
        gauge[k + 1] = gauge[k] * ph;
    }
    // implicit-shift QR on the gauged real symmetric tridiagonal problem
    Eigen::MatrixXd vec = Eigen::MatrixXd::Identity(d, d);
    lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', d, diag.data(),
                                    d > 1 ? sub.data() : nullptr, vec.data(),
                                    d);
    if (info != 0)
        throw std::runtime_error("tridiagonal eigensolver failed");
    SpectralDecomposition out;
    out.values = diag;
    out.vectors = vec.cast<Complex>();
    for (int k = 0; k < d; ++k) out.vectors.row(k) *= gauge[k];
    return out;
}

SymmetricState apply_exponential(const TridiagonalOperator& generator,
                                 double angle, const SymmetricState& state) {
    if (generator.dim() != state.dim())
        throw std::invalid_argument("generator dimension mismatch");
    if (generator.is_diagonal()) {
        // exact in the log domain
        std::vector<LogComplex> amps = state.amplitudes();
        for (int k = 0; k < state.dim(); ++k) {
            if (amps[k].is_zero()) continue;
            amps[k].phase = wrap_phase(amps[k].phase - angle * generator.diag[k]);
        }
        return state.with_amplitudes_unit(std::move(amps));
    }
    return apply_exponential(spectral(generator), angle, state);
}

SymmetricState apply_exponential(const SpectralDecomposition& spec,
                                 double angle, const SymmetricState& state) {
    if (spec.values.size() != state.dim())
        throw std::invalid_argument("generator dimension mismatch");
    const int d = state.dim();
    std::vector<Complex> v = state.to_vector();
    Eigen::Map<Eigen::VectorXcd> vv(v.data(), d);
    Eigen::VectorXcd coeff = spec.vectors.adjoint() * vv;
    for (int k = 0; k < d; ++k)
        coeff[k] *= std::polar(1.0, -angle * spec.values[k]);
    Eigen::VectorXcd out = spec.vectors * coeff;
    std::vector<Complex> res(out.data(), out.data() + d);
    return SymmetricState::from_vector(state.n_qubits(), res);
}

namespace {

std::vector<Complex> tridiag_apply(const TridiagonalOperator& g,
                                   const std::vector<Complex>& v) {
    const int d = g.dim();
    std::vector<Complex> w(d);
    for (int k = 0; k < d; ++k) {
        Complex acc = g.diag[k] * v[k];
        if (k + 1 < d) acc += std::conj(g.super[k]) * v[k + 1];
        if (k > 0) acc += g.super[k - 1] * v[k - 1];
        w[k] = acc;
    }
    return w;
}

Complex dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    DoubleDoubleComplex acc;
    for (size_t k = 0; k < a.size(); ++k) acc.add(std::conj(a[k]) * b[k]);
    return acc.value();
}

}  // namespace

Moments moments(const SymmetricState& state, const TridiagonalOperator& g) {
    if (g.dim() != state.dim())
        throw std::invalid_argument("generator dimension mismatch");
    std::vector<Complex> v = state.to_vector();
    std::vector<Complex> w = tridiag_apply(g, v);
    double mean = dot(v, w).real();
    double second = dot(w, w).real();
    double var = second - mean * mean;
    if (var < -1e-12 * std::max(1.0, second))
        throw std::runtime_error("variance fell below tolerance");
    return {mean, std::max(var, 0.0)};
}

double cross_covariance(const SymmetricState& state,
                        const TridiagonalOperator& g1,
                        const TridiagonalOperator& g2) {
    if (g1.dim() != state.dim() || g2.dim() != state.dim())
        throw std::invalid_argument("generator dimension mismatch");
    std::vector<Complex> v = state.to_vector();
    std::vector<Complex> w1 = tridiag_apply(g1, v);
    std::vector<Complex> w2 = tridiag_apply(g2, v);
    double sym = dot(w1, w2).real();  // Re<G1 psi|G2 psi> = <{G1,G2}>/2
    double m1 = dot(v, w1).real();
    double m2 = dot(v, w2).real();
    return sym - m1 * m2;
}

}  // namespace spinmagic
