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

#include "spinmagic/husimi.hpp"

#include <cmath>
#include <stdexcept>

#include "spinmagic/parallel.hpp"

namespace spinmagic {

double HusimiGrid::identity_quadrature(int n_qubits) const {
    const size_t P = thetas.size(), Q = phis.size();
    // trapezoid in both directions with the sin(theta) area element
    double dth = thetas[1] - thetas[0];
    double dph = phis[1] - phis[0];
    double total = 0.0;
    for (size_t it = 0; it < P; ++it) {
        double wt = (it == 0 || it + 1 == P) ? 0.5 : 1.0;
        double row = 0.0;
        for (size_t ip = 0; ip < Q; ++ip) {
            double wp = (ip == 0 || ip + 1 == Q) ? 0.5 : 1.0;
            row += wp * raw[it * Q + ip];
        }
        total += wt * row * std::sin(thetas[it]);
    }
    total *= dth * dph;
    return total * (n_qubits + 1.0) / (4.0 * M_PI);
}

HusimiGrid husimi(const SymmetricState& state, int p_theta, int q_phi) {
    if (p_theta < 2 || q_phi < 2)
        throw std::invalid_argument("grid sizes must be >= 2");
    const int n = state.n_qubits();
    HusimiGrid g;
    g.thetas.resize(p_theta);
    g.phis.resize(q_phi);
    for (int i = 0; i < p_theta; ++i)
        g.thetas[i] = M_PI * i / (p_theta - 1);
    for (int i = 0; i < q_phi; ++i)
        g.phis[i] = 2.0 * M_PI * i / (q_phi - 1);
    g.raw.assign(size_t(p_theta) * q_phi, 0.0);

    parallel_for_chunks(
        p_theta, default_thread_count(),
        [&](int, std::int64_t b, std::int64_t e) {
            for (std::int64_t it = b; it < e; ++it) {
                SymmetricState probe =
                    SymmetricState::coherent(n, g.thetas[it], 0.0);
                // overlap against phi-rotated probes: the phi rotation adds
                // e^{-i phi k} to the probe, so fold it into the sum.
                for (int ip = 0; ip < q_phi; ++ip) {
                    std::vector<LogComplex> terms(n + 1);
                    for (int k = 0; k <= n; ++k) {
                        LogComplex t =
                            probe.amplitude(k).conj() * state.amplitude(k);
                        if (!t.is_zero())
                            t.phase = wrap_phase(t.phase + g.phis[ip] * k);
                        terms[k] = t;
                    }
                    LogComplex ov = log_sum(terms);
                    g.raw[size_t(it) * q_phi + ip] =
                        ov.is_zero() ? 0.0 : std::exp(ov.abs2_log());
                }
            }
        });

    double mx = 0.0;
    for (double v : g.raw) mx = std::max(mx, v);
    g.values = g.raw;
    if (mx > 0.0)
        for (double& v : g.values) v /= mx;
    return g;
}

}  // namespace spinmagic
