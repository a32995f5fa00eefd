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

#include "spinmagic/protocols.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "spinmagic/magic_metrics.hpp"

namespace spinmagic {

SymmetricState evolve_oat(const SymmetricState& state, double chi_t) {
    const double j = 0.5 * state.n_qubits();
    std::vector<LogComplex> amps = state.amplitudes();
    for (int k = 0; k < state.dim(); ++k) {
        if (amps[k].is_zero()) continue;
        double m = k - j;
        amps[k].phase = wrap_phase(amps[k].phase - chi_t * m * m);
    }
    return state.with_amplitudes_unit(std::move(amps));
}

SymmetricState evolve_tact(const SymmetricState& state, double chi_t) {
    return apply_exponential(tact_generator(state.n_qubits()), chi_t, state);
}

SymmetricState plus_x_state(int n_qubits) {
    return SymmetricState::cardinal(n_qubits, Cardinal::PlusX);
}

SymmetricState ghz_x(int n_qubits, double theta) {
    SymmetricState px = SymmetricState::cardinal(n_qubits, Cardinal::PlusX);
    SymmetricState mx = SymmetricState::cardinal(n_qubits, Cardinal::MinusX);
    std::vector<LogComplex> amps(n_qubits + 1);
    const double half = -0.5 * M_LN2;
    for (int k = 0; k <= n_qubits; ++k) {
        LogComplex terms[2] = {
            px.amplitude(k).scaled(half),
            (mx.amplitude(k) * LogComplex::from_polar_log(0.0, theta))
                .scaled(half)};
        amps[k] = log_sum(std::span<const LogComplex>(terms, 2));
    }
    // The branch phase is physical here (the kitten assembly sums these),
    // so bypass the canonicalizing constructor. The branches are exactly
    // orthogonal; the norm is already 1.
    return px.with_amplitudes_unit(std::move(amps));
}

SymmetricState kitten_state(int n_qubits, int n_heads) {
    if (n_heads < 2 || n_heads % 2 != 0)
        throw std::invalid_argument("kitten head count must be even and >= 2");
    const int n = n_qubits, nh = n_heads;
    const double j = 0.5 * n;
    // sqrt(2/n_h) e^{-i pi/4} sum_s e^{i pi s^2/n_h} U_z(phi_s)|GHZ_x(theta_s)>
    std::vector<std::vector<LogComplex>> pieces;
    pieces.reserve(nh / 2);
    for (int s = 0; s < nh / 2; ++s) {
        double phi_s = 2.0 * M_PI * s / nh;
        double theta_s = std::fmod(M_PI * s + M_PI * nh / 4.0, 2.0 * M_PI);
        SymmetricState g = ghz_x(n, theta_s);
        std::vector<LogComplex> amp(n + 1);
        LogComplex pref = LogComplex::from_polar_log(
            0.5 * (std::log(2.0) - std::log(double(nh))),
            M_PI * s * s / nh - M_PI_4);
        for (int k = 0; k <= n; ++k) {
            LogComplex a = g.amplitude(k) * pref;
            if (!a.is_zero())
                a.phase = wrap_phase(a.phase - phi_s * (k - j));  // U_z(phi_s)
            amp[k] = a;
        }
        pieces.push_back(std::move(amp));
    }
    std::vector<LogComplex> amps(n + 1);
    std::vector<LogComplex> terms(pieces.size());
    for (int k = 0; k <= n; ++k) {
        for (size_t s = 0; s < pieces.size(); ++s) terms[s] = pieces[s][k];
        amps[k] = log_sum(terms);
    }
    // Eq.-level construction is normalized; keep its exact amplitudes.
    SymmetricState ref = plus_x_state(n);
    SymmetricState out = ref.with_amplitudes_unit(std::move(amps));
    if (out.norm_defect() > 1e-9)
        throw std::runtime_error("kitten assembly lost normalization");
    return out;
}

CoherentSuperposition kitten_superposition(int n_qubits, int n_heads) {
    if (n_heads < 2 || n_heads % 2 != 0)
        throw std::invalid_argument("kitten head count must be even and >= 2");
    std::vector<CoherentSuperposition::Component> comps;
    comps.reserve(n_heads);
    for (int s = 0; s < n_heads; ++s) {
        comps.push_back({LogComplex::from_polar_log(
                             -0.5 * std::log(double(n_heads)),
                             M_PI * s * s / n_heads - M_PI_4),
                         M_PI_2, 2.0 * M_PI * s / n_heads});
    }
    return CoherentSuperposition(n_qubits, std::move(comps));
}

CoherentSuperposition generalized_ghz(int n_qubits, double two_epsilon) {
    if (two_epsilon < 0.0 || two_epsilon > M_PI)
        throw std::invalid_argument("2*epsilon must lie in [0, pi]");
    const double eps = 0.5 * two_epsilon;
    // K = 2 (1 + cos^{2J} eps); log1p keeps K exact near the poles.
    double logk =
        M_LN2 + std::log1p(std::exp(n_qubits * std::log(std::cos(eps))));
    LogComplex w = LogComplex::from_polar_log(-0.5 * logk, 0.0);
    std::vector<CoherentSuperposition::Component> comps = {
        {w, 0.0, 0.0}, {w, two_epsilon, 0.0}};
    return CoherentSuperposition(n_qubits, std::move(comps));
}

SymmetricState dicke_state(int n_qubits, int m) {
    return SymmetricState::dicke(n_qubits, m);
}

namespace {

SqueezingOptimum minimize_xi2(int n_qubits, double t_guess,
                              const std::function<double(double)>& xi2_at) {
    const int grid_points = 240;
    const double t_hi = 4.0 * t_guess;
    double best_t = 0.0, best_v = std::numeric_limits<double>::infinity();
    int best_i = 0;
    std::vector<double> ts(grid_points), vs(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        ts[i] = t_hi * (i + 1) / grid_points;
        vs[i] = xi2_at(ts[i]);
        if (vs[i] < best_v) {
            best_v = vs[i];
            best_t = ts[i];
            best_i = i;
        }
    }
    double lo = best_i > 0 ? ts[best_i - 1] : 0.5 * ts[0];
    double hi = best_i + 1 < grid_points ? ts[best_i + 1] : t_hi;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = xi2_at(c), fd = xi2_at(d);
    while (b - a > 1e-6 * best_t) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = xi2_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = xi2_at(d);
        }
    }
    double t = 0.5 * (a + b);
    return {t, xi2_at(t)};
}

}  // namespace

SqueezingOptimum find_best_squeezing(int n_qubits, TwistProtocol protocol) {
    if (n_qubits < 4)
        throw std::invalid_argument("best-squeezing search requires n >= 4");
    SymmetricState x0 = plus_x_state(n_qubits);
    // Vanishing-mean-spin points inside the scan window (small n, late
    // times) count as +inf rather than aborting the search.
    auto guarded = [](auto&& f) {
        return [f](double t) {
            try {
                return f(t);
            } catch (const std::domain_error&) {
                return std::numeric_limits<double>::infinity();
            }
        };
    };
    if (protocol == TwistProtocol::OAT) {
        double guess = std::pow(3.0, 1.0 / 6.0) *
                       std::pow(double(n_qubits), -2.0 / 3.0);
        return minimize_xi2(n_qubits, guess, guarded([&](double t) {
            return squeezing_parameter(evolve_oat(x0, t));
        }));
    }
    double guess = std::log(2.0 * n_qubits) / (2.0 * n_qubits);
    SpectralDecomposition spec = spectral(tact_generator(n_qubits));
    return minimize_xi2(n_qubits, guess, guarded([&](double t) {
        return squeezing_parameter(apply_exponential(spec, t, x0));
    }));
}

}  // namespace spinmagic
