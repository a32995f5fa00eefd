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

#include "spinmagic/coherent_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinmagic/parallel.hpp"

namespace spinmagic {

ElementaryCoefficients elementary_coefficients(double theta_i, double phi_i,
                                               double theta_j, double phi_j) {
    const double ps = 0.5 * (phi_i + phi_j), pd = 0.5 * (phi_i - phi_j);
    const double ts = 0.5 * (theta_i + theta_j), td = 0.5 * (theta_i - theta_j);
    ElementaryCoefficients c;
    c.alpha = {std::cos(ps) * std::sin(ts), -std::sin(ps) * std::sin(td)};
    c.beta = {std::sin(ps) * std::sin(ts), std::cos(ps) * std::sin(td)};
    c.gamma = {std::cos(pd) * std::cos(ts), std::sin(pd) * std::cos(td)};
    c.kappa = {std::cos(pd) * std::cos(td), std::sin(pd) * std::cos(ts)};
    return c;
}

CoherentAngles cardinal_angles(Cardinal c) {
    switch (c) {
        case Cardinal::PlusX: return {M_PI_2, 0.0};
        case Cardinal::MinusX: return {M_PI_2, M_PI};
        case Cardinal::PlusY: return {M_PI_2, M_PI_2};
        case Cardinal::MinusY: return {M_PI_2, -M_PI_2};
        case Cardinal::PlusZ: return {0.0, 0.0};
        case Cardinal::MinusZ: return {M_PI, 0.0};
    }
    return {0.0, 0.0};
}

namespace {

void require_class(int n_qubits, const PauliClass& cls) {
    if (cls.n_x < 0 || cls.n_y < 0 || cls.n_z < 0 || cls.n_i < 0 ||
        cls.total() != n_qubits)
        throw std::invalid_argument("Pauli class does not sum to n_qubits");
}

LogComplex log_pow(Complex base, int p) {
    if (p == 0) return LogComplex::one();
    return LogComplex::from_cartesian(base).pow_int(p);
}

// Quarter-turn integers for the cardinal angles, for exact table entries.
struct QuarterAngles {
    int theta_q;  // theta in units of pi/2
    int phi_q;
};

QuarterAngles quarter_angles(Cardinal c) {
    switch (c) {
        case Cardinal::PlusX: return {1, 0};
        case Cardinal::MinusX: return {1, 2};
        case Cardinal::PlusY: return {1, 1};
        case Cardinal::MinusY: return {1, -1};
        case Cardinal::PlusZ: return {0, 0};
        case Cardinal::MinusZ: return {2, 0};
    }
    return {0, 0};
}

// cos and sin of q * (pi/2), exact.
int icos(int q) {
    q = ((q % 4) + 4) % 4;
    return q == 0 ? 1 : (q == 2 ? -1 : 0);
}
int isin(int q) { return icos(q - 1); }

ElementaryCoefficients exact_cardinal_coefficients(Cardinal bra, Cardinal ket) {
    QuarterAngles i = quarter_angles(bra), j = quarter_angles(ket);
    // Half-angle sums/differences of quarter turns are again quarter turns
    // for every diagonal and antipodal cardinal pair.
    int ps2 = i.phi_q + j.phi_q;  // (phi_i + phi_j) in units of pi/2: halves
    int pd2 = i.phi_q - j.phi_q;
    int ts2 = i.theta_q + j.theta_q;
    int td2 = i.theta_q - j.theta_q;
    if (ps2 % 2 || pd2 % 2 || ts2 % 2 || td2 % 2)
        throw std::logic_error("cardinal pair is not quarter-turn aligned");
    int ps = ps2 / 2, pd = pd2 / 2, ts = ts2 / 2, td = td2 / 2;
    ElementaryCoefficients c;
    c.alpha = {double(icos(ps) * isin(ts)), double(-isin(ps) * isin(td))};
    c.beta = {double(isin(ps) * isin(ts)), double(icos(ps) * isin(td))};
    c.gamma = {double(icos(pd) * icos(ts)), double(isin(pd) * icos(td))};
    c.kappa = {double(icos(pd) * icos(td)), double(isin(pd) * icos(ts))};
    return c;
}

Complex exact_pow(Complex unit_or_zero, int p) {
    if (p == 0) return {1.0, 0.0};
    if (unit_or_zero == Complex(0.0, 0.0)) return {0.0, 0.0};
    // value is a fourth root of unity; reduce the power mod 4
    Complex out{1.0, 0.0};
    for (int k = 0; k < ((p % 4) + 4) % 4; ++k) out *= unit_or_zero;
    return out;
}

}  // namespace

LogComplex coherent_matrix_element(int n_qubits, CoherentAngles bra,
                                   CoherentAngles ket, const PauliClass& cls) {
    require_class(n_qubits, cls);
    ElementaryCoefficients c =
        elementary_coefficients(bra.theta, bra.phi, ket.theta, ket.phi);
    return log_pow(c.alpha, cls.n_x) * log_pow(c.beta, cls.n_y) *
           log_pow(c.gamma, cls.n_z) * log_pow(c.kappa, cls.n_i);
}

std::array<CardinalTableEntry, 12> cardinal_table(int n_qubits,
                                                  const PauliClass& cls) {
    require_class(n_qubits, cls);
    constexpr Cardinal plus[3] = {Cardinal::PlusX, Cardinal::PlusY,
                                  Cardinal::PlusZ};
    constexpr Cardinal minus[3] = {Cardinal::MinusX, Cardinal::MinusY,
                                   Cardinal::MinusZ};
    std::array<CardinalTableEntry, 12> out;
    int idx = 0;
    auto entry = [&](Cardinal b, Cardinal k) {
        ElementaryCoefficients c = exact_cardinal_coefficients(b, k);
        Complex v = exact_pow(c.alpha, cls.n_x) * exact_pow(c.beta, cls.n_y) *
                    exact_pow(c.gamma, cls.n_z) * exact_pow(c.kappa, cls.n_i);
        out[idx++] = {b, k, v};
    };
    for (int a = 0; a < 3; ++a) {
        entry(plus[a], plus[a]);
        entry(minus[a], minus[a]);
        entry(plus[a], minus[a]);
        entry(minus[a], plus[a]);
    }
    return out;
}

CoherentSuperposition::CoherentSuperposition(int n_qubits,
                                             std::vector<Component> components)
    : n_(n_qubits), comps_(std::move(components)) {
    if (n_ < 2 || n_ % 2 != 0)
        throw std::invalid_argument("even positive qubit count required");
    if (comps_.empty() || comps_.size() > 64)
        throw std::invalid_argument("between 1 and 64 components supported");
}

double CoherentSuperposition::norm_defect() const {
    // <psi|psi> = sum_ij conj(w_i) w_j kappa_ij^N (kappa^N is the
    // coherent overlap <i|j>).
    std::vector<LogComplex> terms;
    terms.reserve(comps_.size() * comps_.size());
    for (const auto& a : comps_)
        for (const auto& b : comps_) {
            ElementaryCoefficients c =
                elementary_coefficients(a.theta, a.phi, b.theta, b.phi);
            terms.push_back(a.weight.conj() * b.weight *
                            log_pow(c.kappa, n_));
        }
    LogComplex g = log_sum(terms);
    if (g.is_zero()) return 1.0;
    return std::abs(g.to_complex() - 1.0);
}

CoherentSuperposition CoherentSuperposition::normalized() const {
    std::vector<LogComplex> terms;
    for (const auto& a : comps_)
        for (const auto& b : comps_) {
            ElementaryCoefficients c =
                elementary_coefficients(a.theta, a.phi, b.theta, b.phi);
            terms.push_back(a.weight.conj() * b.weight * log_pow(c.kappa, n_));
        }
    LogComplex g = log_sum(terms);
    if (g.is_zero())
        throw std::invalid_argument("superposition has zero norm");
    std::vector<Component> comps = comps_;
    for (auto& cp : comps)
        cp.weight = cp.weight.scaled(-0.5 * g.log_mag);
    return CoherentSuperposition(n_, std::move(comps));
}

SymmetricState CoherentSuperposition::to_state() const {
    const int n = n_;
    std::vector<LogComplex> amps(n + 1);
    std::vector<LogComplex> terms(comps_.size());
    auto lbin = [n](int k) {
        return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
               std::lgamma(n - k + 1.0);
    };
    for (int k = 0; k <= n; ++k) {
        for (size_t c = 0; c < comps_.size(); ++c) {
            const auto& cp = comps_[c];
            // rotation parametrization: c_k = sqrt(C(N,k)) cos^k(theta/2)
            //   sin^{N-k}(theta/2) e^{-i phi (k - J)}
            double ch = std::cos(cp.theta / 2), sh = std::sin(cp.theta / 2);
            LogComplex amp;
            if (std::abs(ch) < 1e-300) {
                amp = (k == 0) ? LogComplex::one() : LogComplex::zero();
            } else if (std::abs(sh) < 1e-300) {
                amp = (k == n) ? LogComplex::one() : LogComplex::zero();
            } else {
                double lm = 0.5 * lbin(k) + k * std::log(std::abs(ch)) +
                            (n - k) * std::log(std::abs(sh));
                double ph = (ch < 0 ? k * M_PI : 0.0) +
                            (sh < 0 ? (n - k) * M_PI : 0.0) -
                            cp.phi * (k - 0.5 * n);
                amp = LogComplex::from_polar_log(lm, ph);
            }
            terms[c] = cp.weight * amp;
        }
        amps[k] = log_sum(terms);
    }
    return SymmetricState::from_amplitudes(n, std::move(amps), 1e-6);
}

double sre_exact_coherent(const CoherentSuperposition& sup, double q) {
    double two_q = 2.0 * q;
    long long p = std::llround(two_q);
    if (q <= 0.0 || q == 1.0 || std::abs(two_q - p) > 1e-12 || p % 2 != 0)
        throw std::invalid_argument(
            "exact SRE paths require q > 0, q != 1, with 2q an even integer");
    if (sup.norm_defect() > 1e-6)
        throw std::invalid_argument("superposition is not normalized");

    const int n = sup.n_qubits();
    const auto& comps = sup.components();
    const int nc = static_cast<int>(comps.size());
    const int np = nc * nc;

    // Per-pair log magnitudes and phases of w_i* w_j and the four
    // elementary coefficients.
    std::vector<double> lw(np), pw(np);
    std::vector<std::array<double, 4>> lcoef(np), pcoef(np);
    double lmax[4] = {-1e300, -1e300, -1e300, -1e300};
    double lwmax = -1e300;
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
            int ij = i * nc + j;
            LogComplex w = comps[i].weight.conj() * comps[j].weight;
            lw[ij] = w.log_mag;
            pw[ij] = w.phase;
            ElementaryCoefficients c = elementary_coefficients(
                comps[i].theta, comps[i].phi, comps[j].theta, comps[j].phi);
            const Complex cc[4] = {c.alpha, c.beta, c.gamma, c.kappa};
            for (int a = 0; a < 4; ++a) {
                double m = std::abs(cc[a]);
                lcoef[ij][a] = m > 0 ? std::log(m) : -1e300;
                pcoef[ij][a] = m > 0 ? std::arg(cc[a]) : 0.0;
                lmax[a] = std::max(lmax[a], lcoef[ij][a]);
            }
            lwmax = std::max(lwmax, lw[ij]);
        }

    // Flattened class enumeration: rows are (n_x, n_y) with n_z inner.
    struct Row {
        int nx, ny;
        std::int64_t begin;
    };
    std::vector<Row> rows;
    std::int64_t total = 0;
    for (int nx = 0; nx <= n; ++nx)
        for (int ny = 0; ny <= n - nx; ++ny) {
            rows.push_back({nx, ny, total});
            total += n - nx - ny + 1;
        }

    std::vector<double> lfact(n + 1);
    for (int k = 0; k <= n; ++k) lfact[k] = std::lgamma(k + 1.0);
    const double lmult0 = lfact[n];

    // Any class whose term bound falls this far below the guaranteed
    // identity-class contribution (2^-N) cannot move the sum.
    const double cutoff =
        -n * M_LN2 + std::log(1e-18) - std::log(double(total));

    const int threads = default_thread_count();
    const int chunks = chunk_count(static_cast<std::int64_t>(rows.size()));
    struct Partial {
        double mx = -std::numeric_limits<double>::infinity();
        double sum = 0.0;  // sum of exp(term - mx)
        double imag_residue = 0.0;
    };
    std::vector<Partial> parts(chunks);

    parallel_for_chunks(
        static_cast<std::int64_t>(rows.size()), threads,
        [&](int chunk, std::int64_t rb, std::int64_t re) {
            Partial& P = parts[chunk];
            std::vector<double> lpair(np), ppair(np);
            for (std::int64_t r = rb; r < re; ++r) {
                const int nx = rows[r].nx, ny = rows[r].ny;
                const int rest = n - nx - ny;
                for (int ij = 0; ij < np; ++ij) {
                    lpair[ij] = lw[ij] + nx * lcoef[ij][0] + ny * lcoef[ij][1];
                    ppair[ij] = pw[ij] + nx * pcoef[ij][0] + ny * pcoef[ij][1];
                }
                double lm_xy = lmult0 - lfact[nx] - lfact[ny];
                for (int nz = 0; nz <= rest; ++nz) {
                    const int ni = rest - nz;
                    double lmult = lm_xy - lfact[nz] - lfact[ni];
                    double bound = lwmax + std::log(double(np)) +
                                   nx * lmax[0] + ny * lmax[1] +
                                   nz * lmax[2] + ni * lmax[3];
                    double tbound = lmult + two_q * bound - n * M_LN2;
                    if (tbound < cutoff) continue;
                    Complex acc{0.0, 0.0};
                    for (int ij = 0; ij < np; ++ij) {
                        double L = lpair[ij] + nz * lcoef[ij][2] +
                                   ni * lcoef[ij][3];
                        if (L < -700.0) continue;
                        acc += std::polar(std::exp(L),
                                          ppair[ij] + nz * pcoef[ij][2] +
                                              ni * pcoef[ij][3]);
                    }
                    P.imag_residue =
                        std::max(P.imag_residue, std::abs(acc.imag()));
                    double mag = std::abs(acc.real());
                    if (mag == 0.0) continue;
                    double term = lmult + two_q * std::log(mag) - n * M_LN2;
                    if (term > P.mx) {
                        P.sum = P.sum * std::exp(P.mx - term) + 1.0;
                        P.mx = term;
                    } else {
                        P.sum += std::exp(term - P.mx);
                    }
                }
            }
        });

    double mx = -std::numeric_limits<double>::infinity();
    double residue = 0.0;
    for (const auto& P : parts) {
        mx = std::max(mx, P.mx);
        residue = std::max(residue, P.imag_residue);
    }
    if (residue > 1e-8)
        throw std::runtime_error(
            "class expectation imaginary residue exceeded 1e-8");
    double sum = 0.0;
    for (const auto& P : parts)
        if (!std::isinf(P.mx)) sum += P.sum * std::exp(P.mx - mx);
    double log2_sum = (mx + std::log(sum)) / M_LN2;
    return log2_sum / (1.0 - q);
}

}  // namespace spinmagic
