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

#include "spinmagic/magic_metrics.hpp"

#include <algorithm>
#include <bit>
#include <quadmath.h>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "spinmagic/collective.hpp"
#include "spinmagic/parallel.hpp"

namespace spinmagic {

namespace {

long long validated_two_q(double q) {
    double two_q = 2.0 * q;
    long long p = std::llround(two_q);
    if (q <= 0.0 || q == 1.0 || std::abs(two_q - p) > 1e-12 || p % 2 != 0)
        throw std::invalid_argument(
            "exact SRE paths require q > 0, q != 1, with 2q an even integer");
    return p;
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0);
}

}  // namespace

double sre_oracle_statevector(const SymmetricState& state, double q) {
    long long p = validated_two_q(q);
    const int n = state.n_qubits();
    if (n > 14)
        throw std::invalid_argument(
            "statevector oracle limited to n <= 14 (memory is 16 * 4^n bytes)");

    // Expand to the full 2^n register: bitstring s with k set bits gets
    // amplitude c_k / sqrt(C(n,k)).
    const std::size_t dim = std::size_t(1) << n;
    std::vector<Complex> psi(dim);
    std::vector<Complex> symm(n + 1);
    for (int k = 0; k <= n; ++k) {
        LogComplex a = state.amplitude(k);
        symm[k] = a.is_zero() ? Complex{0.0, 0.0}
                              : LogComplex::from_polar_log(
                                    a.log_mag - 0.5 * log_binomial(n, k),
                                    a.phase)
                                    .to_complex();
    }
    for (std::size_t s = 0; s < dim; ++s)
        psi[s] = symm[std::popcount(s)];

    // rho = |psi><psi| transformed qubit-by-qubit into Pauli coefficients
    // Tr(P rho). Index layout: (row << n) | col.
    std::vector<Complex> m(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            m[(r << n) | c] = psi[r] * std::conj(psi[c]);

    for (int bit = 0; bit < n; ++bit) {
        const std::size_t rmask = std::size_t(1) << (n + bit);
        const std::size_t cmask = std::size_t(1) << bit;
        for (std::size_t idx = 0; idx < dim * dim; ++idx) {
            if (idx & (rmask | cmask)) continue;
            Complex m00 = m[idx];
            Complex m01 = m[idx | cmask];
            Complex m10 = m[idx | rmask];
            Complex m11 = m[idx | rmask | cmask];
            m[idx] = m00 + m11;                              // I
            m[idx | cmask] = m01 + m10;                      // X
            m[idx | rmask] = Complex(0, 1) * (m01 - m10);    // Y
            m[idx | rmask | cmask] = m00 - m11;              // Z
        }
    }

    double mx = 0.0;  // identity string gives exactly 1
    for (const auto& v : m) mx = std::max(mx, std::abs(v.real()));
    DoubleDouble acc;
    double residue = 0.0;
    for (const auto& v : m) {
        residue = std::max(residue, std::abs(v.imag()));
        double t = std::abs(v.real()) / mx;
        if (t == 0.0) continue;
        acc.add(std::pow(t, double(p)));
    }
    if (residue > 1e-9)
        throw std::runtime_error("Pauli coefficients acquired imaginary parts");
    double log2_sum = double(p) * std::log2(mx) + std::log2(acc.value());
    return (log2_sum - n) / (1.0 - q);
}

namespace {

/// Coefficients of (1 + t)^{n_plus} (1 - t)^{n_minus} (or (t - 1), which
/// flips the overall sign for odd n_minus). Built by repeated exact
/// convolution; values are integers representable far beyond 2^53 with
/// relative error ~ degree * eps, which the 1e-10 oracle-agreement
/// budget absorbs.
void poly_one_plus(std::vector<double>& a, int n_plus) {
    a.assign(1, 1.0);
    for (int s = 0; s < n_plus; ++s) {
        a.push_back(0.0);
        for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k)
            a[k] += a[k - 1];
    }
}

/// In-place multiply by (1 - t).
void poly_mul_one_minus(std::vector<double>& a) {
    a.push_back(0.0);
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k)
        a[k] = a[k] - a[k - 1];
}

/// In-place multiply by (1 + t).
void poly_mul_one_plus(std::vector<double>& a) {
    a.push_back(0.0);
    for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) a[k] += a[k - 1];
}

struct ClassEngine {
    int n;
    std::vector<Complex> d;       // c_k / sqrt(C(n,k))
    std::vector<double> lfact;    // lgamma table
    double lmult0;

    explicit ClassEngine(const SymmetricState& state)
        : n(state.n_qubits()), d(n + 1), lfact(n + 1) {
        for (int k = 0; k <= n; ++k) {
            LogComplex a = state.amplitude(k);
            d[k] = a.is_zero()
                       ? Complex{0.0, 0.0}
                       : LogComplex::from_polar_log(
                             a.log_mag - 0.5 * log_binomial(n, k), a.phase)
                             .to_complex();
            lfact[k] = std::lgamma(k + 1.0);
        }
        lmult0 = std::lgamma(n + 1.0);
    }

    /// <psi|P_rep|psi> for the class with A, B tables supplied:
    /// A[delta] from (1+t)^{n_x} (1-t)^{n_y}, B[w] from (t-1)^{n_z}(1+t)^{n_i}.
    Complex evaluate(int nx, int ny, int nz, int ni,
                     const std::vector<double>& A,
                     const std::vector<double>& B) const {
        const int F = nx + ny;
        Complex acc{0.0, 0.0};
        for (int delta = 0; delta <= F; ++delta) {
            double a = A[delta];
            if (a == 0.0) continue;
            int lo = std::max({0, 2 * delta - F, delta});
            int hi = std::min({n, n + 2 * delta - F, delta + nz + ni});
            Complex inner{0.0, 0.0};
            for (int kp = lo; kp <= hi; ++kp) {
                double b = B[kp - delta];
                if (b == 0.0) continue;
                inner += std::conj(d[kp + F - 2 * delta]) * d[kp] * b;
            }
            acc += a * inner;
        }
        // i^{-n_y}: the Y-block contributes i^{u_y} (-i)^{n_y - u_y}
        // = (-i)^{n_y} (-1)^{u_y}, and the (-1)^{u_y} lives in A.
        switch (((ny % 4) + 4) % 4) {
            case 1: acc *= Complex(0, -1); break;
            case 2: acc *= -1.0; break;
            case 3: acc *= Complex(0, 1); break;
            default: break;
        }
        return acc;
    }

    double log_multiplicity(int nx, int ny, int nz, int ni) const {
        return lmult0 - lfact[nx] - lfact[ny] - lfact[nz] - lfact[ni];
    }
};

}  // namespace

double pauli_class_expectation(const SymmetricState& state,
                               const PauliClass& cls) {
    if (cls.n_x < 0 || cls.n_y < 0 || cls.n_z < 0 || cls.n_i < 0 ||
        cls.total() != state.n_qubits())
        throw std::invalid_argument("Pauli class does not sum to n_qubits");
    ClassEngine eng(state);
    std::vector<double> A, B;
    poly_one_plus(A, cls.n_x);
    for (int s = 0; s < cls.n_y; ++s) poly_mul_one_minus(A);
    // (t - 1)^{n_z} (1 + t)^{n_i} = (-1)^{n_z} (1 - t)^{n_z} (1 + t)^{n_i}
    poly_one_plus(B, cls.n_i);
    for (int s = 0; s < cls.n_z; ++s) poly_mul_one_minus(B);
    if (cls.n_z % 2 != 0)
        for (auto& b : B) b = -b;
    Complex v = eng.evaluate(cls.n_x, cls.n_y, cls.n_z, cls.n_i, A, B);
    if (std::abs(v.imag()) > 1e-8)
        throw std::runtime_error("class expectation not real");
    return v.real();
}

double sre_exact_symmetric(const SymmetricState& state, double q) {
    long long p = validated_two_q(q);
    const double two_q = double(p);
    const int n = state.n_qubits();
    ClassEngine eng(state);

    // Precomputed (t - 1)^{nz} bases.
    std::vector<std::vector<double>> tm1(n + 1);
    tm1[0] = {1.0};
    for (int nz = 1; nz <= n; ++nz) {
        tm1[nz] = tm1[nz - 1];
        tm1[nz].push_back(0.0);
        for (int k = static_cast<int>(tm1[nz].size()) - 1; k >= 1; --k)
            tm1[nz][k] = tm1[nz][k - 1] - tm1[nz][k];
        tm1[nz][0] = -tm1[nz][0];
    }

    struct Partial {
        double mx = -std::numeric_limits<double>::infinity();
        double sum = 0.0;
        double residue = 0.0;
    };
    const int chunks = chunk_count(n + 1);
    std::vector<Partial> parts(chunks);

    parallel_for_chunks(n + 1, default_thread_count(), [&](int chunk,
                                                           std::int64_t b,
                                                           std::int64_t e) {
        Partial& P = parts[chunk];
        // A-rows for the current nx, cached over all ny.
        std::vector<std::vector<double>> arows(n + 1);
        std::vector<double> B;
        for (int nx = static_cast<int>(b); nx < static_cast<int>(e); ++nx) {
            poly_one_plus(arows[0], nx);
            for (int ny = 1; ny <= n - nx; ++ny) {
                arows[ny] = arows[ny - 1];
                poly_mul_one_minus(arows[ny]);
            }
            for (int nz = 0; nz <= n - nx; ++nz) {
                // walk ny downward so ni grows and B picks up (1+t) factors
                B = tm1[nz];
                B.reserve(n + 1);
                for (int ny = n - nx - nz; ny >= 0; --ny) {
                    const int ni = n - nx - ny - nz;
                    if (static_cast<int>(B.size()) != nz + ni + 1)
                        poly_mul_one_plus(B);
                    Complex v = eng.evaluate(nx, ny, nz, ni, arows[ny], B);
                    P.residue = std::max(P.residue, std::abs(v.imag()));
                    double mag = std::abs(v.real());
                    if (mag == 0.0) continue;
                    double term = eng.log_multiplicity(nx, ny, nz, ni) +
                                  two_q * std::log(mag) - n * M_LN2;
                    if (term > P.mx) {
                        P.sum = P.sum * std::exp(P.mx - term) + 1.0;
                        P.mx = term;
                    } else {
                        P.sum += std::exp(term - P.mx);
                    }
                }
            }
        }
    });

    double mx = -std::numeric_limits<double>::infinity();
    double residue = 0.0;
    for (const auto& P : parts) {
        mx = std::max(mx, P.mx);
        residue = std::max(residue, P.residue);
    }
    if (residue > 1e-8)
        throw std::runtime_error("class expectation imaginary residue");
    double sum = 0.0;
    for (const auto& P : parts)
        if (!std::isinf(P.mx)) sum += P.sum * std::exp(P.mx - mx);
    return (mx / M_LN2 + std::log2(sum)) / (1.0 - q);
}

namespace {

struct SignedLog {
    double log_mag;
    double sign;  // +-1 (0 for exact zero)
};

/// log |x + s*y| with x, y given as logs and s = +-1; sign tracked.
SignedLog log_add_signed(double lx, double sx, double ly, double sy) {
    if (std::isinf(lx) && lx < 0) return {ly, sy};
    if (std::isinf(ly) && ly < 0) return {lx, sx};
    if (lx < ly) {
        std::swap(lx, ly);
        std::swap(sx, sy);
    }
    double r = std::exp(ly - lx);  // <= 1
    double val = sx == sy ? 1.0 + r : 1.0 - r;
    if (val == 0.0)
        return {-std::numeric_limits<double>::infinity(), 0.0};
    return {lx + std::log(val), sx};
}

/// The 12 estimator coefficients in log form, ordered
/// (sigma, n, m) = (X,1,1), (X,1,2), (X,2,1), (X,2,2), then Y, Z.
std::array<SignedLog, 12> coefficient_logs(const OverlapSextet& s) {
    std::array<SignedLog, 12> out;
    const LogComplex* plus[3] = {&s.a_plus_x, &s.a_plus_y, &s.a_plus_z};
    const LogComplex* minus[3] = {&s.a_minus_x, &s.a_minus_y, &s.a_minus_z};
    for (int a = 0; a < 3; ++a) {
        double lp = plus[a]->abs2_log(), lm = minus[a]->abs2_log();
        out[4 * a + 0] = log_add_signed(lp, 1.0, lm, -1.0);   // c_{1,1}
        out[4 * a + 1] = log_add_signed(lp, 1.0, lm, 1.0);    // c_{1,2}
        LogComplex u = minus[a]->conj() * (*plus[a]);
        double c = std::cos(u.phase), si = std::sin(u.phase);
        // c_{2,1} = -2 Im(u), c_{2,2} = 2 Re(u)
        out[4 * a + 2] =
            u.is_zero() || si == 0.0
                ? SignedLog{-std::numeric_limits<double>::infinity(), 0.0}
                : SignedLog{u.log_mag + std::log(2.0 * std::abs(si)),
                            si > 0 ? -1.0 : 1.0};
        out[4 * a + 3] =
            u.is_zero() || c == 0.0
                ? SignedLog{-std::numeric_limits<double>::infinity(), 0.0}
                : SignedLog{u.log_mag + std::log(2.0 * std::abs(c)),
                            c > 0 ? 1.0 : -1.0};
    }
    return out;
}

}  // namespace

MagicCoefficients magic_coefficients(const OverlapSextet& sextet) {
    auto logs = coefficient_logs(sextet);
    // Cross-check the principal-branch sqrt(-1)=+i construction against
    // the direct 2Re / -2Im form used above.
    const LogComplex* plus[3] = {&sextet.a_plus_x, &sextet.a_plus_y,
                                 &sextet.a_plus_z};
    const LogComplex* minus[3] = {&sextet.a_minus_x, &sextet.a_minus_y,
                                  &sextet.a_minus_z};
    MagicCoefficients mc{};
    for (int a = 0; a < 3; ++a) {
        Complex ap = plus[a]->to_complex(), am = minus[a]->to_complex();
        for (int mm = 1; mm <= 2; ++mm) {
            double sgn = (mm % 2 == 0) ? 1.0 : -1.0;
            Complex root = (mm % 2 == 0) ? Complex(1, 0) : Complex(0, 1);
            Complex c2 = root * (std::conj(am) * ap + sgn * std::conj(ap) * am);
            if (std::abs(c2.imag()) > 1e-10)
                throw std::runtime_error("magic coefficient not real");
            mc.c[a][1][mm - 1] = c2.real();
            mc.c[a][0][mm - 1] =
                std::norm(ap) + sgn * std::norm(am);
        }
        // agreement between the two constructions
        for (int mm = 0; mm < 2; ++mm) {
            const SignedLog& l = logs[4 * a + 2 + mm];
            double direct = l.sign * std::exp(l.log_mag);
            if (std::abs(direct - mc.c[a][1][mm]) > 1e-10)
                throw std::runtime_error("magic coefficient branch mismatch");
        }
    }
    return mc;
}

double sre_approx(const OverlapSextet& sextet, double q, int n_qubits) {
    if (q <= 0.0 || q == 1.0)
        throw std::invalid_argument("q > 0 and q != 1 required");
    if (n_qubits < 2 || n_qubits % 2 != 0)
        throw std::invalid_argument("even positive qubit count required");
    auto logs = coefficient_logs(sextet);
    double mx = -std::numeric_limits<double>::infinity();
    for (const auto& l : logs) mx = std::max(mx, l.log_mag);
    if (std::isinf(mx))
        return std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& l : logs) {
        if (std::isinf(l.log_mag)) continue;
        sum += std::exp(2.0 * q * (l.log_mag - mx));
    }
    double log2_half_sum = 2.0 * q * mx / M_LN2 + std::log2(sum) - 1.0;
    return log2_half_sum / (1.0 - q);
}

double squeezing_parameter(const SymmetricState& state) {
    const int n = state.n_qubits();
    TridiagonalOperator jx = collective_generator(n, 1, 0, 0);
    TridiagonalOperator jy = collective_generator(n, 0, 1, 0);
    TridiagonalOperator jz = collective_generator(n, 0, 0, 1);
    double mean_x = moments(state, jx).mean;
    if (std::abs(mean_x) < 1e-10 * (0.5 * n))
        throw std::domain_error(
            "squeezing parameter undefined: mean spin vanishes");
    Moments my = moments(state, jy), mz = moments(state, jz);
    double cyz = cross_covariance(state, jy, jz);
    double vmin = 0.5 * (my.variance + mz.variance) -
                  std::sqrt(0.25 * (my.variance - mz.variance) *
                                (my.variance - mz.variance) +
                            cyz * cyz);
    return n * vmin / (mean_x * mean_x);
}

BellResult oat_bell_correlator(int n_qubits, double chi_t, BellAxis axis) {
    const int n = n_qubits;
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("even positive qubit count required");
    const long j2 = n;  // 2J
    const __float128 two_pi = 2.0q * M_PIq;
    // w_k = C(n, k) / 2^n by exact recursion in quad precision
    auto reduced_phase = [&](double scale, long k) {
        // scale * (k - J)^2 reduced mod 2pi
        __float128 m = k - 0.5q * j2;
        __float128 x = (__float128)scale * m * m;
        x = fmodq(x, two_pi);
        return x;
    };
    auto accumulate = [&](int quarter_turns_per_down, bool alternate) {
        // sum_k w_k e^{-i chi_t m^2} * i^{q*(n-k)} * (-1)^{m if alternate}
        __float128 w = powq(2.0q, -(__float128)n);  // C(n,0)/2^n
        __float128 re = 0.0q, im = 0.0q;
        for (long k = 0; k <= n; ++k) {
            __float128 ph = -reduced_phase(chi_t, k);
            long quarters = quarter_turns_per_down * ((n - k) % 4);
            if (alternate && ((k - n / 2) % 2 != 0)) quarters += 2;
            ph += (__float128)(quarters % 4) * (M_PIq / 2.0q);
            re += w * cosq(ph);
            im += w * sinq(ph);
            if (k < n) w = w * (__float128)(n - k) / (__float128)(k + 1);
        }
        __float128 mag2 = re * re + im * im;
        if (mag2 <= 0.0q) return -std::numeric_limits<double>::infinity();
        return (double)(0.5q * logq(mag2) / M_LN2q);
    };
    double lt, lb;
    switch (axis) {
        case BellAxis::X:
            lt = accumulate(0, false);
            lb = accumulate(0, true);
            break;
        case BellAxis::Y:
            // conj(+Y amplitude) contributes (-i)^{n-k}
            lt = accumulate(-1, false);
            lb = accumulate(-1, true);
            break;
        case BellAxis::Z: {
            double l0 = 0.5 * (log_binomial(n, 0) / M_LN2) - 0.5 * n;
            lt = l0;
            lb = l0;
            break;
        }
        default:
            throw std::invalid_argument("bad axis");
    }
    BellResult r;
    r.log2_e = 2.0 * (lt + lb);
    r.q = n + r.log2_e;
    return r;
}

BellResult bell_correlator(const SymmetricState& state, BellAxis axis) {
    const int n = state.n_qubits();
    LogComplex top, bottom;
    switch (axis) {
        case BellAxis::X:
            top = overlap(SymmetricState::cardinal(n, Cardinal::PlusX), state);
            bottom =
                overlap(SymmetricState::cardinal(n, Cardinal::MinusX), state);
            break;
        case BellAxis::Y:
            top = overlap(SymmetricState::cardinal(n, Cardinal::PlusY), state);
            bottom =
                overlap(SymmetricState::cardinal(n, Cardinal::MinusY), state);
            break;
        case BellAxis::Z:
            top = state.amplitude(n);
            bottom = state.amplitude(0);
            break;
    }
    BellResult r;
    if (top.is_zero() || bottom.is_zero()) {
        r.log2_e = -std::numeric_limits<double>::infinity();
        r.q = -std::numeric_limits<double>::infinity();
        return r;
    }
    r.log2_e = 2.0 * (top.log_mag + bottom.log_mag) / M_LN2;
    r.q = n + r.log2_e;
    return r;
}

}  // namespace spinmagic
