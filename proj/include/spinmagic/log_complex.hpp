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

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <vector>

namespace spinmagic {

using Complex = std::complex<double>;

/// Wraps an angle into (-pi, pi].
inline double wrap_phase(double phi) {
    if (!std::isfinite(phi)) return 0.0;
    phi = std::remainder(phi, 2.0 * M_PI);
    if (phi <= -M_PI) phi += 2.0 * M_PI;
    return phi;
}

/// Complex number stored as (log magnitude, phase).
///
/// Survives magnitudes far outside the double range: amplitudes of
/// symmetric states scale like 2^{-N} and binomial weights like
/// C(2000,1000), both of which overflow or underflow linear doubles.
/// Zero is encoded as log_mag = -inf with canonical phase 0.
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    static LogComplex zero() { return {}; }
    static LogComplex one() { return {0.0, 0.0}; }

    static LogComplex from_polar_log(double lm, double ph) {
        if (std::isinf(lm) && lm < 0) return zero();
        return {lm, wrap_phase(ph)};
    }

    static LogComplex from_cartesian(Complex z) {
        double m = std::abs(z);
        if (m == 0.0) return zero();
        return {std::log(m), std::arg(z)};
    }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

    Complex to_complex() const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_mag), phase);
    }

    /// |z|^2 as a log (2 * log_mag).
    double abs2_log() const { return 2.0 * log_mag; }

    LogComplex conj() const {
        if (is_zero()) return zero();
        return {log_mag, wrap_phase(-phase)};
    }

    LogComplex operator*(const LogComplex& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return {log_mag + o.log_mag, wrap_phase(phase + o.phase)};
    }

    /// Integer power; 0^0 = 1.
    LogComplex pow_int(long long p) const {
        if (p == 0) return one();
        if (is_zero()) return zero();
        return {log_mag * static_cast<double>(p),
                wrap_phase(phase * static_cast<double>(p))};
    }

    LogComplex scaled(double real_positive_factor_log) const {
        if (is_zero()) return zero();
        return {log_mag + real_positive_factor_log, phase};
    }
};

/// Error-free transform: a + b = s + err with s = fl(a + b).
inline void two_sum(double a, double b, double& s, double& err) {
    s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
}

/// Double-double accumulator. Gives ~32 significant digits, which the
/// log-domain overlap sums need: Bell correlators cancel binomial-weight
/// terms down to 1e-20 of their magnitude and plain doubles bottom out
/// at 1e-16.
struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    void add(double x) {
        double s, e;
        two_sum(hi, x, s, e);
        lo += e;
        hi = s;
    }

    double value() const { return hi + lo; }
};

struct DoubleDoubleComplex {
    DoubleDouble re, im;
    void add(Complex z) {
        re.add(z.real());
        im.add(z.imag());
    }
    Complex value() const { return {re.value(), im.value()}; }
};

/// Sum of log-domain terms: scale by the largest magnitude, accumulate in
/// double-double, restore the scale. Accuracy is relative to the largest
/// term, which is the best any fixed-precision summation can promise.
inline LogComplex log_sum(std::span<const LogComplex> terms) {
    double mx = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) mx = std::max(mx, t.log_mag);
    if (std::isinf(mx) && mx < 0) return LogComplex::zero();
    DoubleDoubleComplex acc;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        acc.add(std::polar(std::exp(t.log_mag - mx), t.phase));
    }
    Complex s = acc.value();
    double m = std::abs(s);
    if (m == 0.0) return LogComplex::zero();
    return LogComplex::from_polar_log(std::log(m) + mx, std::arg(s));
}

}  // namespace spinmagic
