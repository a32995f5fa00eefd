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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinmagic/husimi.hpp"
#include "spinmagic/symmetric_state.hpp"
#include "support/brute_force.hpp"

using namespace spinmagic;

namespace {
LogComplex from_real(double x) {
    return LogComplex::from_cartesian({x, 0.0});
}
}  // namespace

TEST_CASE("make_state accepts basis vectors and rejects bad input") {
    auto s = SymmetricState::from_amplitudes(
        2, {from_real(1), LogComplex::zero(), LogComplex::zero()});
    CHECK(s.norm_defect() < 1e-12);
    CHECK(s.amplitude(0).log_mag == doctest::Approx(0.0));

    CHECK_THROWS_AS(SymmetricState::from_amplitudes(
                        3, {from_real(1), from_real(0), from_real(0),
                            from_real(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SymmetricState::from_amplitudes(2, {from_real(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        SymmetricState::from_amplitudes(
            2, {LogComplex::zero(), LogComplex::zero(), LogComplex::zero()}),
        std::invalid_argument);
    // norm defect above the 1e-6 gate
    CHECK_THROWS_AS(SymmetricState::from_amplitudes(
                        2, {from_real(1.01), LogComplex::zero(),
                            LogComplex::zero()}),
                    std::invalid_argument);
}

TEST_CASE("make_state matches the coherent equator state at n = 2") {
    auto s = SymmetricState::from_amplitudes(
        2, {from_real(0.5), from_real(1.0 / std::sqrt(2.0)), from_real(0.5)});
    auto c = SymmetricState::coherent(2, M_PI_2, 0.0);
    CHECK(fidelity(s, c) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coherent poles and antipodal orthogonality") {
    // theta = 0 collapses onto |J, -J>
    auto s = SymmetricState::coherent(8, 0.0, 0.0);
    CHECK(std::exp(s.amplitude(0).abs2_log()) == doctest::Approx(1.0));
    // antipodal equator states are exactly orthogonal
    auto a = SymmetricState::coherent(12, M_PI_2, 0.0);
    auto b = SymmetricState::coherent(12, M_PI_2, M_PI);
    CHECK(std::exp(overlap(a, b).abs2_log()) < 1e-28);
    // n = 2000 does not overflow
    auto big = SymmetricState::coherent(2000, 1.1, 0.4);
    CHECK(big.norm_defect() < 1e-10);
}

TEST_CASE("overlap basics") {
    auto x = SymmetricState::cardinal(10, Cardinal::PlusX);
    CHECK(std::abs(overlap(x, x).to_complex() - 1.0) < 1e-13);
    auto z = SymmetricState::cardinal(10, Cardinal::PlusZ);
    // product of ten single-qubit overlaps 1/sqrt(2)
    CHECK(std::abs(overlap(x, z).to_complex()) ==
          doctest::Approx(std::pow(2.0, -5.0)).epsilon(1e-12));
    auto mz = SymmetricState::cardinal(10, Cardinal::MinusZ);
    CHECK(overlap(z, mz).is_zero());
}

TEST_CASE("overlap is exactly conjugate-symmetric") {
    auto a = brute::random_state(14, 11);
    auto b = brute::random_state(14, 12);
    LogComplex ab = overlap(a, b), ba = overlap(b, a);
    CHECK(ab.log_mag == ba.log_mag);
    CHECK(ab.phase == wrap_phase(-ba.phase));
}

TEST_CASE("overlap magnitude never exceeds one") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        auto a = brute::random_state(16, 100 + seed);
        auto b = brute::random_state(16, 200 + seed);
        CHECK(overlap(a, b).log_mag <= std::log1p(1e-12));
    }
}

TEST_CASE("coherent overlap factorizes into single-qubit overlaps") {
    const int n = 200;
    auto a = SymmetricState::coherent(n, 0.7, -1.2);
    auto b = SymmetricState::coherent(n, 2.1, 0.4);
    double got = std::exp(overlap(a, b).log_mag);
    Complex per = std::cos(0.35) * std::cos(1.05) +
                  std::polar(1.0, (-1.2) - 0.4) * std::sin(0.35) * std::sin(1.05);
    CHECK(got == doctest::Approx(std::pow(std::abs(per), n)).epsilon(1e-10));
}

TEST_CASE("overlap sextet of the cardinal and GHZ states") {
    const int n = 12;
    auto sx = overlap_sextet(SymmetricState::cardinal(n, Cardinal::PlusX));
    CHECK(std::abs(sx.a_plus_x.to_complex() - 1.0) < 1e-12);
    CHECK(std::exp(sx.a_minus_x.log_mag) < 1e-13);
    CHECK(std::exp(sx.a_plus_y.log_mag) ==
          doctest::Approx(std::pow(2.0, -n / 2.0)).epsilon(1e-10));
    CHECK(std::exp(sx.a_plus_z.log_mag) ==
          doctest::Approx(std::pow(2.0, -n / 2.0)).epsilon(1e-10));

    // Dicke m = 0: |a_{+-X}|^2 = C(N, N/2)/2^N and the Z overlaps vanish
    auto sd = overlap_sextet(SymmetricState::dicke(n, 0));
    double w = std::exp(brute::log_binomial(n, n / 2) - n * M_LN2);
    CHECK(std::exp(sd.a_plus_x.abs2_log()) == doctest::Approx(w).epsilon(1e-10));
    CHECK(std::exp(sd.a_minus_x.abs2_log()) == doctest::Approx(w).epsilon(1e-10));
    CHECK(sd.a_plus_z.is_zero());
    CHECK(sd.a_minus_z.is_zero());
}

TEST_CASE("sextet axis pairs are bounded by one") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        auto sx = overlap_sextet(brute::random_state(14, 300 + seed));
        auto pair = [](const LogComplex& p, const LogComplex& m) {
            return std::exp(p.abs2_log()) + std::exp(m.abs2_log());
        };
        double x = pair(sx.a_plus_x, sx.a_minus_x);
        double y = pair(sx.a_plus_y, sx.a_minus_y);
        double z = pair(sx.a_plus_z, sx.a_minus_z);
        CHECK(x <= 1.0 + 1e-9);
        CHECK(y <= 1.0 + 1e-9);
        CHECK(z <= 1.0 + 1e-9);
        CHECK(x + y + z <= 3.0 + 1e-9);
    }
}

TEST_CASE("canonical phase: the largest amplitude is real positive") {
    auto s = brute::random_state(10, 77);
    int imax = 0;
    for (int k = 1; k <= 10; ++k)
        if (s.amplitude(k).log_mag > s.amplitude(imax).log_mag) imax = k;
    CHECK(s.amplitude(imax).phase == 0.0);
}

TEST_CASE("husimi grid: pole state, normalization, identity quadrature") {
    const int n = 20;
    auto g = husimi(SymmetricState::dicke(n, n / 2), 41, 81);
    // |+Z> = |J, J> lives at theta = pi in the coherent parametrization
    CHECK(g.value(40, 0) == doctest::Approx(1.0));
    CHECK(g.value(0, 0) < 1e-10);
    for (double v : g.values) CHECK(v <= 1.0 + 1e-12);

    auto r = husimi(brute::random_state(n, 42), 181, 361);
    CHECK(r.identity_quadrature(n) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("husimi of a GHZ state shows two equatorial maxima") {
    const int n = 20;
    std::vector<LogComplex> amps(n + 1);
    auto px = SymmetricState::cardinal(n, Cardinal::PlusX);
    auto mx = SymmetricState::cardinal(n, Cardinal::MinusX);
    for (int k = 0; k <= n; ++k) {
        LogComplex t[2] = {px.amplitude(k).scaled(-0.5 * M_LN2),
                           mx.amplitude(k).scaled(-0.5 * M_LN2)};
        amps[k] = log_sum(std::span<const LogComplex>(t, 2));
    }
    auto ghz = SymmetricState::from_amplitudes(n, std::move(amps));
    auto g = husimi(ghz, 61, 121);
    int equator = 30;  // theta = pi/2 row
    // maxima at phi = 0 and phi = pi, equal height
    CHECK(g.value(equator, 0) == doctest::Approx(1.0));
    CHECK(g.value(equator, 60) == doctest::Approx(1.0));
    CHECK(g.value(equator, 30) < 0.05);
}
