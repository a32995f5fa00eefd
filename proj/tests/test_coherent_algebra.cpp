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
#include <random>

#include "spinmagic/coherent_algebra.hpp"
#include "spinmagic/magic_metrics.hpp"
#include "spinmagic/protocols.hpp"
#include "support/brute_force.hpp"

using namespace spinmagic;

namespace {

/// Per-qubit coherent direction |theta, phi> = R_z(phi) R_y(theta) |up>.
void qubit_state(double theta, double phi, Complex out[2]) {
    out[0] = std::polar(std::cos(theta / 2), -phi / 2);  // up
    out[1] = std::polar(std::sin(theta / 2), +phi / 2);  // down
}

Complex qubit_elem(double ti, double pi_, double tj, double pj,
                   const Complex m[2][2]) {
    Complex bra[2], ket[2];
    qubit_state(ti, pi_, bra);
    qubit_state(tj, pj, ket);
    Complex acc = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            acc += std::conj(bra[r]) * m[r][c] * ket[c];
    return acc;
}

const Complex kX[2][2] = {{0, 1}, {1, 0}};
const Complex kY[2][2] = {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
const Complex kZ[2][2] = {{1, 0}, {0, -1}};
const Complex kI[2][2] = {{1, 0}, {0, 1}};

}  // namespace

TEST_CASE("elementary coefficients at hand-checked angles") {
    // <+X|X|+X> per qubit
    auto c = elementary_coefficients(M_PI_2, 0, M_PI_2, 0);
    CHECK(std::abs(c.alpha - Complex(1, 0)) < 1e-15);
    // identity element of any state with itself
    auto c2 = elementary_coefficients(0.83, -2.1, 0.83, -2.1);
    CHECK(std::abs(c2.kappa - Complex(1, 0)) < 1e-15);
    // poles: gamma and kappa vanish, |alpha| = |beta| = 1
    auto c3 = elementary_coefficients(0, 0, M_PI, 0);
    CHECK(std::abs(c3.gamma) < 1e-15);
    CHECK(std::abs(c3.kappa) < 1e-15);
    CHECK(std::abs(std::abs(c3.alpha) - 1.0) < 1e-15);
    CHECK(std::abs(std::abs(c3.beta) - 1.0) < 1e-15);
}

TEST_CASE("elementary coefficients equal per-qubit matrix elements") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> th(0.0, M_PI), ph(-M_PI, M_PI);
    for (int trial = 0; trial < 500; ++trial) {
        double ti = th(gen), tj = th(gen), pi_ = ph(gen), pj = ph(gen);
        auto c = elementary_coefficients(ti, pi_, tj, pj);
        CHECK(std::abs(c.alpha - qubit_elem(ti, pi_, tj, pj, kX)) < 1e-14);
        CHECK(std::abs(c.beta - qubit_elem(ti, pi_, tj, pj, kY)) < 1e-14);
        CHECK(std::abs(c.gamma - qubit_elem(ti, pi_, tj, pj, kZ)) < 1e-14);
        CHECK(std::abs(c.kappa - qubit_elem(ti, pi_, tj, pj, kI)) < 1e-14);
    }
}

TEST_CASE("coefficient magnitudes always sum to two") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> th(0.0, M_PI), ph(-M_PI, M_PI);
    for (int trial = 0; trial < 10000; ++trial) {
        auto c = elementary_coefficients(th(gen), ph(gen), th(gen), ph(gen));
        double s = std::norm(c.alpha) + std::norm(c.beta) + std::norm(c.gamma) +
                   std::norm(c.kappa);
        CHECK(std::abs(s - 2.0) <= 1e-12);
    }
}

TEST_CASE("coherent matrix element examples") {
    // alpha = 1 raised to N
    auto all_x = coherent_matrix_element(8, {M_PI_2, 0}, {M_PI_2, 0},
                                         {8, 0, 0, 0});
    CHECK(std::abs(all_x.to_complex() - Complex(1, 0)) < 1e-12);
    // pole pair, all-Y string: (+-i)^N; even N makes both branches agree
    const int n = 6;
    auto yy = coherent_matrix_element(n, {0, 0}, {M_PI, 0}, {0, n, 0, 0});
    Complex expect = std::pow(Complex(0, 1), n);
    CHECK(std::abs(yy.to_complex() - expect) < 1e-12);
}

TEST_CASE("coherent matrix element equals the 2^6 brute force") {
    const int n = 6;
    std::mt19937 gen(31);
    std::uniform_real_distribution<double> th(0.0, M_PI), ph(-M_PI, M_PI);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        double ti = th(gen), tj = th(gen), pi_ = ph(gen), pj = ph(gen);
        int counts[4] = {0, 0, 0, 0};
        for (int q = 0; q < n; ++q) ++counts[pick(gen)];
        PauliClass cls{counts[0], counts[1], counts[2], counts[3]};
        LogComplex got =
            coherent_matrix_element(n, {ti, pi_}, {tj, pj}, cls);
        Complex expect = 1.0;
        for (int q = 0; q < cls.n_x; ++q)
            expect *= qubit_elem(ti, pi_, tj, pj, kX);
        for (int q = 0; q < cls.n_y; ++q)
            expect *= qubit_elem(ti, pi_, tj, pj, kY);
        for (int q = 0; q < cls.n_z; ++q)
            expect *= qubit_elem(ti, pi_, tj, pj, kZ);
        for (int q = 0; q < cls.n_i; ++q)
            expect *= qubit_elem(ti, pi_, tj, pj, kI);
        CHECK(std::abs(got.to_complex() - expect) < 1e-12);
    }
    CHECK_THROWS_AS(
        coherent_matrix_element(6, {0, 0}, {0, 0}, {1, 1, 1, 1}),
        std::invalid_argument);
}

TEST_CASE("cardinal table: examples, general formula, brute force") {
    {
        auto t = cardinal_table(2, {2, 0, 0, 0});
        for (const auto& e : t)
            if (e.bra == Cardinal::PlusX && e.ket == Cardinal::PlusX)
                CHECK(e.value == Complex(1, 0));
        auto t2 = cardinal_table(2, {0, 0, 1, 1});
        for (const auto& e : t2)
            if (e.bra == Cardinal::PlusX && e.ket == Cardinal::MinusX)
                CHECK(e.value == Complex(0, 0));  // N_I != 0 kills it
    }
    // every entry equals the general-formula evaluation, and the
    // per-qubit brute force, for all classes at small n
    for (int n = 2; n <= 8; n += 2) {
        for (int nx = 0; nx <= n; ++nx)
            for (int ny = 0; ny <= n - nx; ++ny)
                for (int nz = 0; nz <= n - nx - ny; ++nz) {
                    PauliClass cls{nx, ny, nz, n - nx - ny - nz};
                    auto table = cardinal_table(n, cls);
                    for (const auto& e : table) {
                        auto ba = cardinal_angles(e.bra);
                        auto ka = cardinal_angles(e.ket);
                        Complex formula =
                            coherent_matrix_element(n, ba, ka, cls)
                                .to_complex();
                        CHECK(std::abs(e.value - formula) < 1e-12);
                        Complex pq = 1.0;
                        for (int q = 0; q < nx; ++q)
                            pq *= qubit_elem(ba.theta, ba.phi, ka.theta,
                                             ka.phi, kX);
                        for (int q = 0; q < ny; ++q)
                            pq *= qubit_elem(ba.theta, ba.phi, ka.theta,
                                             ka.phi, kY);
                        for (int q = 0; q < nz; ++q)
                            pq *= qubit_elem(ba.theta, ba.phi, ka.theta,
                                             ka.phi, kZ);
                        for (int q = 0; q < n - nx - ny - nz; ++q)
                            pq *= qubit_elem(ba.theta, ba.phi, ka.theta,
                                             ka.phi, kI);
                        CHECK(std::abs(e.value - pq) < 1e-12);
                    }
                }
    }
}

TEST_CASE("class expectation is arrangement independent on symmetric states") {
    const int n = 6;
    std::mt19937 gen(41);
    auto psi = brute::to_register(brute::random_state(n, 77));
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> codes(n);
        for (auto& c : codes) c = pick(gen);
        Complex block = 0.0, shuffled = 0.0;
        std::vector<int> sorted = codes;
        // block representative: X...Y...Z...I
        std::sort(sorted.begin(), sorted.end(), [](int a, int b) {
            auto rank = [](int c) { return c == 0 ? 3 : c; };
            return rank(a) < rank(b);
        });
        block = brute::pauli_expectation(psi, sorted);
        std::shuffle(codes.begin(), codes.end(), gen);
        shuffled = brute::pauli_expectation(psi, codes);
        CHECK(std::abs(block - shuffled) < 1e-12);
    }
}

TEST_CASE("superposition norms and state expansion") {
    auto g = generalized_ghz(20, 0.9);
    CHECK(g.norm_defect() < 1e-10);
    auto st = g.to_state();
    CHECK(st.norm_defect() < 1e-10);
    // degenerate pair at 2eps = 0 stays exactly normalized
    auto g0 = generalized_ghz(20, 0.0);
    CHECK(g0.norm_defect() < 1e-12);
    CHECK(fidelity(g0.to_state(), SymmetricState::dicke(20, 10)) >
          1.0 - 1e-12);
}

TEST_CASE("exact coherent SRE: cardinal components are stabilizer states") {
    // The stabilizer coherent states sit at the six cardinal directions;
    // a generic direction is a product state with per-qubit magic, so the
    // SRE is additive, N times the single-qubit value.
    for (Cardinal c : {Cardinal::PlusZ, Cardinal::MinusX, Cardinal::PlusY}) {
        auto a = cardinal_angles(c);
        CoherentSuperposition single(30,
                                     {{LogComplex::one(), a.theta, a.phi}});
        CHECK(std::abs(sre_exact_coherent(single, 2.0)) < 1e-9);
    }
    {
        const int n = 30;
        const double th = 1.234, ph = -0.77;
        CoherentSuperposition single(n, {{LogComplex::one(), th, ph}});
        double ex = std::sin(th) * std::cos(ph), ey = std::sin(th) * std::sin(ph),
               ez = std::cos(th);
        double per_qubit = -std::log2(
            0.5 * (1.0 + std::pow(ex, 4) + std::pow(ey, 4) + std::pow(ez, 4)));
        CHECK(sre_exact_coherent(single, 2.0) ==
              doctest::Approx(n * per_qubit).epsilon(1e-9));
    }

    // GHZ_x(0) as two components at N = 4 matches the statevector oracle
    std::vector<CoherentSuperposition::Component> comps = {
        {LogComplex::from_polar_log(-0.5 * M_LN2, 0.0), M_PI_2, 0.0},
        {LogComplex::from_polar_log(-0.5 * M_LN2, 0.0), M_PI_2, M_PI}};
    CoherentSuperposition ghz(4, comps);
    double coh = sre_exact_coherent(ghz, 2.0);
    double oracle = sre_oracle_statevector(ghz_x(4, 0.0), 2.0);
    CHECK(coh == doctest::Approx(oracle).epsilon(1e-9));

    CHECK_THROWS_AS(sre_exact_coherent(ghz, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sre_exact_coherent(ghz, 0.75), std::invalid_argument);
    // unnormalized input rejected
    comps[0].weight = LogComplex::one();
    CHECK_THROWS_AS(sre_exact_coherent(CoherentSuperposition(4, comps), 2.0),
                    std::invalid_argument);
}

TEST_CASE("generalized GHZ at the half-angle point approaches 3") {
    auto g = generalized_ghz(100, M_PI_2);
    CHECK(sre_exact_coherent(g, 2.0) == doctest::Approx(3.0).epsilon(1e-2));
}

TEST_CASE("exact coherent SRE ignores a global weight phase") {
    auto g = generalized_ghz(40, 1.1);
    double base = sre_exact_coherent(g, 2.0);
    std::vector<CoherentSuperposition::Component> comps = g.components();
    for (auto& c : comps)
        c.weight = c.weight * LogComplex::from_polar_log(0.0, 2.13);
    double rotated =
        sre_exact_coherent(CoherentSuperposition(40, comps), 2.0);
    CHECK(std::abs(base - rotated) < 1e-12);
}
