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

#include <random>

#include "spinmagic/log_complex.hpp"

using namespace spinmagic;

TEST_CASE("zero has canonical phase and survives arithmetic") {
    LogComplex z = LogComplex::zero();
    CHECK(z.is_zero());
    CHECK(z.phase == 0.0);
    CHECK((z * LogComplex::one()).is_zero());
    CHECK(z.conj().phase == 0.0);
    CHECK(LogComplex::from_cartesian({0.0, 0.0}).is_zero());
}

TEST_CASE("round trip is exact over the full double range") {
    std::mt19937 gen(3);
    std::uniform_real_distribution<double> mag_exp(-300.0, 300.0);
    std::uniform_real_distribution<double> ph(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        double lm = mag_exp(gen) * M_LN10 / 1.0;
        LogComplex a = LogComplex::from_polar_log(lm, ph(gen));
        LogComplex b = LogComplex::from_cartesian(a.to_complex());
        // one polar<->cartesian round trip costs at most a few ulp
        CHECK(std::abs(b.log_mag - a.log_mag) < 1e-13 * std::abs(a.log_mag) + 1e-13);
        CHECK(std::abs(wrap_phase(b.phase - a.phase)) < 1e-12);
    }
}

TEST_CASE("phases wrap into (-pi, pi]") {
    CHECK(wrap_phase(M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_phase(-M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_phase(3 * M_PI) == doctest::Approx(M_PI));
    CHECK(wrap_phase(0.0) == 0.0);
}

TEST_CASE("products add logs and wrap phases") {
    LogComplex a = LogComplex::from_polar_log(-500.0, 2.0);
    LogComplex b = LogComplex::from_polar_log(-600.0, 2.5);
    LogComplex c = a * b;
    CHECK(c.log_mag == doctest::Approx(-1100.0));
    CHECK(c.phase == doctest::Approx(wrap_phase(4.5)));
    CHECK(a.pow_int(7).log_mag == doctest::Approx(-3500.0));
    CHECK(a.pow_int(0).log_mag == 0.0);
}

TEST_CASE("log_sum matches direct complex addition in range") {
    std::mt19937 gen(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<LogComplex> terms(12);
        Complex direct{0, 0};
        for (auto& t : terms) {
            Complex z{g(gen), g(gen)};
            t = LogComplex::from_cartesian(z);
            direct += z;
        }
        Complex via = log_sum(terms).to_complex();
        CHECK(std::abs(via - direct) < 1e-13);
    }
}

TEST_CASE("log_sum keeps relative accuracy across huge scales") {
    std::vector<LogComplex> terms = {
        LogComplex::from_polar_log(-2000.0, 0.3),
        LogComplex::from_polar_log(-2030.0, 1.1),
    };
    LogComplex s = log_sum(terms);
    Complex small{std::exp(-30.0) * std::cos(1.1), std::exp(-30.0) * std::sin(1.1)};
    Complex ref = Complex{std::cos(0.3), std::sin(0.3)} + small;
    CHECK(s.log_mag == doctest::Approx(-2000.0 + std::log(std::abs(ref))));
    CHECK(s.phase == doctest::Approx(std::arg(ref)));
}

TEST_CASE("double-double accumulation resolves 1e-25 against 1") {
    DoubleDouble acc;
    acc.add(1.0);
    for (int i = 0; i < 10; ++i) acc.add(1e-25);
    acc.add(-1.0);
    CHECK(acc.value() == doctest::Approx(1e-24).epsilon(1e-10));
}
