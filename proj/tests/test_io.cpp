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

#include "spinmagic/io.hpp"
#include "spinmagic/protocols.hpp"
#include "support/brute_force.hpp"

using namespace spinmagic;

TEST_CASE("symmetric state JSON round trip") {
    auto s = evolve_oat(plus_x_state(12), 0.41);
    std::string text = state_to_json(s);
    auto back = state_from_json(text);
    REQUIRE(std::holds_alternative<SymmetricState>(back));
    CHECK(fidelity(std::get<SymmetricState>(back), s) >
          1.0 - 1e-12);
    // exact zeros survive as "-inf"
    auto d = SymmetricState::dicke(4, 0);
    auto back2 = state_from_json(state_to_json(d));
    CHECK(std::get<SymmetricState>(back2).amplitude(0).is_zero());
}

TEST_CASE("coherent superposition JSON round trip") {
    auto g = generalized_ghz(30, 1.2);
    auto back = state_from_json(state_to_json(g));
    REQUIRE(std::holds_alternative<CoherentSuperposition>(back));
    const auto& sup = std::get<CoherentSuperposition>(back);
    CHECK(sup.n_qubits() == 30);
    CHECK(sup.norm_defect() < 1e-9);
    CHECK(fidelity(sup.to_state(), g.to_state()) > 1.0 - 1e-12);
}

TEST_CASE("reader rejects norm defects above 1e-6") {
    std::string text = R"({"n": 2, "amplitudes": [
        {"log_mag": 0.01, "phase": 0.0},
        {"log_mag": "-inf", "phase": 0.0},
        {"log_mag": "-inf", "phase": 0.0}]})";
    CHECK_THROWS_AS(state_from_json(text), std::invalid_argument);
}

TEST_CASE("tables render deterministic CSV and JSON") {
    Table t;
    t.header = {"a", "b"};
    t.rows = {{1.0, std::nullopt}, {0.5, 2.0}};
    CHECK(table_to_csv(t) == "a,b\n1,\n0.5,2\n");
    std::string j = table_to_json(t);
    CHECK(j.find("\"schema_version\"") != std::string::npos);
    CHECK(j.find("null") != std::string::npos);
}
