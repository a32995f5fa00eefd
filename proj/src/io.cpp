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

#include "spinmagic/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spinmagic {

namespace {

using nlohmann::json;

json log_value(double lm) {
    if (std::isinf(lm) && lm < 0) return "-inf";
    return lm;
}

double parse_log_value(const json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "-inf")
            return -std::numeric_limits<double>::infinity();
        throw std::invalid_argument("bad log magnitude string");
    }
    return v.get<double>();
}

std::string format_cell(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string state_to_json(const StoredState& state) {
    json j;
    j["schema_version"] = kSchemaVersion;
    if (std::holds_alternative<SymmetricState>(state)) {
        // the writer emits the canonical global phase
        const SymmetricState s = SymmetricState::from_amplitudes(
            std::get<SymmetricState>(state).n_qubits(),
            std::get<SymmetricState>(state).amplitudes(), 1e-6);
        j["n"] = s.n_qubits();
        json amps = json::array();
        for (const auto& a : s.amplitudes())
            amps.push_back({{"log_mag", log_value(a.log_mag)},
                            {"phase", a.is_zero() ? 0.0 : a.phase}});
        j["amplitudes"] = std::move(amps);
    } else {
        const auto& s = std::get<CoherentSuperposition>(state);
        j["n"] = s.n_qubits();
        json comps = json::array();
        for (const auto& c : s.components())
            comps.push_back({{"log_weight", log_value(c.weight.log_mag)},
                             {"phase", c.weight.is_zero() ? 0.0 : c.weight.phase},
                             {"theta", c.theta},
                             {"phi", c.phi}});
        j["coherent_components"] = std::move(comps);
    }
    return j.dump(2);
}

StoredState state_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    if (j.contains("coherent_components")) {
        std::vector<CoherentSuperposition::Component> comps;
        for (const auto& c : j.at("coherent_components")) {
            comps.push_back({LogComplex::from_polar_log(
                                 parse_log_value(c.at("log_weight")),
                                 c.at("phase").get<double>()),
                             c.at("theta").get<double>(),
                             c.at("phi").get<double>()});
        }
        CoherentSuperposition sup(n, std::move(comps));
        if (sup.norm_defect() > 1e-6)
            throw std::invalid_argument(
                "stored superposition norm defect exceeds 1e-6");
        return sup;
    }
    const auto& arr = j.at("amplitudes");
    std::vector<LogComplex> amps;
    amps.reserve(arr.size());
    for (const auto& a : arr)
        amps.push_back(LogComplex::from_polar_log(
            parse_log_value(a.at("log_mag")), a.at("phase").get<double>()));
    // from_amplitudes renormalizes and rejects defects above 1e-6
    return SymmetricState::from_amplitudes(n, std::move(amps), 1e-6);
}

void write_state_file(const std::string& path, const StoredState& state) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << state_to_json(state) << "\n";
}

StoredState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return state_from_json(ss.str());
}

std::string table_to_csv(const Table& t) {
    std::string out;
    for (size_t c = 0; c < t.header.size(); ++c) {
        if (c) out += ',';
        out += t.header[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (row[c]) out += format_cell(*row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string table_to_json(const Table& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["columns"] = t.header;
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r = json::array();
        for (const auto& cell : row) {
            if (cell)
                r.push_back(*cell);
            else
                r.push_back(nullptr);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2);
}

void write_table(const std::string& path, const Table& t, bool json_format) {
    std::string body = json_format ? table_to_json(t) : table_to_csv(t);
    if (path.empty() || path == "-") {
        std::fwrite(body.data(), 1, body.size(), stdout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << body;
}

}  // namespace spinmagic
