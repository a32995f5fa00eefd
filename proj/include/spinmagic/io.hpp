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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinmagic/coherent_algebra.hpp"
#include "spinmagic/symmetric_state.hpp"

namespace spinmagic {

inline constexpr int kSchemaVersion = 1;

using StoredState = std::variant<SymmetricState, CoherentSuperposition>;

/// State file schema:
///   {"n": int, "amplitudes": [{"log_mag": number|"-inf", "phase": number}]}
/// or the coherent variant:
///   {"n": int, "coherent_components":
///       [{"log_weight": number|"-inf", "phase": number,
///         "theta": number, "phi": number}]}
/// Amplitude index k maps to m = k - N/2 (z-quantized Dicke basis).
/// The writer emits the canonical global phase; the reader renormalizes
/// and rejects norm defects above 1e-6.
std::string state_to_json(const StoredState& state);
StoredState state_from_json(const std::string& text);

void write_state_file(const std::string& path, const StoredState& state);
StoredState read_state_file(const std::string& path);

/// Row-oriented table with a stable header contract; cells are optional
/// so sweeps can record sentinels (the CLI emits an empty CSV cell and a
/// JSON null).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::optional<double>>> rows;
};

std::string table_to_csv(const Table& t);
std::string table_to_json(const Table& t);  // includes schema_version
void write_table(const std::string& path, const Table& t, bool json);

}  // namespace spinmagic
