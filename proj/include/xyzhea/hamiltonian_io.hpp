// Copyright 2026 The xyzhea Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "xyzhea/pauli.hpp"

namespace xyzhea {

inline constexpr int kHamiltonianFormatVersion = 1;

/// On-disk Hamiltonian: a PauliSum plus free-form metadata (geometry,
/// orbital type, reference bitstring, classical reference energies).
struct HamiltonianFile {
    int format_version = kHamiltonianFormatVersion;
    PauliSum hamiltonian;
    nlohmann::json metadata = nlohmann::json::object();

    [[nodiscard]] std::optional<std::string> reference_bitstring() const;
    [[nodiscard]] std::optional<double> metadata_number(const std::string &key) const;
};

[[nodiscard]] HamiltonianFile parse_hamiltonian(const nlohmann::json &doc);
[[nodiscard]] nlohmann::json to_json(const HamiltonianFile &file);

/// Throws ParseError naming the offending term index on schema violations.
[[nodiscard]] HamiltonianFile load_hamiltonian(const std::filesystem::path &path);
void save_hamiltonian(const HamiltonianFile &file, const std::filesystem::path &path);

} // namespace xyzhea
