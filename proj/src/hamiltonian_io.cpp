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
#include "xyzhea/hamiltonian_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "xyzhea/error.hpp"

namespace xyzhea {

std::optional<std::string> HamiltonianFile::reference_bitstring() const {
    if (metadata.is_object() && metadata.contains("reference_bitstring") &&
        metadata["reference_bitstring"].is_string()) {
        return metadata["reference_bitstring"].get<std::string>();
    }
    return std::nullopt;
}

std::optional<double> HamiltonianFile::metadata_number(const std::string &key) const {
    if (metadata.is_object() && metadata.contains(key) && metadata[key].is_number()) {
        return metadata[key].get<double>();
    }
    return std::nullopt;
}

HamiltonianFile parse_hamiltonian(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw ParseError("Hamiltonian document must be a JSON object");
    }
    if (!doc.contains("format_version") || !doc["format_version"].is_number_integer()) {
        throw ParseError("missing integer 'format_version'");
    }
    const int version = doc["format_version"].get<int>();
    if (version != kHamiltonianFormatVersion) {
        throw ParseError("unsupported format_version " + std::to_string(version));
    }
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
        throw ParseError("missing integer 'n_qubits'");
    }
    const int n = doc["n_qubits"].get<int>();
    if (n < 1 || n > 30) {
        throw ParseError("n_qubits out of range: " + std::to_string(n));
    }
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError("missing array 'terms'");
    }
    std::vector<PauliTerm> terms;
    const auto &arr = doc["terms"];
    for (std::size_t t = 0; t < arr.size(); ++t) {
        const auto &entry = arr[t];
        const std::string where = "term " + std::to_string(t) + ": ";
        if (!entry.is_object()) {
            throw ParseError(where + "expected an object");
        }
        if (!entry.contains("pauli") || !entry["pauli"].is_string()) {
            throw ParseError(where + "missing string 'pauli'");
        }
        if (!entry.contains("coeff")) {
            throw ParseError(where + "missing 'coeff'");
        }
        const auto &coeff = entry["coeff"];
        if (!coeff.is_number()) {
            throw ParseError(where + "coefficient must be a real number (complex coefficients "
                                     "are rejected; Hamiltonians must be Hermitian)");
        }
        const double c = coeff.get<double>();
        if (!std::isfinite(c)) {
            throw ParseError(where + "coefficient is not finite");
        }
        std::string pauli = entry["pauli"].get<std::string>();
        if (static_cast<int>(pauli.size()) != n) {
            throw ParseError(where + "Pauli string has length " + std::to_string(pauli.size()) +
                             ", expected " + std::to_string(n));
        }
        for (char ch : pauli) {
            if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
                throw ParseError(where + "invalid Pauli letter '" + std::string(1, ch) + "'");
            }
        }
        terms.push_back({c, std::move(pauli)});
    }
    HamiltonianFile file;
    file.format_version = version;
    file.hamiltonian = PauliSum(n, std::move(terms));
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) {
            throw ParseError("'metadata' must be an object");
        }
        file.metadata = doc["metadata"];
    }
    if (auto ref = file.reference_bitstring()) {
        if (static_cast<int>(ref->size()) != n ||
            ref->find_first_not_of("01") != std::string::npos) {
            throw ParseError("metadata reference_bitstring '" + *ref +
                             "' is not a bitstring of length n_qubits");
        }
    }
    return file;
}

nlohmann::json to_json(const HamiltonianFile &file) {
    nlohmann::json doc;
    doc["format_version"] = file.format_version;
    doc["n_qubits"] = file.hamiltonian.n_qubits();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &t : file.hamiltonian.terms()) {
        terms.push_back({{"pauli", t.pauli}, {"coeff", t.coeff}});
    }
    doc["terms"] = std::move(terms);
    doc["metadata"] = file.metadata.is_null() ? nlohmann::json::object() : file.metadata;
    return doc;
}

HamiltonianFile load_hamiltonian(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open Hamiltonian file " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return parse_hamiltonian(doc);
}

void save_hamiltonian(const HamiltonianFile &file, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write Hamiltonian file " + path.string());
    }
    // nlohmann emits the shortest round-trip representation (up to 17 digits).
    out << to_json(file).dump(1) << '\n';
}

} // namespace xyzhea
