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
#include "xyzhea/pauli_compiler.hpp"

#include <cctype>
#include <numbers>

#include "xyzhea/error.hpp"

namespace xyzhea {

std::string_view bond_gate_name(BondGate g) noexcept {
    switch (g) {
    case BondGate::Identity: return "I";
    case BondGate::CNOT: return "CNOT";
    case BondGate::iSWAP: return "iSWAP";
    }
    return "?";
}

std::string parse_pauli_string(std::string_view text, int n_qubits) {
    if (n_qubits < 1) {
        throw InputError("n_qubits must be positive");
    }
    const bool dense = static_cast<int>(text.size()) == n_qubits &&
                       text.find_first_not_of("IXYZ") == std::string_view::npos;
    if (dense) {
        return std::string(text);
    }
    std::string out(static_cast<std::size_t>(n_qubits), 'I');
    std::size_t i = 0;
    while (i < text.size()) {
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (letter != 'I' && letter != 'X' && letter != 'Y' && letter != 'Z') {
            throw InputError("bad Pauli letter in '" + std::string(text) + "'");
        }
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
        }
        if (j == i) {
            throw InputError("missing qubit index in '" + std::string(text) + "'");
        }
        const int q = std::stoi(std::string(text.substr(i, j - i)));
        if (q < 0 || q >= n_qubits) {
            throw InputError("qubit index " + std::to_string(q) + " out of range");
        }
        if (out[static_cast<std::size_t>(q)] != 'I') {
            throw InputError("qubit " + std::to_string(q) + " listed twice");
        }
        out[static_cast<std::size_t>(q)] = letter;
        i = j;
    }
    return out;
}

CompiledRotation compile_pauli_rotation(std::string_view pauli, double theta, AnsatzKind kind) {
    if (kind != AnsatzKind::XYZ1F && kind != AnsatzKind::XYZ2F) {
        throw InputError("Pauli rotations compile only onto xyz1f/xyz2f layers");
    }
    const int n = static_cast<int>(pauli.size());
    if (n < 1) {
        throw InputError("empty Pauli string");
    }
    int first = -1, last = -1;
    for (int q = 0; q < n; ++q) {
        const char ch = pauli[static_cast<std::size_t>(q)];
        if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
            throw InputError("invalid Pauli letter in '" + std::string(pauli) + "'");
        }
        if (ch != 'I') {
            if (first < 0) first = q;
            last = q;
        }
    }
    if (first < 0) {
        throw InputError("identity string has no nontrivial rotation");
    }
    const Circuit layer = build_ansatz(kind, n, 1);
    CompiledRotation out;
    out.params.assign(static_cast<std::size_t>(layer.n_params()), 0.0);
    out.carrier = kind == AnsatzKind::XYZ2F ? last : n - 1;
    out.bonds.assign(static_cast<std::size_t>(n - 1), BondGate::Identity);
    for (int k = 0; k + 1 < n; ++k) {
        if (k < first || k + 1 > out.carrier) {
            continue;
        }
        out.bonds[static_cast<std::size_t>(k)] =
            pauli[static_cast<std::size_t>(k + 1)] != 'I' ? BondGate::CNOT : BondGate::iSWAP;
    }
    for (int i = 0; i < layer.n_params(); ++i) {
        const ParamSlot &s = layer.slots()[static_cast<std::size_t>(i)];
        double &v = out.params[static_cast<std::size_t>(i)];
        switch (s.role) {
        case ParamRole::RotX:
            if (pauli[static_cast<std::size_t>(s.site)] == 'Y') v = std::numbers::pi / 2;
            break;
        case ParamRole::RotY:
            if (pauli[static_cast<std::size_t>(s.site)] == 'X') v = -std::numbers::pi / 2;
            break;
        case ParamRole::RotZ:
            if (s.site == out.carrier) v = -2.0 * theta;
            break;
        case ParamRole::FsimTheta:
            if (out.bonds[static_cast<std::size_t>(s.site)] == BondGate::iSWAP) {
                v = -std::numbers::pi / 2;
            }
            break;
        case ParamRole::FsimPhi:
            if (out.bonds[static_cast<std::size_t>(s.site)] == BondGate::CNOT) {
                v = std::numbers::pi;
            }
            break;
        default:
            break;
        }
    }
    return out;
}

} // namespace xyzhea
