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

#include <string>
#include <string_view>
#include <vector>

#include "xyzhea/ansatz.hpp"

namespace xyzhea {

/// Setting of one U2 bond gate chosen by the compiler.
enum class BondGate { Identity, CNOT, iSWAP };

[[nodiscard]] std::string_view bond_gate_name(BondGate g) noexcept;

struct CompiledRotation {
    std::vector<double> params;   // one layer of the requested kind
    std::vector<BondGate> bonds;  // bond k acts on (k, k+1)
    int carrier = 0;              // qubit holding the accumulated parity
};

/// One XYZ1F/XYZ2F layer equal to exp(i theta P) up to global phase.
///
/// Basis column: Y -> Rx(pi/2), X -> Ry(-pi/2), I/Z -> identity. Staircase:
/// I until the first support qubit, then CNOT (U2(0, pi)) onto every support
/// qubit and iSWAP (U2(-pi/2, 0)) to carry parity across non-support qubits.
/// XYZ2F stops at the last support qubit; XYZ1F carries parity to qubit N-1
/// where its only Rz lives. Central Rz(-2 theta) on the carrier.
[[nodiscard]] CompiledRotation compile_pauli_rotation(std::string_view pauli, double theta,
                                                      AnsatzKind kind);

/// Parses "Z0Z1Z2Z4Z5"-style sparse strings (letter followed by qubit index)
/// or dense "ZZZIZZ" strings into a dense string of length n_qubits.
[[nodiscard]] std::string parse_pauli_string(std::string_view text, int n_qubits);

} // namespace xyzhea
