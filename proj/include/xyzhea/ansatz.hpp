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

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xyzhea/circuit.hpp"

namespace xyzhea {

enum class AnsatzKind { RyLinear, RyFull, RyRzFull, ASWAP, XYZ1F, XYZ2F };

inline constexpr std::array<AnsatzKind, 6> kAllAnsatzKinds = {
    AnsatzKind::RyLinear, AnsatzKind::RyFull, AnsatzKind::RyRzFull,
    AnsatzKind::ASWAP,    AnsatzKind::XYZ1F,  AnsatzKind::XYZ2F};

/// CLI spelling: ry_linear, ry_full, ryrz_full, aswap, xyz1f, xyz2f.
[[nodiscard]] std::string_view ansatz_name(AnsatzKind kind) noexcept;
[[nodiscard]] AnsatzKind parse_ansatz_kind(std::string_view name);

/// True for the kinds whose layer reduces to the identity at zero parameters.
[[nodiscard]] constexpr bool has_identity_layer(AnsatzKind kind) noexcept {
    return kind == AnsatzKind::XYZ1F || kind == AnsatzKind::XYZ2F;
}

/// Builds `layers` repeating units on `n_qubits` qubits. The Ry family also
/// emits the initial rotation column (parameter layer 0). Parameters of layer
/// l always follow those of layer l-1, so a circuit with L+1 layers extends
/// the parameter vector of the L-layer circuit.
///
/// XYZ layer, in time order: Rx(a_n) Ry(b_n) on every qubit; down staircase of
/// U2(theta_k, phi_k) on bonds (k, k+1), each realised as Ry(-phi_k/2) on
/// k+1, fSim(theta_k, phi_k), Ry(phi_k/2) on k+1; Rz(g_n) on every qubit
/// (XYZ2F) or a single Rz(g) on qubit N-1 (XYZ1F); the mirrored up staircase
/// with negated angles; Ry(-b_n) Rx(-a_n). Per-layer parameter order is
/// (a_0, b_0, ..., a_{N-1}, b_{N-1}, theta_0, phi_0, ..., g...).
[[nodiscard]] Circuit build_ansatz(AnsatzKind kind, int n_qubits, int layers);

/// Parameters per repeating unit and in the Ry-family prefix column.
[[nodiscard]] int params_per_layer(AnsatzKind kind, int n_qubits);
[[nodiscard]] int prefix_params(AnsatzKind kind, int n_qubits);

/// Closed forms of the usual HEA cost table: (N_param, N_2, N_1, D).
[[nodiscard]] ResourceCounts table_counts(AnsatzKind kind, int n_qubits, int layers);

/// Counts read off the built circuit. Requires n_qubits >= 3.
[[nodiscard]] ResourceCounts resource_counts(AnsatzKind kind, int n_qubits, int layers);

/// Composite-system parameters from two subsystem vectors. Slots are matched
/// by (layer, role, site); subsystem B's sites are shifted by n_a; parameters
/// without a counterpart (boundary bond) are 0.
[[nodiscard]] std::vector<double> embed_subsystem_params(AnsatzKind kind,
                                                         std::span<const double> params_a,
                                                         std::span<const double> params_b,
                                                         int n_a, int n_b, int layers);

/// XYZ2F special case: boundary U2 = I, so the composite circuit factorizes
/// exactly into the two subsystem circuits.
[[nodiscard]] std::vector<double> compose_subsystem_params(std::span<const double> params_a,
                                                           std::span<const double> params_b,
                                                           int n_a, int n_b, int layers);

/// Single-qubit target amplitudes (c0, c1).
using QubitState = std::array<cplx, 2>;

/// One XYZ2F layer that maps `reference` to the product of `targets` (up to
/// global phase): all U2 parameters zero, each qubit's (a, b, g) chosen so
/// Rx(-a) Ry(-b) Rz(g) Ry(b) Rx(a) rotates the reference bit onto its target.
[[nodiscard]] std::vector<double> prepare_product_state(std::span<const QubitState> targets,
                                                        std::string_view reference);

} // namespace xyzhea
