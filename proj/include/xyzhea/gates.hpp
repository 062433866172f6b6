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
#include <complex>
#include <span>
#include <string>
#include <string_view>

namespace xyzhea {

using cplx = std::complex<double>;

enum class GateKind { Rx, Ry, Rz, H, X, CNOT, CZ, SWAP, iSWAP, fSim, A, hop };

/// Dense 2x2 or 4x4 unitary. Entries are row-major; for two-qubit gates the
/// row index is 2*b_first + b_second where `first` is the gate's first qubit.
struct GateMatrix {
    int arity = 1;
    std::array<cplx, 16> m{};

    [[nodiscard]] int dim() const noexcept { return arity == 1 ? 2 : 4; }
    [[nodiscard]] cplx &operator()(int r, int c) noexcept { return m[r * dim() + c]; }
    [[nodiscard]] const cplx &operator()(int r, int c) const noexcept {
        return m[r * dim() + c];
    }

    [[nodiscard]] GateMatrix adjoint() const;
    /// Matrix product `*this * rhs` (rhs applied first).
    [[nodiscard]] GateMatrix operator*(const GateMatrix &rhs) const;
    [[nodiscard]] static GateMatrix identity(int arity);
};

[[nodiscard]] int gate_arity(GateKind kind) noexcept;
[[nodiscard]] int gate_angle_count(GateKind kind) noexcept;
[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;
/// Throws InputError for an unknown name.
[[nodiscard]] GateKind parse_gate_kind(std::string_view name);

/// Matrix of a library gate. Rotations follow Rg(t) = exp(-i t G / 2).
/// fSim(theta, phi), A(theta, phi) and hop(phi) use the usual exchange-block
/// conventions; A(0, phi) = diag(1, 1, -1, 1).
[[nodiscard]] GateMatrix gate_matrix(GateKind kind, std::span<const double> angles);
[[nodiscard]] GateMatrix gate_library(std::string_view name, std::span<const double> angles);

/// d gate_matrix / d angles[which].
[[nodiscard]] GateMatrix gate_derivative(GateKind kind, std::span<const double> angles,
                                         int which);

/// U2(theta, phi) = [I (x) Ry(phi/2)] fSim(theta, phi) [I (x) Ry(-phi/2)].
[[nodiscard]] GateMatrix u2_matrix(double theta, double phi);

/// Two single-qubit gates as one 4x4 matrix, `first` on the more significant bit.
[[nodiscard]] GateMatrix kron(const GateMatrix &first, const GateMatrix &second);

} // namespace xyzhea
