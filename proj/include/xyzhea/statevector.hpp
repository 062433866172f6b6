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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "xyzhea/gates.hpp"

namespace xyzhea {

/// Dense N-qubit state. Basis index of bitstring "q0 q1 ... q(N-1)" is
/// sum_n q_n 2^n, so qubit 0 is the least significant bit.
class Statevector {
  public:
    Statevector() = default;
    /// |0...0>.
    explicit Statevector(int n_qubits);
    Statevector(int n_qubits, std::vector<cplx> amplitudes);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<cplx> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] cplx &operator[](std::size_t i) noexcept { return amps_[i]; }
    [[nodiscard]] const cplx &operator[](std::size_t i) const noexcept { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;
    void normalize();

  private:
    int n_qubits_ = 0;
    std::vector<cplx> amps_;
};

/// Computational basis state from a bitstring over {0,1}, character n = qubit n.
[[nodiscard]] Statevector basis_state(int n_qubits, std::string_view bits);
[[nodiscard]] std::uint64_t bitstring_index(std::string_view bits);

/// In-place kernels.
void apply_1q(Statevector &sv, int qubit, const GateMatrix &g);
/// `q_a` is the more significant bit of the 4x4 matrix index.
void apply_2q(Statevector &sv, int q_a, int q_b, const GateMatrix &g);

/// Copying variants.
[[nodiscard]] Statevector applied_1q(Statevector sv, int qubit, const GateMatrix &g);
[[nodiscard]] Statevector applied_2q(Statevector sv, int q_a, int q_b, const GateMatrix &g);

/// <lhs| (embedded g) |rhs> without materialising g|rhs>.
[[nodiscard]] cplx matrix_element_1q(const Statevector &lhs, const Statevector &rhs, int qubit,
                                     const GateMatrix &g);
[[nodiscard]] cplx matrix_element_2q(const Statevector &lhs, const Statevector &rhs, int q_a,
                                     int q_b, const GateMatrix &g);

/// <a|b>, conjugating `a`.
[[nodiscard]] cplx inner_product(const Statevector &a, const Statevector &b);
/// |<a|b>|^2.
[[nodiscard]] double fidelity(const Statevector &a, const Statevector &b);

/// a (x) b with `a` on the low qubits.
[[nodiscard]] Statevector tensor_product(const Statevector &a, const Statevector &b);

} // namespace xyzhea
