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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xyzhea/statevector.hpp"

namespace xyzhea {

/// One weighted Pauli string. Character n of `pauli` acts on qubit n.
struct PauliTerm {
    double coeff = 0.0;
    std::string pauli;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

/// Real-weighted sum of N-qubit Pauli strings. Immutable once built; the
/// constructor validates letters and lengths and precomputes bit masks for
/// fast application.
class PauliSum {
  public:
    PauliSum() = default;
    PauliSum(int n_qubits, std::vector<PauliTerm> terms);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    /// Duplicate strings merged (first-occurrence order), exact zeros dropped.
    [[nodiscard]] PauliSum normalized() const;
    [[nodiscard]] PauliSum operator+(const PauliSum &rhs) const;
    [[nodiscard]] PauliSum scaled(double factor) const;

    /// True when every term has an even number of Y letters, i.e. the matrix
    /// is real symmetric in the computational basis.
    [[nodiscard]] bool is_real() const noexcept;

    /// out = H |in>. `out` is resized/overwritten.
    void apply(const Statevector &in, Statevector &out) const;

    struct MaskedTerm {
        cplx weight;           // coeff * i^{#Y}
        std::uint64_t sign;    // Z and Y positions
    };
    struct FlipGroup {
        std::uint64_t flip;    // X and Y positions
        std::vector<MaskedTerm> terms;
    };
    [[nodiscard]] const std::vector<FlipGroup> &groups() const noexcept { return groups_; }

    friend bool operator==(const PauliSum &a, const PauliSum &b) {
        return a.n_qubits_ == b.n_qubits_ && a.terms_ == b.terms_;
    }

  private:
    int n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
    std::vector<FlipGroup> groups_;
};

/// H = -J/2 sum_n (X_n X_{n+1} + Y_n Y_{n+1} + Z_n Z_{n+1}), open chain.
[[nodiscard]] PauliSum heisenberg_1d(int n_sites, double J);

/// (n_a + n_b)-qubit sum: `a` on the low qubits, `b` shifted up by n_a.
[[nodiscard]] PauliSum disjoint_union(const PauliSum &a, const PauliSum &b);

/// beta (N_up - n_up)^2 + beta (N_down - n_down)^2 with spin-up occupations on
/// even qubits and spin-down on odd qubits, expanded into Pauli form.
[[nodiscard]] PauliSum number_penalty(int n_qubits, int n_up, int n_down, double beta);

/// <sv|H|sv>. Throws InternalError when the imaginary residue exceeds 1e-10.
[[nodiscard]] double expectation(const PauliSum &h, const Statevector &sv);

/// Néel bitstring "1010..." of the given length.
[[nodiscard]] std::string neel_bitstring(int n_qubits);

} // namespace xyzhea
