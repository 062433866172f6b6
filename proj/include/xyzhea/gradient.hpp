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

#include <span>
#include <vector>

#include "xyzhea/circuit.hpp"
#include "xyzhea/pauli.hpp"

namespace xyzhea {

struct EnergyGradient {
    double energy = 0.0;
    std::vector<double> gradient;
};

/// <Psi(params)|H|Psi(params)> with |Psi> = circuit |reference>.
[[nodiscard]] double energy(const PauliSum &h, const Circuit &circuit,
                            std::span<const double> params, const Statevector &reference);

/// Energy and exact gradient by a reverse (adjoint) sweep: one forward pass,
/// then each op is undone on both the state and the co-state while
/// 2 Re<lambda|dU/dangle|psi> is accumulated into every parameter the angle
/// depends on (times its coefficient).
[[nodiscard]] EnergyGradient energy_and_gradient(const PauliSum &h, const Circuit &circuit,
                                                 std::span<const double> params,
                                                 const Statevector &reference);

/// Central differences with the given step. Test oracle.
[[nodiscard]] std::vector<double> finite_difference_gradient(const PauliSum &h,
                                                             const Circuit &circuit,
                                                             std::span<const double> params,
                                                             const Statevector &reference,
                                                             double step = 1e-5);

} // namespace xyzhea
