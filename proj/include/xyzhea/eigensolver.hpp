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

#include <Eigen/Dense>

#include "xyzhea/pauli.hpp"
#include "xyzhea/statevector.hpp"

namespace xyzhea {

enum class EigenMethod { Automatic, Dense, Lanczos };

struct GroundState {
    double energy = 0.0;
    Statevector state;
    double residual = 0.0; // ||H v - E v||
    EigenMethod method = EigenMethod::Automatic;
};

/// Largest qubit count handled by dense diagonalization under Automatic.
inline constexpr int kDenseMaxQubits = 10;

struct LanczosOptions {
    int krylov_dim = 60;
    int max_restarts = 500;
    double tolerance = 1e-10;
    unsigned seed = 12345;
};

/// Lowest eigenpair of `h`. Dense for small systems, restarted Lanczos with
/// full reorthogonalization otherwise. Throws NumericalError when the
/// residual does not reach 1e-8.
[[nodiscard]] GroundState exact_ground_state(const PauliSum &h,
                                             EigenMethod method = EigenMethod::Automatic,
                                             const LanczosOptions &options = {});

/// Dense matrix of `h` (row/column = little-endian basis index).
[[nodiscard]] Eigen::MatrixXcd dense_matrix(const PauliSum &h);

} // namespace xyzhea
