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
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "xyzhea/ansatz.hpp"
#include "xyzhea/bfgs.hpp"
#include "xyzhea/pauli.hpp"

namespace xyzhea {

/// Step sizes for the new-layer random starts. Must contain 0 so that one
/// start reproduces the previous layer's energy exactly.
struct RestartSpec {
    std::vector<double> step_sizes = default_step_sizes();
    std::uint64_t seed = 1;

    /// {2 pi / 2^k : k = 0..5} followed by 0.
    [[nodiscard]] static std::vector<double> default_step_sizes();
    /// `count` starts: the default nonzero sizes cycled, then 0. count = 7
    /// gives the default list.
    [[nodiscard]] static RestartSpec with_count(int count, std::uint64_t seed);
    void validate() const;
};

/// u / max|u_i| * delta with u uniform in [-1, 1]^dim.
[[nodiscard]] std::vector<double> random_layer_params(int dim, double delta, std::mt19937_64 &rng);

struct LayerRecord {
    int layer = 0;
    double energy = 0.0;
    std::vector<double> params;
    double step_size = 0.0;   // winning restart
    int iterations = 0;       // BFGS iterations of the winning restart
    double wall_time_s = 0.0; // whole layer, all restarts
    int failed_restarts = 0;
};

struct LayerwiseResult {
    AnsatzKind kind = AnsatzKind::XYZ2F;
    int n_qubits = 0;
    std::string reference;
    std::vector<LayerRecord> layers;
    RestartSpec restarts;
};

struct LayerwiseOptions {
    BfgsConfig bfgs;
    RestartSpec restarts;
    int workers = 1;
    /// Called after each completed layer.
    std::function<void(const LayerRecord &)> on_layer;
    /// Ends the sweep early when it returns true for a completed layer.
    std::function<bool(const LayerRecord &)> should_stop;
};

/// Layer-by-layer VQE: for L = 1..L_max the previous optimum is kept for
/// layers 1..L-1, one start per step size is drawn for layer L, every start
/// is optimized jointly over all parameters, and the lowest energy wins
/// (ties go to the smaller step size).
[[nodiscard]] LayerwiseResult layerwise_vqe(const PauliSum &h, AnsatzKind kind,
                                            const std::string &reference, int max_layers,
                                            const LayerwiseOptions &options = {});

/// Effective worker count: explicit value if positive, else XYZHEA_WORKERS,
/// else hardware concurrency.
[[nodiscard]] int resolve_workers(int requested);

/// Runs tasks 0..count-1 on up to `workers` threads.
void parallel_for(int count, int workers, const std::function<void(int)> &task);

} // namespace xyzhea
