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
#include "xyzhea/layerwise.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <thread>

#include "xyzhea/error.hpp"
#include "xyzhea/gradient.hpp"

namespace xyzhea {

std::vector<double> RestartSpec::default_step_sizes() {
    std::vector<double> steps;
    for (int k = 0; k <= 5; ++k) {
        steps.push_back(2.0 * std::numbers::pi / static_cast<double>(1 << k));
    }
    steps.push_back(0.0);
    return steps;
}

RestartSpec RestartSpec::with_count(int count, std::uint64_t seed) {
    if (count < 1) {
        throw InputError("need at least one restart");
    }
    const auto defaults = default_step_sizes();
    RestartSpec spec;
    spec.seed = seed;
    spec.step_sizes.clear();
    for (int i = 1; i < count; ++i) {
        spec.step_sizes.push_back(defaults[static_cast<std::size_t>(i - 1) % (defaults.size() - 1)]);
    }
    spec.step_sizes.push_back(0.0);
    return spec;
}

void RestartSpec::validate() const {
    if (std::find(step_sizes.begin(), step_sizes.end(), 0.0) == step_sizes.end()) {
        throw InputError("restart step sizes must include 0");
    }
    for (double s : step_sizes) {
        if (!(s >= 0.0) || !std::isfinite(s)) {
            throw InputError("restart step sizes must be finite and nonnegative");
        }
    }
}

std::vector<double> random_layer_params(int dim, double delta, std::mt19937_64 &rng) {
    if (dim < 1) {
        throw InputError("layer dimension must be positive");
    }
    if (!(delta >= 0.0)) {
        throw InputError("step size must be nonnegative");
    }
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<double> u(static_cast<std::size_t>(dim));
    double m = 0.0;
    for (double &v : u) {
        v = uniform(rng);
        m = std::max(m, std::abs(v));
    }
    if (delta == 0.0 || m == 0.0) {
        std::fill(u.begin(), u.end(), 0.0);
        return u;
    }
    for (double &v : u) {
        v = v / m * delta;
    }
    // Pin the extreme entry to exactly +-delta.
    auto it = std::max_element(u.begin(), u.end(),
                               [](double a, double b) { return std::abs(a) < std::abs(b); });
    *it = std::copysign(delta, *it);
    return u;
}

int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("XYZHEA_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(int count, int workers, const std::function<void(int)> &task) {
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(i)] = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

LayerwiseResult layerwise_vqe(const PauliSum &h, AnsatzKind kind, const std::string &reference,
                              int max_layers, const LayerwiseOptions &options) {
    if (max_layers < 1) {
        throw InputError("max_layers must be >= 1");
    }
    options.restarts.validate();
    const int n = h.n_qubits();
    const Statevector ref = basis_state(n, reference);
    const int per_layer = params_per_layer(kind, n);
    const int workers = resolve_workers(options.workers);

    LayerwiseResult result;
    result.kind = kind;
    result.n_qubits = n;
    result.reference = reference;
    result.restarts = options.restarts;

    std::mt19937_64 rng(options.restarts.seed);
    // Ry-family prefix column starts at zero.
    std::vector<double> previous(static_cast<std::size_t>(prefix_params(kind, n)), 0.0);

    for (int layer = 1; layer <= max_layers; ++layer) {
        const auto t0 = std::chrono::steady_clock::now();
        const Circuit circuit = build_ansatz(kind, n, layer);
        const auto &steps = options.restarts.step_sizes;
        std::vector<std::vector<double>> starts;
        for (double delta : steps) {
            std::vector<double> x0 = previous;
            const auto fresh = random_layer_params(per_layer, delta, rng);
            x0.insert(x0.end(), fresh.begin(), fresh.end());
            starts.push_back(std::move(x0));
        }

        std::vector<std::optional<BfgsResult>> outcomes(starts.size());
        std::vector<std::string> failures(starts.size());
        parallel_for(static_cast<int>(starts.size()), workers, [&](int i) {
            const auto idx = static_cast<std::size_t>(i);
            const ObjectiveWithGradient objective = [&](std::span<const double> x,
                                                        std::span<double> grad) {
                EnergyGradient eg = energy_and_gradient(h, circuit, x, ref);
                std::copy(eg.gradient.begin(), eg.gradient.end(), grad.begin());
                return eg.energy;
            };
            try {
                outcomes[idx] = minimize_bfgs(objective, starts[idx], options.bfgs);
            } catch (const NumericalError &e) {
                failures[idx] = e.what();
            }
        });

        std::optional<std::size_t> best;
        int failed = 0;
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            if (!outcomes[i]) {
                ++failed;
                std::cerr << "warning: layer " << layer << " restart with step " << steps[i]
                          << " failed: " << failures[i] << '\n';
                continue;
            }
            if (!best) {
                best = i;
                continue;
            }
            const double fi = outcomes[i]->f;
            const double fb = outcomes[*best]->f;
            if (fi < fb || (fi == fb && steps[i] < steps[*best])) {
                best = i;
            }
        }
        if (!best) {
            throw NumericalError("every restart failed at layer " + std::to_string(layer),
                                 std::numeric_limits<double>::quiet_NaN());
        }
        LayerRecord rec;
        rec.layer = layer;
        rec.energy = outcomes[*best]->f;
        rec.params = outcomes[*best]->x;
        rec.step_size = steps[*best];
        rec.iterations = outcomes[*best]->iterations;
        rec.failed_restarts = failed;
        rec.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        previous = rec.params;
        result.layers.push_back(std::move(rec));
        if (options.on_layer) {
            options.on_layer(result.layers.back());
        }
        if (options.should_stop && options.should_stop(result.layers.back())) {
            break;
        }
    }
    return result;
}

} // namespace xyzhea
