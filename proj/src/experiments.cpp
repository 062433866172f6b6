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
#include "xyzhea/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "xyzhea/eigensolver.hpp"
#include "xyzhea/error.hpp"
#include "xyzhea/gradient.hpp"

namespace xyzhea {

ConvergenceSweep convergence_sweep(const PauliSum &h, AnsatzKind kind, const std::string &reference,
                                   int max_layers, const LayerwiseOptions &options, int n_sites) {
    if (max_layers < 1) {
        throw InputError("max_layers must be >= 1");
    }
    ConvergenceSweep sweep;
    sweep.exact_energy = exact_ground_state(h).energy;
    sweep.run = layerwise_vqe(h, kind, reference, max_layers, options);
    for (const LayerRecord &rec : sweep.run.layers) {
        const ResourceCounts counts = count_resources(build_ansatz(kind, h.n_qubits(), rec.layer));
        ConvergenceRow row;
        row.layer = rec.layer;
        row.energy = rec.energy;
        row.error_vs_exact = rec.energy - sweep.exact_energy;
        if (n_sites > 0) {
            row.per_site_energy = rec.energy / n_sites;
        }
        row.n_params = counts.n_params;
        row.n_two_qubit = counts.n_two_qubit;
        row.asap_depth = counts.asap_depth;
        row.iterations = rec.iterations;
        row.wall_time_s = rec.wall_time_s;
        sweep.rows.push_back(row);
    }
    return sweep;
}

AccuracyResult layers_to_accuracy(const PauliSum &h, AnsatzKind kind, const std::string &reference,
                                  double tolerance, int max_layers, const LayerwiseOptions &options,
                                  int n_sites) {
    if (!(tolerance > 0.0)) {
        throw InputError("tolerance must be positive");
    }
    if (max_layers < 1) {
        throw InputError("max_layers must be >= 1");
    }
    AccuracyResult out;
    out.exact_energy = exact_ground_state(h).energy;
    const double scale = n_sites > 0 ? static_cast<double>(n_sites) : 1.0;
    const auto error_of = [&](const LayerRecord &rec) {
        return (rec.energy - out.exact_energy) / scale;
    };
    LayerwiseOptions opts = options;
    opts.should_stop = [&](const LayerRecord &rec) { return error_of(rec) <= tolerance; };
    const LayerwiseResult run = layerwise_vqe(h, kind, reference, max_layers, opts);
    const LayerRecord &last = run.layers.back();
    out.layers = last.layer;
    out.error = error_of(last);
    out.reached = out.error <= tolerance;
    out.counts = count_resources(build_ansatz(kind, h.n_qubits(), last.layer));
    return out;
}

PowerLaw power_law_fit(std::span<const std::pair<double, double>> points) {
    if (points.size() < 3) {
        throw InputError("power-law fit needs at least 3 points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &[n, v] : points) {
        if (!(n > 0.0) || !(v > 0.0)) {
            throw InputError("power-law fit needs positive N and values");
        }
        const double x = std::log(n);
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(points.size());
    const double denom = m * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) {
        throw InputError("power-law fit needs at least two distinct N");
    }
    PowerLaw fit;
    fit.exponent = (m * sxy - sx * sy) / denom;
    fit.prefactor = std::exp((sy - fit.exponent * sx) / m);
    return fit;
}

CompositeCheck composite_check(AnsatzKind kind, const PauliSum &h_sub, const std::string &reference_sub,
                               int layers, std::span<const double> params_sub,
                               const Statevector &ground_sub) {
    const int n = h_sub.n_qubits();
    const Circuit sub = build_ansatz(kind, n, layers);
    const Circuit composite = build_ansatz(kind, 2 * n, layers);
    const std::vector<double> params_c =
        kind == AnsatzKind::XYZ2F
            ? compose_subsystem_params(params_sub, params_sub, n, n, layers)
            : embed_subsystem_params(kind, params_sub, params_sub, n, n, layers);
    const Statevector psi_sub = run(sub, params_sub, basis_state(n, reference_sub));
    const Statevector psi_c = run(composite, params_c, basis_state(2 * n, reference_sub + reference_sub));
    // The decoupled copies have the product of the subsystem ground states as
    // ground state.
    const Statevector ground_c = tensor_product(ground_sub, ground_sub);

    CompositeCheck c;
    c.energy_sub = expectation(h_sub, psi_sub) / n;
    c.energy_composite = expectation(disjoint_union(h_sub, h_sub), psi_c) / (2 * n);
    c.fidelity_sub = fidelity(psi_sub, ground_sub);
    c.fidelity_composite = fidelity(psi_c, ground_c);
    c.factorization_fidelity = fidelity(psi_c, tensor_product(psi_sub, psi_sub));
    return c;
}

std::vector<SizeConsistencyRow> size_consistency_test(AnsatzKind kind, int n_sub,
                                                      std::span<const int> layer_list, double J,
                                                      const LayerwiseOptions &options) {
    if (layer_list.empty()) {
        throw InputError("size-consistency needs at least one layer count");
    }
    for (int l : layer_list) {
        if (l < 1) {
            throw InputError("layer counts must be >= 1");
        }
    }
    const PauliSum h = heisenberg_1d(n_sub, J);
    const std::string reference = neel_bitstring(n_sub);
    const GroundState ground = exact_ground_state(h);
    const int l_max = *std::max_element(layer_list.begin(), layer_list.end());
    const LayerwiseResult run = layerwise_vqe(h, kind, reference, l_max, options);

    std::vector<SizeConsistencyRow> rows;
    for (int l : layer_list) {
        const LayerRecord &rec = run.layers[static_cast<std::size_t>(l - 1)];
        const CompositeCheck c = composite_check(kind, h, reference, l, rec.params, ground.state);
        SizeConsistencyRow row;
        row.kind = kind;
        row.layers = l;
        row.e_sub = c.energy_sub;
        row.e_composite = c.energy_composite;
        row.infidelity_sub = 1.0 - c.fidelity_sub;
        row.infidelity_composite = 1.0 - c.fidelity_composite;
        rows.push_back(row);
    }
    return rows;
}

std::string_view variance_mode_name(VarianceMode mode) noexcept {
    return mode == VarianceMode::Random ? "random" : "layerwise";
}

VarianceMode parse_variance_mode(std::string_view name) {
    if (name == "random") {
        return VarianceMode::Random;
    }
    if (name == "layerwise") {
        return VarianceMode::Layerwise;
    }
    throw InputError("unknown variance mode '" + std::string(name) + "' (random, layerwise)");
}

std::pair<int, int> tracked_parameters(const Circuit &circuit) {
    if (circuit.n_params() == 0) {
        throw InputError("circuit has no parameters");
    }
    return {0, circuit.layer_param_offset(circuit.slots().back().layer)};
}

double sample_variance(std::span<const double> values) {
    if (values.size() < 2) {
        throw InputError("variance needs at least 2 samples");
    }
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return ss / static_cast<double>(values.size() - 1);
}

std::vector<VarianceRow> barren_plateau_variance(AnsatzKind kind, std::span<const int> n_list,
                                                 std::span<const int> layer_list, VarianceMode mode,
                                                 const VarianceConfig &config) {
    if (config.samples < 2) {
        throw InputError("need at least 2 samples");
    }
    if (n_list.empty() || layer_list.empty()) {
        throw InputError("empty N or L list");
    }
    std::vector<VarianceRow> rows;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

    for (int n : n_list) {
        const PauliSum h = heisenberg_1d(n, config.J);
        const std::string reference = neel_bitstring(n);
        const Statevector ref = basis_state(n, reference);

        LayerwiseResult fixed;
        if (mode == VarianceMode::Layerwise) {
            const int l_max = *std::max_element(layer_list.begin(), layer_list.end());
            if (l_max >= 2) {
                fixed = layerwise_vqe(h, kind, reference, l_max - 1, config.layerwise);
            }
        }

        for (int l : layer_list) {
            if (l < 1) {
                throw InputError("layer counts must be >= 1");
            }
            const Circuit circuit = build_ansatz(kind, n, l);
            const auto [first, last] = tracked_parameters(circuit);
            std::vector<double> base;
            if (mode == VarianceMode::Layerwise && l >= 2) {
                base = fixed.layers[static_cast<std::size_t>(l - 2)].params;
            }
            // Draw sequentially so results do not depend on the worker count.
            std::vector<std::vector<double>> samples(static_cast<std::size_t>(config.samples));
            for (auto &p : samples) {
                p = base;
                while (static_cast<int>(p.size()) < circuit.n_params()) {
                    p.push_back(angle(rng));
                }
            }
            std::vector<double> g_first(samples.size());
            std::vector<double> g_last(samples.size());
            parallel_for(config.samples, resolve_workers(config.workers), [&](int i) {
                const auto idx = static_cast<std::size_t>(i);
                const EnergyGradient eg = energy_and_gradient(h, circuit, samples[idx], ref);
                g_first[idx] = eg.gradient[static_cast<std::size_t>(first)];
                g_last[idx] = eg.gradient[static_cast<std::size_t>(last)];
            });
            for (const auto &[id, values] :
                 {std::pair{"theta_1_1", &g_first}, std::pair{"theta_L_1", &g_last}}) {
                VarianceRow row;
                row.kind = kind;
                row.n_qubits = n;
                row.layers = l;
                row.parameter_id = id;
                row.mode = mode;
                row.sample_count = config.samples;
                row.variance = sample_variance(*values);
                rows.push_back(row);
            }
        }
    }
    return rows;
}

} // namespace xyzhea
