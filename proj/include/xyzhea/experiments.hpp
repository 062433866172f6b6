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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xyzhea/ansatz.hpp"
#include "xyzhea/circuit.hpp"
#include "xyzhea/layerwise.hpp"
#include "xyzhea/pauli.hpp"

namespace xyzhea {

/// 1 mH, in the Hamiltonian's energy unit.
inline constexpr double kChemicalAccuracy = 1.0e-3;

struct ConvergenceRow {
    int layer = 0;
    double energy = 0.0;
    double error_vs_exact = 0.0;
    std::optional<double> per_site_energy;
    int n_params = 0;
    int n_two_qubit = 0;
    int asap_depth = 0;
    int iterations = 0;
    double wall_time_s = 0.0;

    bool operator==(const ConvergenceRow &) const = default;
};

struct ConvergenceSweep {
    double exact_energy = 0.0;
    std::vector<ConvergenceRow> rows;
    LayerwiseResult run;
};

/// Layerwise VQE up to `max_layers`, one row per layer, errors against the
/// exact ground energy of `h`. `n_sites` > 0 fills per_site_energy.
[[nodiscard]] ConvergenceSweep convergence_sweep(const PauliSum &h, AnsatzKind kind,
                                                 const std::string &reference, int max_layers,
                                                 const LayerwiseOptions &options,
                                                 int n_sites = 0);

struct AccuracyResult {
    bool reached = false;
    int layers = 0;        // smallest L meeting the tolerance, else the last L tried
    double error = 0.0;    // at `layers`, divided by n_sites when per-site
    ResourceCounts counts; // of the circuit at `layers`
    double exact_energy = 0.0;
};

/// Smallest L <= max_layers with (E_L - E_exact) / scale <= tolerance, where
/// scale is n_sites if positive and 1 otherwise. Not reaching the tolerance
/// is reported through `reached`, not thrown.
[[nodiscard]] AccuracyResult layers_to_accuracy(const PauliSum &h, AnsatzKind kind,
                                                const std::string &reference, double tolerance,
                                                int max_layers, const LayerwiseOptions &options,
                                                int n_sites = 0);

struct PowerLaw {
    double prefactor = 0.0;
    double exponent = 0.0;
};

/// Least squares of log(value) = log(a) + b log(N).
[[nodiscard]] PowerLaw power_law_fit(std::span<const std::pair<double, double>> points);

struct SizeConsistencyRow {
    AnsatzKind kind = AnsatzKind::XYZ2F;
    int layers = 0;
    double e_sub = 0.0;       // per site
    double e_composite = 0.0; // per site
    double infidelity_sub = 0.0;
    double infidelity_composite = 0.0;

    bool operator==(const SizeConsistencyRow &) const = default;
};

/// Energies and infidelities of a Heisenberg chain of n_sub sites and of two
/// decoupled copies, the composite state built from the optimized subsystem
/// parameters (exact composition for XYZ2F, positional embedding with zero
/// boundary parameters otherwise).
[[nodiscard]] std::vector<SizeConsistencyRow>
size_consistency_test(AnsatzKind kind, int n_sub, std::span<const int> layer_list, double J,
                      const LayerwiseOptions &options);

/// Energy and fidelity against the exact ground state for given subsystem
/// parameters, before and after composition. Used by size_consistency_test
/// and directly with random parameters.
struct CompositeCheck {
    double energy_sub = 0.0;
    double energy_composite = 0.0;
    double fidelity_sub = 0.0;
    double fidelity_composite = 0.0;
    /// |<composite|psi_sub (x) psi_sub>|^2
    double factorization_fidelity = 0.0;
};

[[nodiscard]] CompositeCheck composite_check(AnsatzKind kind, const PauliSum &h_sub,
                                             const std::string &reference_sub, int layers,
                                             std::span<const double> params_sub,
                                             const Statevector &ground_sub);

enum class VarianceMode { Random, Layerwise };

[[nodiscard]] std::string_view variance_mode_name(VarianceMode mode) noexcept;
[[nodiscard]] VarianceMode parse_variance_mode(std::string_view name);

struct VarianceRow {
    AnsatzKind kind = AnsatzKind::XYZ2F;
    int n_qubits = 0;
    int layers = 0;
    std::string parameter_id; // "theta_1_1" or "theta_L_1"
    VarianceMode mode = VarianceMode::Random;
    int sample_count = 0;
    double variance = 0.0;

    bool operator==(const VarianceRow &) const = default;
};

struct VarianceConfig {
    int samples = 100;
    std::uint64_t seed = 1;
    double J = -1.0;
    int workers = 1;
    /// Optimizer settings for the fixed layers in layerwise mode.
    LayerwiseOptions layerwise;
};

/// Parameter indices of theta_{1,1} (first parameter of the circuit) and
/// theta_{L,1} (first parameter of the last repeating unit).
[[nodiscard]] std::pair<int, int> tracked_parameters(const Circuit &circuit);

/// Sample variance (n - 1 denominator) of dE/dtheta_{1,1} and dE/dtheta_{L,1}
/// for Heisenberg chains from the Neel state. Random mode draws every
/// parameter uniformly in [-pi, pi]; layerwise mode fixes layers 1..L-1 at
/// their layerwise optimum and draws only the last layer. Two rows per
/// (N, L).
[[nodiscard]] std::vector<VarianceRow> barren_plateau_variance(AnsatzKind kind,
                                                               std::span<const int> n_list,
                                                               std::span<const int> layer_list,
                                                               VarianceMode mode,
                                                               const VarianceConfig &config);

[[nodiscard]] double sample_variance(std::span<const double> values);

} // namespace xyzhea
