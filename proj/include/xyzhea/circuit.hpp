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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xyzhea/gates.hpp"
#include "xyzhea/statevector.hpp"

namespace xyzhea {

/// angle = coefficient * params[index] + constant; a missing index is a
/// fixed angle.
struct ParamExpr {
    std::optional<int> index;
    double coefficient = 1.0;
    double constant = 0.0;

    [[nodiscard]] static ParamExpr fixed(double angle) { return {std::nullopt, 1.0, angle}; }
    [[nodiscard]] static ParamExpr param(int index, double coefficient = 1.0) {
        return {index, coefficient, 0.0};
    }
    [[nodiscard]] ParamExpr negated() const { return {index, -coefficient, -constant}; }
    [[nodiscard]] double eval(std::span<const double> params) const {
        return index ? coefficient * params[static_cast<std::size_t>(*index)] + constant
                     : constant;
    }
    [[nodiscard]] std::string to_string() const;
};

struct GateOp {
    GateKind kind = GateKind::Rx;
    std::vector<int> qubits;
    std::vector<ParamExpr> angles;

    [[nodiscard]] GateMatrix matrix(std::span<const double> params) const;
};

/// What a parameter controls, used to embed parameters across system sizes.
enum class ParamRole { RotX, RotY, RotZ, FsimTheta, FsimPhi, ExchangeTheta, ExchangePhi };

struct ParamSlot {
    int layer = 0;        // 0 = initial rotation column of the Ry family
    ParamRole role = ParamRole::RotY;
    int site = 0;         // qubit index, or lower qubit of the bond
};

/// Ordered gate list over a shared parameter vector. Time order = list order.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(int n_qubits) : n_qubits_(n_qubits) {}

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] int n_params() const noexcept { return static_cast<int>(slots_.size()); }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept { return ops_; }
    [[nodiscard]] const std::vector<ParamSlot> &slots() const noexcept { return slots_; }
    /// Op index where each repeating unit begins.
    [[nodiscard]] const std::vector<std::size_t> &layer_boundaries() const noexcept {
        return layer_boundaries_;
    }
    /// First parameter index of each layer (same indexing as slots' `layer`
    /// values present in the circuit).
    [[nodiscard]] int layer_param_offset(int layer) const;

    int add_param(ParamSlot slot);
    void add_op(GateOp op);
    void begin_layer() { layer_boundaries_.push_back(ops_.size()); }

    /// Every index in range and every parameter referenced. Throws InternalError.
    void validate() const;

  private:
    int n_qubits_ = 0;
    std::vector<GateOp> ops_;
    std::vector<ParamSlot> slots_;
    std::vector<std::size_t> layer_boundaries_;
};

/// Applies the circuit to `state` in place.
void run_in_place(const Circuit &circuit, std::span<const double> params, Statevector &state);
[[nodiscard]] Statevector run(const Circuit &circuit, std::span<const double> params,
                              const Statevector &reference);

/// One op per line: "kind q[,q] angle-expr ...".
[[nodiscard]] std::string dump(const Circuit &circuit);

struct ResourceCounts {
    int n_params = 0;
    int n_two_qubit = 0;
    int n_single_qubit = 0;
    int asap_depth = 0;

    friend bool operator==(const ResourceCounts &, const ResourceCounts &) = default;
};

/// Counts read off the circuit; depth by as-soon-as-possible scheduling with
/// every library gate (fSim and A included) occupying one time slot.
[[nodiscard]] ResourceCounts count_resources(const Circuit &circuit);

} // namespace xyzhea
