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
#include "xyzhea/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string ParamExpr::to_string() const {
    if (!index) {
        return format_number(constant);
    }
    std::string out;
    const std::string t = "t[" + std::to_string(*index) + "]";
    if (coefficient == 1.0) {
        out = t;
    } else if (coefficient == -1.0) {
        out = "-" + t;
    } else {
        out = format_number(coefficient) + "*" + t;
    }
    if (constant > 0.0) {
        out += "+" + format_number(constant);
    } else if (constant < 0.0) {
        out += format_number(constant);
    }
    return out;
}

GateMatrix GateOp::matrix(std::span<const double> params) const {
    std::array<double, 2> values{};
    for (std::size_t i = 0; i < angles.size(); ++i) {
        values[i] = angles[i].eval(params);
    }
    return gate_matrix(kind, std::span<const double>(values.data(), angles.size()));
}

int Circuit::add_param(ParamSlot slot) {
    slots_.push_back(slot);
    return static_cast<int>(slots_.size()) - 1;
}

void Circuit::add_op(GateOp op) {
    if (static_cast<int>(op.qubits.size()) != gate_arity(op.kind)) {
        throw InputError(std::string(gate_name(op.kind)) + " needs " +
                         std::to_string(gate_arity(op.kind)) + " qubit(s)");
    }
    if (static_cast<int>(op.angles.size()) != gate_angle_count(op.kind)) {
        throw InputError(std::string(gate_name(op.kind)) + " needs " +
                         std::to_string(gate_angle_count(op.kind)) + " angle(s)");
    }
    for (int q : op.qubits) {
        if (q < 0 || q >= n_qubits_) {
            throw InputError("op qubit " + std::to_string(q) + " out of range");
        }
    }
    if (op.qubits.size() == 2 && op.qubits[0] == op.qubits[1]) {
        throw InputError("two-qubit op on a repeated qubit");
    }
    for (const auto &a : op.angles) {
        if (a.index && a.coefficient == 0.0) {
            throw InputError("parameter expression with zero coefficient");
        }
    }
    ops_.push_back(std::move(op));
}

int Circuit::layer_param_offset(int layer) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].layer == layer) {
            return static_cast<int>(i);
        }
    }
    throw InputError("circuit has no parameters in layer " + std::to_string(layer));
}

void Circuit::validate() const {
    std::vector<bool> used(slots_.size(), false);
    for (const auto &op : ops_) {
        for (const auto &a : op.angles) {
            if (!a.index) {
                continue;
            }
            if (*a.index < 0 || *a.index >= n_params()) {
                throw InternalError("parameter index " + std::to_string(*a.index) +
                                    " out of range");
            }
            used[static_cast<std::size_t>(*a.index)] = true;
        }
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (!used[i]) {
            throw InternalError("parameter " + std::to_string(i) + " is never referenced");
        }
    }
}

void run_in_place(const Circuit &circuit, std::span<const double> params, Statevector &state) {
    if (static_cast<int>(params.size()) != circuit.n_params()) {
        throw InputError("circuit expects " + std::to_string(circuit.n_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    if (state.n_qubits() != circuit.n_qubits()) {
        throw InputError("circuit acts on " + std::to_string(circuit.n_qubits()) +
                         " qubits, reference has " + std::to_string(state.n_qubits()));
    }
    for (const auto &op : circuit.ops()) {
        const GateMatrix g = op.matrix(params);
        if (op.qubits.size() == 1) {
            apply_1q(state, op.qubits[0], g);
        } else {
            apply_2q(state, op.qubits[0], op.qubits[1], g);
        }
    }
}

Statevector run(const Circuit &circuit, std::span<const double> params,
                const Statevector &reference) {
    Statevector state = reference;
    run_in_place(circuit, params, state);
    return state;
}

std::string dump(const Circuit &circuit) {
    std::ostringstream out;
    for (const auto &op : circuit.ops()) {
        out << gate_name(op.kind) << ' ' << op.qubits[0];
        if (op.qubits.size() == 2) {
            out << ',' << op.qubits[1];
        }
        for (const auto &a : op.angles) {
            out << ' ' << a.to_string();
        }
        out << '\n';
    }
    return out.str();
}

ResourceCounts count_resources(const Circuit &circuit) {
    ResourceCounts counts;
    counts.n_params = circuit.n_params();
    std::vector<int> front(static_cast<std::size_t>(circuit.n_qubits()), 0);
    for (const auto &op : circuit.ops()) {
        if (op.qubits.size() == 2) {
            ++counts.n_two_qubit;
        } else {
            ++counts.n_single_qubit;
        }
        int slot = 0;
        for (int q : op.qubits) {
            slot = std::max(slot, front[static_cast<std::size_t>(q)]);
        }
        ++slot;
        for (int q : op.qubits) {
            front[static_cast<std::size_t>(q)] = slot;
        }
        counts.asap_depth = std::max(counts.asap_depth, slot);
    }
    return counts;
}

} // namespace xyzhea
