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
#include "xyzhea/gradient.hpp"

#include <array>
#include <cmath>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

void check_sizes(const PauliSum &h, const Circuit &circuit, std::span<const double> params,
                 const Statevector &reference) {
    if (h.n_qubits() != circuit.n_qubits() || reference.n_qubits() != circuit.n_qubits()) {
        throw InputError("Hamiltonian, circuit and reference disagree on qubit count");
    }
    if (static_cast<int>(params.size()) != circuit.n_params()) {
        throw InputError("circuit expects " + std::to_string(circuit.n_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
}

void apply_op(Statevector &sv, const GateOp &op, const GateMatrix &g) {
    if (op.qubits.size() == 1) {
        apply_1q(sv, op.qubits[0], g);
    } else {
        apply_2q(sv, op.qubits[0], op.qubits[1], g);
    }
}

cplx element(const Statevector &lhs, const Statevector &rhs, const GateOp &op,
             const GateMatrix &g) {
    return op.qubits.size() == 1 ? matrix_element_1q(lhs, rhs, op.qubits[0], g)
                                 : matrix_element_2q(lhs, rhs, op.qubits[0], op.qubits[1], g);
}

} // namespace

double energy(const PauliSum &h, const Circuit &circuit, std::span<const double> params,
              const Statevector &reference) {
    check_sizes(h, circuit, params, reference);
    return expectation(h, run(circuit, params, reference));
}

EnergyGradient energy_and_gradient(const PauliSum &h, const Circuit &circuit,
                                   std::span<const double> params,
                                   const Statevector &reference) {
    check_sizes(h, circuit, params, reference);
    EnergyGradient out;
    out.gradient.assign(params.size(), 0.0);

    Statevector psi = run(circuit, params, reference);
    Statevector lambda(psi.n_qubits());
    h.apply(psi, lambda);
    const cplx e = inner_product(psi, lambda);
    if (std::abs(e.imag()) > 1e-10) {
        throw InternalError("energy has imaginary part; operator is not Hermitian");
    }
    out.energy = e.real();

    const auto &ops = circuit.ops();
    std::array<double, 2> angles{};
    for (std::size_t k = ops.size(); k-- > 0;) {
        const GateOp &op = ops[k];
        const std::size_t n_angles = op.angles.size();
        for (std::size_t a = 0; a < n_angles; ++a) {
            angles[a] = op.angles[a].eval(params);
        }
        const std::span<const double> angle_span(angles.data(), n_angles);
        const GateMatrix g = gate_matrix(op.kind, angle_span);
        const GateMatrix g_dag = g.adjoint();
        apply_op(psi, op, g_dag);
        for (std::size_t a = 0; a < n_angles; ++a) {
            const ParamExpr &expr = op.angles[a];
            if (!expr.index) {
                continue;
            }
            const GateMatrix d = gate_derivative(op.kind, angle_span, static_cast<int>(a));
            const double contribution = 2.0 * element(lambda, psi, op, d).real();
            out.gradient[static_cast<std::size_t>(*expr.index)] += expr.coefficient * contribution;
        }
        apply_op(lambda, op, g_dag);
    }
    return out;
}

std::vector<double> finite_difference_gradient(const PauliSum &h, const Circuit &circuit,
                                               std::span<const double> params,
                                               const Statevector &reference, double step) {
    if (!(step > 0.0)) {
        throw InputError("finite-difference step must be positive");
    }
    check_sizes(h, circuit, params, reference);
    std::vector<double> x(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x0 = x[i];
        x[i] = x0 + step;
        const double plus = energy(h, circuit, x, reference);
        x[i] = x0 - step;
        const double minus = energy(h, circuit, x, reference);
        x[i] = x0;
        grad[i] = (plus - minus) / (2.0 * step);
    }
    return grad;
}

} // namespace xyzhea
