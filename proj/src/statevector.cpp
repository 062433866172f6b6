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
#include "xyzhea/statevector.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

void check_qubit(const Statevector &sv, int q) {
    if (q < 0 || q >= sv.n_qubits()) {
        throw InputError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(sv.n_qubits()) + "-qubit state");
    }
}

void check_pair(const Statevector &sv, int q_a, int q_b) {
    check_qubit(sv, q_a);
    check_qubit(sv, q_b);
    if (q_a == q_b) {
        throw InputError("two-qubit gate on repeated qubit " + std::to_string(q_a));
    }
}

void check_same_size(const Statevector &a, const Statevector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw InputError("statevector size mismatch: " + std::to_string(a.n_qubits()) + " vs " +
                         std::to_string(b.n_qubits()) + " qubits");
    }
}

// Visits every index with zeros at both bit positions `lo` < `hi`.
template <class F> void for_each_pair_base(std::size_t dim, int lo, int hi, F &&f) {
    const std::size_t lo_bit = std::size_t{1} << lo;
    const std::size_t hi_bit = std::size_t{1} << hi;
    const std::size_t quarter = dim >> 2;
    for (std::size_t k = 0; k < quarter; ++k) {
        // Insert zero bits at positions lo and hi.
        std::size_t i = k;
        i = ((i >> lo) << (lo + 1)) | (i & (lo_bit - 1));
        i = ((i >> hi) << (hi + 1)) | (i & (hi_bit - 1));
        f(i);
    }
}

} // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw InputError("n_qubits must be in [1, 30], got " + std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector::Statevector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw InputError("n_qubits must be in [1, 30], got " + std::to_string(n_qubits));
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw InputError("amplitude array length does not match 2^n_qubits");
    }
}

double Statevector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const cplx &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

void Statevector::normalize() {
    const double n = std::sqrt(norm_squared());
    if (!(n > 0.0)) {
        throw InputError("cannot normalize a zero statevector");
    }
    for (cplx &a : amps_) {
        a /= n;
    }
}

std::uint64_t bitstring_index(std::string_view bits) {
    std::uint64_t index = 0;
    for (std::size_t n = 0; n < bits.size(); ++n) {
        if (bits[n] == '1') {
            index |= std::uint64_t{1} << n;
        } else if (bits[n] != '0') {
            throw InputError("bitstring may only contain 0/1, got '" + std::string(bits) + "'");
        }
    }
    return index;
}

Statevector basis_state(int n_qubits, std::string_view bits) {
    if (static_cast<int>(bits.size()) != n_qubits) {
        throw InputError("bitstring '" + std::string(bits) + "' has length " +
                         std::to_string(bits.size()) + ", expected " + std::to_string(n_qubits));
    }
    const std::uint64_t index = bitstring_index(bits);
    Statevector sv(n_qubits);
    sv[0] = 0.0;
    sv[index] = 1.0;
    return sv;
}

void apply_1q(Statevector &sv, int qubit, const GateMatrix &g) {
    if (g.arity != 1) {
        throw InputError("apply_1q needs a single-qubit gate");
    }
    check_qubit(sv, qubit);
    const cplx m00 = g(0, 0), m01 = g(0, 1), m10 = g(1, 0), m11 = g(1, 1);
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = sv.size();
    cplx *a = sv.amplitudes().data();
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cplx x0 = a[i];
            const cplx x1 = a[i + stride];
            a[i] = m00 * x0 + m01 * x1;
            a[i + stride] = m10 * x0 + m11 * x1;
        }
    }
}

void apply_2q(Statevector &sv, int q_a, int q_b, const GateMatrix &g) {
    if (g.arity != 2) {
        throw InputError("apply_2q needs a two-qubit gate");
    }
    check_pair(sv, q_a, q_b);
    const std::size_t ba = std::size_t{1} << q_a;
    const std::size_t bb = std::size_t{1} << q_b;
    const std::size_t idx[4] = {0, bb, ba, ba | bb};
    cplx *a = sv.amplitudes().data();
    const auto &m = g.m;
    for_each_pair_base(sv.size(), std::min(q_a, q_b), std::max(q_a, q_b), [&](std::size_t i) {
        const cplx x0 = a[i + idx[0]], x1 = a[i + idx[1]], x2 = a[i + idx[2]], x3 = a[i + idx[3]];
        for (int r = 0; r < 4; ++r) {
            a[i + idx[r]] = m[4 * r] * x0 + m[4 * r + 1] * x1 + m[4 * r + 2] * x2 + m[4 * r + 3] * x3;
        }
    });
}

Statevector applied_1q(Statevector sv, int qubit, const GateMatrix &g) {
    apply_1q(sv, qubit, g);
    return sv;
}

Statevector applied_2q(Statevector sv, int q_a, int q_b, const GateMatrix &g) {
    apply_2q(sv, q_a, q_b, g);
    return sv;
}

cplx matrix_element_1q(const Statevector &lhs, const Statevector &rhs, int qubit,
                       const GateMatrix &g) {
    check_same_size(lhs, rhs);
    check_qubit(rhs, qubit);
    const cplx m00 = g(0, 0), m01 = g(0, 1), m10 = g(1, 0), m11 = g(1, 1);
    const std::size_t stride = std::size_t{1} << qubit;
    const cplx *l = lhs.amplitudes().data();
    const cplx *r = rhs.amplitudes().data();
    cplx acc = 0.0;
    for (std::size_t base = 0; base < rhs.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cplx x0 = r[i], x1 = r[i + stride];
            acc += std::conj(l[i]) * (m00 * x0 + m01 * x1) +
                   std::conj(l[i + stride]) * (m10 * x0 + m11 * x1);
        }
    }
    return acc;
}

cplx matrix_element_2q(const Statevector &lhs, const Statevector &rhs, int q_a, int q_b,
                       const GateMatrix &g) {
    check_same_size(lhs, rhs);
    check_pair(rhs, q_a, q_b);
    const std::size_t ba = std::size_t{1} << q_a;
    const std::size_t bb = std::size_t{1} << q_b;
    const std::size_t idx[4] = {0, bb, ba, ba | bb};
    const cplx *l = lhs.amplitudes().data();
    const cplx *r = rhs.amplitudes().data();
    const auto &m = g.m;
    cplx acc = 0.0;
    for_each_pair_base(rhs.size(), std::min(q_a, q_b), std::max(q_a, q_b), [&](std::size_t i) {
        const cplx x0 = r[i + idx[0]], x1 = r[i + idx[1]], x2 = r[i + idx[2]], x3 = r[i + idx[3]];
        for (int row = 0; row < 4; ++row) {
            acc += std::conj(l[i + idx[row]]) * (m[4 * row] * x0 + m[4 * row + 1] * x1 +
                                                 m[4 * row + 2] * x2 + m[4 * row + 3] * x3);
        }
    });
    return acc;
}

cplx inner_product(const Statevector &a, const Statevector &b) {
    check_same_size(a, b);
    cplx acc = 0.0;
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

double fidelity(const Statevector &a, const Statevector &b) {
    return std::norm(inner_product(a, b));
}

Statevector tensor_product(const Statevector &a, const Statevector &b) {
    const int n = a.n_qubits() + b.n_qubits();
    std::vector<cplx> amps(std::size_t{1} << n);
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            amps[(j << a.n_qubits()) | i] = a[i] * b[j];
        }
    }
    return Statevector(n, std::move(amps));
}

} // namespace xyzhea
