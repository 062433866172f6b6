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
#include "xyzhea/ansatz.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

using P = ParamExpr;

void add_1q(Circuit &c, GateKind kind, int q, ParamExpr angle) {
    c.add_op(GateOp{kind, {q}, {angle}});
}

void add_fixed_2q(Circuit &c, GateKind kind, int a, int b) { c.add_op(GateOp{kind, {a, b}, {}}); }

void rotation_column(Circuit &c, int layer, ParamRole role, GateKind kind) {
    for (int q = 0; q < c.n_qubits(); ++q) {
        const int idx = c.add_param({layer, role, q});
        add_1q(c, kind, q, P::param(idx));
    }
}

void ry_family_layer(Circuit &c, AnsatzKind kind, int layer) {
    const int n = c.n_qubits();
    if (kind == AnsatzKind::RyLinear) {
        for (int q = 0; q + 1 < n; ++q) {
            add_fixed_2q(c, GateKind::CNOT, q, q + 1);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                add_fixed_2q(c, GateKind::CNOT, i, j);
            }
        }
    }
    rotation_column(c, layer, ParamRole::RotY, GateKind::Ry);
    if (kind == AnsatzKind::RyRzFull) {
        rotation_column(c, layer, ParamRole::RotZ, GateKind::Rz);
    }
}

void aswap_layer(Circuit &c, int layer) {
    const int n = c.n_qubits();
    for (int parity = 0; parity < 2; ++parity) {
        for (int k = parity; k + 1 < n; k += 2) {
            const int t = c.add_param({layer, ParamRole::ExchangeTheta, k});
            const int p = c.add_param({layer, ParamRole::ExchangePhi, k});
            c.add_op(GateOp{GateKind::A, {k, k + 1}, {P::param(t), P::param(p)}});
        }
    }
}

// U2(theta, phi) on (k, k+1) or its adjoint; the adjoint of the triple is the
// same triple with fSim angles negated.
void u2_block(Circuit &c, int k, int theta, int phi, bool dagger) {
    const double sign = dagger ? -1.0 : 1.0;
    add_1q(c, GateKind::Ry, k + 1, P::param(phi, -0.5));
    c.add_op(GateOp{GateKind::fSim, {k, k + 1}, {P::param(theta, sign), P::param(phi, sign)}});
    add_1q(c, GateKind::Ry, k + 1, P::param(phi, 0.5));
}

void xyz_layer(Circuit &c, AnsatzKind kind, int layer) {
    const int n = c.n_qubits();
    std::vector<int> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        alpha[static_cast<std::size_t>(q)] = c.add_param({layer, ParamRole::RotX, q});
        beta[static_cast<std::size_t>(q)] = c.add_param({layer, ParamRole::RotY, q});
    }
    std::vector<int> theta(static_cast<std::size_t>(n - 1)), phi(static_cast<std::size_t>(n - 1));
    for (int k = 0; k + 1 < n; ++k) {
        theta[static_cast<std::size_t>(k)] = c.add_param({layer, ParamRole::FsimTheta, k});
        phi[static_cast<std::size_t>(k)] = c.add_param({layer, ParamRole::FsimPhi, k});
    }
    for (int q = 0; q < n; ++q) {
        add_1q(c, GateKind::Rx, q, P::param(alpha[static_cast<std::size_t>(q)]));
        add_1q(c, GateKind::Ry, q, P::param(beta[static_cast<std::size_t>(q)]));
    }
    for (int k = 0; k + 1 < n; ++k) {
        u2_block(c, k, theta[static_cast<std::size_t>(k)], phi[static_cast<std::size_t>(k)], false);
    }
    if (kind == AnsatzKind::XYZ2F) {
        for (int q = 0; q < n; ++q) {
            const int g = c.add_param({layer, ParamRole::RotZ, q});
            add_1q(c, GateKind::Rz, q, P::param(g));
        }
    } else {
        const int g = c.add_param({layer, ParamRole::RotZ, n - 1});
        add_1q(c, GateKind::Rz, n - 1, P::param(g));
    }
    for (int k = n - 2; k >= 0; --k) {
        u2_block(c, k, theta[static_cast<std::size_t>(k)], phi[static_cast<std::size_t>(k)], true);
    }
    for (int q = 0; q < n; ++q) {
        add_1q(c, GateKind::Ry, q, P::param(beta[static_cast<std::size_t>(q)], -1.0));
        add_1q(c, GateKind::Rx, q, P::param(alpha[static_cast<std::size_t>(q)], -1.0));
    }
}

bool is_ry_family(AnsatzKind kind) {
    return kind == AnsatzKind::RyLinear || kind == AnsatzKind::RyFull ||
           kind == AnsatzKind::RyRzFull;
}

bool is_bond_role(ParamRole role) {
    return role == ParamRole::FsimTheta || role == ParamRole::FsimPhi ||
           role == ParamRole::ExchangeTheta || role == ParamRole::ExchangePhi;
}

} // namespace

std::string_view ansatz_name(AnsatzKind kind) noexcept {
    switch (kind) {
    case AnsatzKind::RyLinear: return "ry_linear";
    case AnsatzKind::RyFull: return "ry_full";
    case AnsatzKind::RyRzFull: return "ryrz_full";
    case AnsatzKind::ASWAP: return "aswap";
    case AnsatzKind::XYZ1F: return "xyz1f";
    case AnsatzKind::XYZ2F: return "xyz2f";
    }
    return "?";
}

AnsatzKind parse_ansatz_kind(std::string_view name) {
    std::string lower(name);
    for (char &ch : lower) {
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    for (AnsatzKind k : kAllAnsatzKinds) {
        if (ansatz_name(k) == lower) {
            return k;
        }
    }
    throw InputError("unknown ansatz '" + std::string(name) +
                     "' (expected ry_linear, ry_full, ryrz_full, aswap, xyz1f, xyz2f)");
}

int params_per_layer(AnsatzKind kind, int n) {
    switch (kind) {
    case AnsatzKind::RyLinear:
    case AnsatzKind::RyFull: return n;
    case AnsatzKind::RyRzFull: return 2 * n;
    case AnsatzKind::ASWAP: return 2 * (n - 1);
    case AnsatzKind::XYZ1F: return 4 * n - 1;
    case AnsatzKind::XYZ2F: return 5 * n - 2;
    }
    return 0;
}

int prefix_params(AnsatzKind kind, int n) {
    return is_ry_family(kind) ? params_per_layer(kind, n) : 0;
}

Circuit build_ansatz(AnsatzKind kind, int n_qubits, int layers) {
    const int min_qubits = has_identity_layer(kind) ? 1 : 2;
    if (n_qubits < min_qubits) {
        throw InputError(std::string(ansatz_name(kind)) + " needs at least " +
                         std::to_string(min_qubits) + " qubit(s), got " +
                         std::to_string(n_qubits));
    }
    if (n_qubits > 30) {
        throw InputError("ansatz limited to 30 qubits");
    }
    if (layers < 1) {
        throw InputError("ansatz needs at least 1 layer, got " + std::to_string(layers));
    }
    Circuit c(n_qubits);
    if (is_ry_family(kind)) {
        rotation_column(c, 0, ParamRole::RotY, GateKind::Ry);
        if (kind == AnsatzKind::RyRzFull) {
            rotation_column(c, 0, ParamRole::RotZ, GateKind::Rz);
        }
    }
    for (int l = 1; l <= layers; ++l) {
        c.begin_layer();
        if (is_ry_family(kind)) {
            ry_family_layer(c, kind, l);
        } else if (kind == AnsatzKind::ASWAP) {
            aswap_layer(c, l);
        } else {
            xyz_layer(c, kind, l);
        }
    }
    c.validate();
    return c;
}

ResourceCounts table_counts(AnsatzKind kind, int n, int l) {
    switch (kind) {
    case AnsatzKind::RyLinear: return {n * (l + 1), (n - 1) * l, n * (l + 1), n + 3 * l - 2};
    case AnsatzKind::RyFull:
        return {n * (l + 1), n * (n - 1) * l / 2, n * (l + 1), n * l + n + l - 2};
    case AnsatzKind::RyRzFull:
        return {2 * n * (l + 1), n * (n - 1) * l / 2, 2 * n * (l + 1), n * l + n + 2 * l - 2};
    case AnsatzKind::ASWAP: return {2 * (n - 1) * l, (n - 1) * l, 0, 2 * l};
    case AnsatzKind::XYZ1F: return {(4 * n - 1) * l, 2 * (n - 1) * l, (8 * n - 3) * l, (4 * n + 3) * l};
    case AnsatzKind::XYZ2F: return {(5 * n - 2) * l, 2 * (n - 1) * l, (9 * n - 4) * l, (4 * n + 3) * l};
    }
    return {};
}

ResourceCounts resource_counts(AnsatzKind kind, int n_qubits, int layers) {
    if (n_qubits < 3) {
        throw InputError("resource counts are defined for n_qubits >= 3");
    }
    return count_resources(build_ansatz(kind, n_qubits, layers));
}

std::vector<double> embed_subsystem_params(AnsatzKind kind, std::span<const double> params_a,
                                           std::span<const double> params_b, int n_a, int n_b,
                                           int layers) {
    const Circuit ca = build_ansatz(kind, n_a, layers);
    const Circuit cb = build_ansatz(kind, n_b, layers);
    if (static_cast<int>(params_a.size()) != ca.n_params() ||
        static_cast<int>(params_b.size()) != cb.n_params()) {
        throw InputError("subsystem parameter vectors do not match " + std::to_string(layers) +
                         "-layer circuits");
    }
    const Circuit composite = build_ansatz(kind, n_a + n_b, layers);
    using Key = std::tuple<int, ParamRole, int>;
    std::map<Key, double> lookup;
    for (int i = 0; i < ca.n_params(); ++i) {
        const auto &s = ca.slots()[static_cast<std::size_t>(i)];
        lookup[{s.layer, s.role, s.site}] = params_a[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < cb.n_params(); ++i) {
        const auto &s = cb.slots()[static_cast<std::size_t>(i)];
        lookup[{s.layer, s.role, s.site + n_a}] = params_b[static_cast<std::size_t>(i)];
    }
    std::vector<double> out(static_cast<std::size_t>(composite.n_params()), 0.0);
    for (int i = 0; i < composite.n_params(); ++i) {
        const auto &s = composite.slots()[static_cast<std::size_t>(i)];
        if (is_bond_role(s.role) && s.site == n_a - 1) {
            continue; // boundary bond
        }
        if (auto it = lookup.find({s.layer, s.role, s.site}); it != lookup.end()) {
            out[static_cast<std::size_t>(i)] = it->second;
        }
    }
    return out;
}

std::vector<double> compose_subsystem_params(std::span<const double> params_a,
                                             std::span<const double> params_b, int n_a, int n_b,
                                             int layers) {
    return embed_subsystem_params(AnsatzKind::XYZ2F, params_a, params_b, n_a, n_b, layers);
}

std::vector<double> prepare_product_state(std::span<const QubitState> targets,
                                          std::string_view reference) {
    const int n = static_cast<int>(targets.size());
    if (static_cast<int>(reference.size()) != n) {
        throw InputError("need one target per reference qubit");
    }
    const Circuit layer = build_ansatz(AnsatzKind::XYZ2F, n, 1);
    std::vector<double> params(static_cast<std::size_t>(layer.n_params()), 0.0);
    for (int q = 0; q < n; ++q) {
        const QubitState &t = targets[static_cast<std::size_t>(q)];
        const double norm = std::norm(t[0]) + std::norm(t[1]);
        if (std::abs(norm - 1.0) > 1e-9) {
            throw InputError("target state for qubit " + std::to_string(q) + " is not normalized");
        }
        // Bloch vectors of the reference bit and the target.
        const double sz = reference[static_cast<std::size_t>(q)] == '1' ? -1.0 : 1.0;
        const cplx off = std::conj(t[0]) * t[1];
        const std::array<double, 3> tv = {2 * off.real(), 2 * off.imag(),
                                          std::norm(t[0]) - std::norm(t[1])};
        // Axis s x t with s = (0, 0, sz).
        std::array<double, 3> axis = {-sz * tv[1], sz * tv[0], 0.0};
        const double cross = std::hypot(axis[0], axis[1]);
        const double angle = std::atan2(cross, sz * tv[2]);
        if (cross < 1e-14) {
            if (sz * tv[2] > 0) {
                continue; // already aligned
            }
            axis = {1.0, 0.0, 0.0};
        } else {
            axis = {axis[0] / cross, axis[1] / cross, 0.0};
        }
        // axis = (-sin b, sin a cos b, cos a cos b)
        const double b = -std::asin(std::clamp(axis[0], -1.0, 1.0));
        const double a = std::atan2(axis[1], axis[2]);
        int ia = -1, ib = -1, ig = -1;
        for (int i = 0; i < layer.n_params(); ++i) {
            const auto &s = layer.slots()[static_cast<std::size_t>(i)];
            if (s.site != q) continue;
            if (s.role == ParamRole::RotX) ia = i;
            if (s.role == ParamRole::RotY) ib = i;
            if (s.role == ParamRole::RotZ) ig = i;
        }
        params[static_cast<std::size_t>(ia)] = a;
        params[static_cast<std::size_t>(ib)] = b;
        params[static_cast<std::size_t>(ig)] = angle;
    }
    return params;
}

} // namespace xyzhea
