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
#include "xyzhea/gates.hpp"

#include <cmath>
#include <numbers>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

constexpr cplx I1{0.0, 1.0};

void check_angles(GateKind kind, std::span<const double> angles) {
    if (static_cast<int>(angles.size()) != gate_angle_count(kind)) {
        throw InputError(std::string(gate_name(kind)) + " expects " +
                         std::to_string(gate_angle_count(kind)) + " angle(s), got " +
                         std::to_string(angles.size()));
    }
}

GateMatrix one(cplx a, cplx b, cplx c, cplx d) {
    GateMatrix g;
    g.arity = 1;
    g.m[0] = a;
    g.m[1] = b;
    g.m[2] = c;
    g.m[3] = d;
    return g;
}

GateMatrix two() {
    GateMatrix g;
    g.arity = 2;
    return g;
}

} // namespace

GateMatrix GateMatrix::identity(int arity) {
    GateMatrix g;
    g.arity = arity;
    for (int i = 0; i < g.dim(); ++i) {
        g(i, i) = 1.0;
    }
    return g;
}

GateMatrix GateMatrix::adjoint() const {
    GateMatrix g;
    g.arity = arity;
    for (int r = 0; r < dim(); ++r) {
        for (int c = 0; c < dim(); ++c) {
            g(r, c) = std::conj((*this)(c, r));
        }
    }
    return g;
}

GateMatrix GateMatrix::operator*(const GateMatrix &rhs) const {
    if (arity != rhs.arity) {
        throw InputError("gate product with mismatched arity");
    }
    GateMatrix g;
    g.arity = arity;
    const int d = dim();
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            cplx acc = 0.0;
            for (int k = 0; k < d; ++k) {
                acc += (*this)(r, k) * rhs(k, c);
            }
            g(r, c) = acc;
        }
    }
    return g;
}

GateMatrix kron(const GateMatrix &first, const GateMatrix &second) {
    if (first.arity != 1 || second.arity != 1) {
        throw InputError("kron expects two single-qubit gates");
    }
    GateMatrix g = two();
    for (int r1 = 0; r1 < 2; ++r1) {
        for (int c1 = 0; c1 < 2; ++c1) {
            for (int r2 = 0; r2 < 2; ++r2) {
                for (int c2 = 0; c2 < 2; ++c2) {
                    g(2 * r1 + r2, 2 * c1 + c2) = first(r1, c1) * second(r2, c2);
                }
            }
        }
    }
    return g;
}

int gate_arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::H:
    case GateKind::X:
        return 1;
    default:
        return 2;
    }
}

int gate_angle_count(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::hop:
        return 1;
    case GateKind::fSim:
    case GateKind::A:
        return 2;
    default:
        return 0;
    }
}

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::iSWAP: return "iSWAP";
    case GateKind::fSim: return "fSim";
    case GateKind::A: return "A";
    case GateKind::hop: return "hop";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    constexpr GateKind all[] = {GateKind::Rx,   GateKind::Ry,   GateKind::Rz,    GateKind::H,
                                GateKind::X,    GateKind::CNOT, GateKind::CZ,    GateKind::SWAP,
                                GateKind::iSWAP, GateKind::fSim, GateKind::A,    GateKind::hop};
    for (GateKind k : all) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    throw InputError("unknown gate '" + std::string(name) + "'");
}

GateMatrix gate_matrix(GateKind kind, std::span<const double> angles) {
    check_angles(kind, angles);
    switch (kind) {
    case GateKind::Rx: {
        const double c = std::cos(angles[0] / 2), s = std::sin(angles[0] / 2);
        return one(c, -I1 * s, -I1 * s, c);
    }
    case GateKind::Ry: {
        const double c = std::cos(angles[0] / 2), s = std::sin(angles[0] / 2);
        return one(c, -s, s, c);
    }
    case GateKind::Rz: {
        const double h = angles[0] / 2;
        return one(std::polar(1.0, -h), 0.0, 0.0, std::polar(1.0, h));
    }
    case GateKind::H: {
        const double r = 1.0 / std::numbers::sqrt2;
        return one(r, r, r, -r);
    }
    case GateKind::X:
        return one(0.0, 1.0, 1.0, 0.0);
    case GateKind::CNOT: {
        GateMatrix g = two();
        g(0, 0) = g(1, 1) = g(2, 3) = g(3, 2) = 1.0;
        return g;
    }
    case GateKind::CZ: {
        GateMatrix g = GateMatrix::identity(2);
        g(3, 3) = -1.0;
        return g;
    }
    case GateKind::SWAP: {
        GateMatrix g = two();
        g(0, 0) = g(1, 2) = g(2, 1) = g(3, 3) = 1.0;
        return g;
    }
    case GateKind::iSWAP: {
        GateMatrix g = two();
        g(0, 0) = g(3, 3) = 1.0;
        g(1, 2) = g(2, 1) = I1;
        return g;
    }
    case GateKind::fSim: {
        const double c = std::cos(angles[0]), s = std::sin(angles[0]);
        GateMatrix g = two();
        g(0, 0) = 1.0;
        g(1, 1) = g(2, 2) = c;
        g(1, 2) = g(2, 1) = -I1 * s;
        g(3, 3) = std::polar(1.0, -angles[1]);
        return g;
    }
    case GateKind::A: {
        const double c = std::cos(angles[0]), s = std::sin(angles[0]);
        GateMatrix g = two();
        g(0, 0) = g(3, 3) = 1.0;
        g(1, 1) = c;
        g(2, 2) = -c;
        g(1, 2) = std::polar(1.0, angles[1]) * s;
        g(2, 1) = std::polar(1.0, -angles[1]) * s;
        return g;
    }
    case GateKind::hop: {
        const double c = std::cos(angles[0]), s = std::sin(angles[0]);
        GateMatrix g = two();
        g(0, 0) = 1.0;
        g(1, 1) = g(2, 2) = c;
        g(1, 2) = -s;
        g(2, 1) = s;
        g(3, 3) = -1.0;
        return g;
    }
    }
    throw InputError("unhandled gate kind");
}

GateMatrix gate_library(std::string_view name, std::span<const double> angles) {
    return gate_matrix(parse_gate_kind(name), angles);
}

GateMatrix gate_derivative(GateKind kind, std::span<const double> angles, int which) {
    check_angles(kind, angles);
    if (which < 0 || which >= gate_angle_count(kind)) {
        throw InputError("no angle " + std::to_string(which) + " on " +
                         std::string(gate_name(kind)));
    }
    switch (kind) {
    case GateKind::Rx: {
        const double c = std::cos(angles[0] / 2) / 2, s = std::sin(angles[0] / 2) / 2;
        return one(-s, -I1 * c, -I1 * c, -s);
    }
    case GateKind::Ry: {
        const double c = std::cos(angles[0] / 2) / 2, s = std::sin(angles[0] / 2) / 2;
        return one(-s, -c, c, -s);
    }
    case GateKind::Rz: {
        const double h = angles[0] / 2;
        return one(-0.5 * I1 * std::polar(1.0, -h), 0.0, 0.0, 0.5 * I1 * std::polar(1.0, h));
    }
    case GateKind::fSim: {
        GateMatrix g = two();
        if (which == 0) {
            const double c = std::cos(angles[0]), s = std::sin(angles[0]);
            g(1, 1) = g(2, 2) = -s;
            g(1, 2) = g(2, 1) = -I1 * c;
        } else {
            g(3, 3) = -I1 * std::polar(1.0, -angles[1]);
        }
        return g;
    }
    case GateKind::A: {
        const double c = std::cos(angles[0]), s = std::sin(angles[0]);
        GateMatrix g = two();
        if (which == 0) {
            g(1, 1) = -s;
            g(2, 2) = s;
            g(1, 2) = std::polar(1.0, angles[1]) * c;
            g(2, 1) = std::polar(1.0, -angles[1]) * c;
        } else {
            g(1, 2) = I1 * std::polar(1.0, angles[1]) * s;
            g(2, 1) = -I1 * std::polar(1.0, -angles[1]) * s;
        }
        return g;
    }
    case GateKind::hop: {
        const double c = std::cos(angles[0]), s = std::sin(angles[0]);
        GateMatrix g = two();
        g(1, 1) = g(2, 2) = -s;
        g(1, 2) = -c;
        g(2, 1) = c;
        return g;
    }
    default:
        break;
    }
    throw InputError("gate has no angles");
}

GateMatrix u2_matrix(double theta, double phi) {
    const GateMatrix id = GateMatrix::identity(1);
    const double pre[] = {-phi / 2};
    const double post[] = {phi / 2};
    const double fsim[] = {theta, phi};
    return kron(id, gate_matrix(GateKind::Ry, post)) * gate_matrix(GateKind::fSim, fsim) *
           kron(id, gate_matrix(GateKind::Ry, pre));
}

} // namespace xyzhea
