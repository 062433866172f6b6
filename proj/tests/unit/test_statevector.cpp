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
#include <doctest.h>

#include <numbers>

#include "support/oracle.hpp"
#include "xyzhea/error.hpp"
#include "xyzhea/gates.hpp"
#include "xyzhea/statevector.hpp"

namespace xyzhea {
namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const oracle::Mat &a, const oracle::Mat &b) { return (a - b).cwiseAbs().maxCoeff(); }

std::vector<double> angles_for(GateKind k, std::mt19937_64 &rng) {
    return oracle::random_params(gate_angle_count(k), rng);
}

constexpr GateKind kAllGates[] = {GateKind::Rx,   GateKind::Ry,    GateKind::Rz,   GateKind::H,
                                  GateKind::X,    GateKind::CNOT,  GateKind::CZ,   GateKind::SWAP,
                                  GateKind::iSWAP, GateKind::fSim, GateKind::A,    GateKind::hop};

} // namespace

TEST_SUITE("statevector") {

TEST_CASE("basis states are little-endian") {
    CHECK(bitstring_index("100") == 1);
    CHECK(bitstring_index("001") == 4);
    CHECK(bitstring_index("10011001") == 1 + 8 + 16 + 128);
    const Statevector sv = basis_state(3, "110");
    CHECK(sv[3] == cplx(1.0));
    CHECK(sv.norm_squared() == doctest::Approx(1.0));
    CHECK_THROWS_AS((void)basis_state(3, "10"), InputError);
    CHECK_THROWS_AS((void)basis_state(2, "1a"), InputError);
}

TEST_CASE("a fresh register is |0...0>") {
    const Statevector sv(4);
    CHECK(sv.size() == 16);
    CHECK(sv[0] == cplx(1.0));
    CHECK(sv.norm_squared() == 1.0);
}

TEST_CASE("every library gate is unitary") {
    std::mt19937_64 rng(7);
    for (GateKind k : kAllGates) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = angles_for(k, rng);
            const oracle::Mat g = oracle::to_eigen(gate_matrix(k, a));
            const oracle::Mat id = oracle::Mat::Identity(g.rows(), g.cols());
            CHECK_MESSAGE(max_diff(g.adjoint() * g, id) < 1e-14, gate_name(k));
        }
    }
}

TEST_CASE("rotations and fSim match their generators") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const double t = oracle::random_params(1, rng)[0];
        const double p = oracle::random_params(1, rng)[0];
        CHECK(max_diff(oracle::to_eigen(gate_matrix(GateKind::Rx, std::array{t})),
                       oracle::rotation('X', t)) < 1e-14);
        CHECK(max_diff(oracle::to_eigen(gate_matrix(GateKind::Ry, std::array{t})),
                       oracle::rotation('Y', t)) < 1e-14);
        CHECK(max_diff(oracle::to_eigen(gate_matrix(GateKind::Rz, std::array{t})),
                       oracle::rotation('Z', t)) < 1e-14);
        CHECK(max_diff(oracle::to_eigen(gate_matrix(GateKind::fSim, std::array{t, p})),
                       oracle::fsim(t, p)) < 1e-13);
    }
}

TEST_CASE("U2 special points") {
    const auto check = [](double theta, double phi, GateKind expected) {
        const oracle::Mat u = oracle::to_eigen(u2_matrix(theta, phi));
        const oracle::Mat e = oracle::to_eigen(gate_matrix(expected, {}));
        CHECK(max_diff(u, e) <= 1e-12);
    };
    check(-kPi / 2, 0.0, GateKind::iSWAP);
    check(0.0, kPi, GateKind::CNOT);
    CHECK(max_diff(oracle::to_eigen(u2_matrix(0.0, 0.0)), oracle::Mat::Identity(4, 4)) <= 1e-12);
}

TEST_CASE("gate derivatives match central differences") {
    std::mt19937_64 rng(11);
    for (GateKind k : kAllGates) {
        for (int which = 0; which < gate_angle_count(k); ++which) {
            auto a = angles_for(k, rng);
            const oracle::Mat d = oracle::to_eigen(gate_derivative(k, a, which));
            const double h = 1e-6;
            auto ap = a;
            auto am = a;
            ap[static_cast<std::size_t>(which)] += h;
            am[static_cast<std::size_t>(which)] -= h;
            const oracle::Mat fd =
                (oracle::to_eigen(gate_matrix(k, ap)) - oracle::to_eigen(gate_matrix(k, am))) / (2 * h);
            CHECK_MESSAGE(max_diff(d, fd) < 1e-8, gate_name(k), " angle ", which);
        }
    }
}

TEST_CASE("applying gates agrees with the dense embedding") {
    std::mt19937_64 rng(5);
    const int n = 4;
    for (GateKind k : kAllGates) {
        const auto a = angles_for(k, rng);
        const GateMatrix g = gate_matrix(k, a);
        std::vector<std::vector<int>> placements;
        if (g.arity == 1) {
            placements = {{0}, {2}, {3}};
        } else {
            placements = {{0, 1}, {1, 0}, {0, 3}, {3, 1}, {2, 3}};
        }
        for (const auto &qs : placements) {
            const Statevector psi = oracle::random_state(n, rng);
            const Statevector out =
                g.arity == 1 ? applied_1q(psi, qs[0], g) : applied_2q(psi, qs[0], qs[1], g);
            const oracle::Vec expected = oracle::embed(oracle::to_eigen(g), qs, n) * oracle::to_eigen(psi);
            CHECK((oracle::to_eigen(out) - expected).cwiseAbs().maxCoeff() < 1e-14);
            CHECK(out.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("matrix elements") {
    std::mt19937_64 rng(9);
    const int n = 3;
    const Statevector a = oracle::random_state(n, rng);
    const Statevector b = oracle::random_state(n, rng);
    const GateMatrix g1 = gate_matrix(GateKind::Ry, std::array{0.4});
    const GateMatrix g2 = gate_matrix(GateKind::fSim, std::array{0.3, -1.1});
    const cplx e1 = matrix_element_1q(a, b, 1, g1);
    const cplx e2 = matrix_element_2q(a, b, 2, 0, g2);
    const cplx o1 = oracle::to_eigen(a).dot(oracle::embed(oracle::to_eigen(g1), {1}, n) * oracle::to_eigen(b));
    const cplx o2 = oracle::to_eigen(a).dot(oracle::embed(oracle::to_eigen(g2), {2, 0}, n) * oracle::to_eigen(b));
    CHECK(std::abs(e1 - o1) < 1e-14);
    CHECK(std::abs(e2 - o2) < 1e-14);
}

TEST_CASE("composition and inverse") {
    std::mt19937_64 rng(2);
    Statevector psi = oracle::random_state(3, rng);
    const Statevector start = psi;
    const GateMatrix g = gate_matrix(GateKind::A, std::array{0.7, 0.2});
    apply_2q(psi, 0, 2, g);
    apply_2q(psi, 0, 2, g.adjoint());
    CHECK(fidelity(psi, start) == doctest::Approx(1.0).epsilon(1e-14));
    const GateMatrix h = gate_matrix(GateKind::H, {});
    CHECK(max_diff(oracle::to_eigen(h * h), oracle::Mat::Identity(2, 2)) < 1e-15);
}

TEST_CASE("invalid qubit arguments") {
    Statevector sv(2);
    const GateMatrix x = gate_matrix(GateKind::X, {});
    CHECK_THROWS_AS(apply_1q(sv, 2, x), InputError);
    CHECK_THROWS_AS(apply_2q(sv, 1, 1, gate_matrix(GateKind::CNOT, {})), InputError);
    CHECK_THROWS_AS(apply_1q(sv, 0, gate_matrix(GateKind::CNOT, {})), InputError);
    CHECK_THROWS_AS((void)gate_library("Toffoli", {}), InputError);
}

TEST_CASE("tensor product puts the first factor on the low qubits") {
    const Statevector a = basis_state(1, "1");
    const Statevector b = basis_state(2, "01");
    const Statevector ab = tensor_product(a, b);
    CHECK(fidelity(ab, basis_state(3, "101")) == 1.0);
}

} // TEST_SUITE
} // namespace xyzhea
