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
#include "xyzhea/eigensolver.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

constexpr double kResidualLimit = 1e-8;

double residual_norm(const PauliSum &h, const Statevector &v, double energy) {
    Statevector hv(v.n_qubits());
    h.apply(v, hv);
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        acc += std::norm(hv[i] - energy * v[i]);
    }
    return std::sqrt(acc);
}

template <class Matrix> void fill_dense(const PauliSum &h, Matrix &m) {
    using Scalar = typename Matrix::Scalar;
    const std::size_t dim = std::size_t{1} << h.n_qubits();
    m.setZero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &g : h.groups()) {
        for (std::size_t i = 0; i < dim; ++i) {
            cplx w = 0.0;
            for (const auto &t : g.terms) {
                w += (std::popcount(i & t.sign) & 1) ? -t.weight : t.weight;
            }
            if constexpr (std::is_same_v<Scalar, double>) {
                m(static_cast<Eigen::Index>(i ^ g.flip), static_cast<Eigen::Index>(i)) += w.real();
            } else {
                m(static_cast<Eigen::Index>(i ^ g.flip), static_cast<Eigen::Index>(i)) += w;
            }
        }
    }
}

GroundState dense_ground_state(const PauliSum &h) {
    const int n = h.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cplx> amps(dim);
    double energy = 0.0;
    if (h.is_real()) {
        Eigen::MatrixXd m;
        fill_dense(h, m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        if (es.info() != Eigen::Success) {
            throw NumericalError("dense eigensolver failed", 0.0);
        }
        energy = es.eigenvalues()(0);
        for (std::size_t i = 0; i < dim; ++i) {
            amps[i] = es.eigenvectors()(static_cast<Eigen::Index>(i), 0);
        }
    } else {
        Eigen::MatrixXcd m;
        fill_dense(h, m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        if (es.info() != Eigen::Success) {
            throw NumericalError("dense eigensolver failed", 0.0);
        }
        energy = es.eigenvalues()(0);
        for (std::size_t i = 0; i < dim; ++i) {
            amps[i] = es.eigenvectors()(static_cast<Eigen::Index>(i), 0);
        }
    }
    GroundState gs{energy, Statevector(n, std::move(amps)), 0.0, EigenMethod::Dense};
    gs.state.normalize();
    gs.residual = residual_norm(h, gs.state, energy);
    return gs;
}

void axpy(cplx a, const Statevector &x, Statevector &y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += a * x[i];
    }
}

void scale(double a, Statevector &x) {
    for (auto &v : x.amplitudes()) {
        v *= a;
    }
}

GroundState lanczos_ground_state(const PauliSum &h, const LanczosOptions &opt) {
    const int n = h.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    const int m_max = static_cast<int>(std::min<std::size_t>(
        dim, static_cast<std::size_t>(n >= 18 ? std::min(opt.krylov_dim, 30) : opt.krylov_dim)));

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal;
    Statevector start(n);
    const bool real = h.is_real();
    for (auto &a : start.amplitudes()) {
        a = real ? cplx(normal(rng), 0.0) : cplx(normal(rng), normal(rng));
    }
    start.normalize();

    double best_residual = INFINITY;
    std::vector<Statevector> basis;
    Statevector w(n);
    for (int restart = 0; restart < opt.max_restarts; ++restart) {
        basis.clear();
        basis.push_back(start);
        std::vector<double> alpha, beta;
        for (int j = 0; j < m_max; ++j) {
            h.apply(basis[static_cast<std::size_t>(j)], w);
            const double a = inner_product(basis[static_cast<std::size_t>(j)], w).real();
            alpha.push_back(a);
            // Two passes of classical Gram-Schmidt against the whole basis.
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto &v : basis) {
                    axpy(-inner_product(v, w), v, w);
                }
            }
            const double b = std::sqrt(w.norm_squared());
            if (j + 1 == m_max || b < 1e-12 * std::max(1.0, std::abs(a))) {
                break;
            }
            beta.push_back(b);
            scale(1.0 / b, w);
            basis.push_back(w);
        }
        const int k = static_cast<int>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < k) {
                t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const double theta = es.eigenvalues()(0);
        Statevector ritz(n);
        ritz[0] = 0.0;
        for (int i = 0; i < k; ++i) {
            axpy(es.eigenvectors()(i, 0), basis[static_cast<std::size_t>(i)], ritz);
        }
        ritz.normalize();
        const double res = residual_norm(h, ritz, theta);
        best_residual = std::min(best_residual, res);
        if (res <= opt.tolerance || (k < m_max && res <= kResidualLimit)) {
            return GroundState{theta, std::move(ritz), res, EigenMethod::Lanczos};
        }
        start = std::move(ritz);
    }
    if (best_residual <= kResidualLimit) {
        // Stalled just above the internal tolerance but within contract.
        const double e = expectation(h, start);
        return GroundState{e, start, residual_norm(h, start, e), EigenMethod::Lanczos};
    }
    throw NumericalError("Lanczos did not converge; best residual " +
                             std::to_string(best_residual),
                         best_residual);
}

} // namespace

Eigen::MatrixXcd dense_matrix(const PauliSum &h) {
    if (h.n_qubits() > 14) {
        throw InputError("dense matrix requested for more than 14 qubits");
    }
    Eigen::MatrixXcd m;
    fill_dense(h, m);
    return m;
}

GroundState exact_ground_state(const PauliSum &h, EigenMethod method,
                               const LanczosOptions &options) {
    if (h.n_qubits() > 20) {
        throw InputError("exact diagonalization limited to 20 qubits, got " +
                         std::to_string(h.n_qubits()));
    }
    if (method == EigenMethod::Automatic) {
        method = h.n_qubits() <= kDenseMaxQubits ? EigenMethod::Dense : EigenMethod::Lanczos;
    }
    GroundState gs =
        method == EigenMethod::Dense ? dense_ground_state(h) : lanczos_ground_state(h, options);
    if (!(gs.residual <= kResidualLimit)) {
        throw NumericalError("ground state residual " + std::to_string(gs.residual) +
                                 " exceeds 1e-8",
                             gs.residual);
    }
    return gs;
}

} // namespace xyzhea
