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
#include "xyzhea/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

#include "xyzhea/error.hpp"

namespace xyzhea {
namespace {

constexpr double kImagTolerance = 1e-10;

std::string identity_string(int n) { return std::string(static_cast<std::size_t>(n), 'I'); }

// Pauli product with phase: (phase, letter) for a*b.
std::pair<cplx, char> multiply_letters(char a, char b) {
    if (a == 'I') return {1.0, b};
    if (b == 'I') return {1.0, a};
    if (a == b) return {1.0, 'I'};
    const cplx i{0.0, 1.0};
    if (a == 'X' && b == 'Y') return {i, 'Z'};
    if (a == 'Y' && b == 'X') return {-i, 'Z'};
    if (a == 'Y' && b == 'Z') return {i, 'X'};
    if (a == 'Z' && b == 'Y') return {-i, 'X'};
    if (a == 'Z' && b == 'X') return {i, 'Y'};
    return {-i, 'Y'}; // X*Z
}

// Complex-weighted scratch algebra used for symbolic expansion.
using Expansion = std::map<std::string, cplx>;

Expansion multiply(const Expansion &a, const Expansion &b) {
    Expansion out;
    for (const auto &[sa, ca] : a) {
        for (const auto &[sb, cb] : b) {
            cplx phase = 1.0;
            std::string s(sa.size(), 'I');
            for (std::size_t q = 0; q < sa.size(); ++q) {
                auto [p, letter] = multiply_letters(sa[q], sb[q]);
                phase *= p;
                s[q] = letter;
            }
            out[s] += phase * ca * cb;
        }
    }
    return out;
}

} // namespace

PauliSum::PauliSum(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw InputError("PauliSum n_qubits must be in [1, 30], got " + std::to_string(n_qubits));
    }
    std::unordered_map<std::uint64_t, std::size_t> slot;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        const PauliTerm &term = terms_[t];
        if (static_cast<int>(term.pauli.size()) != n_qubits) {
            throw InputError("term " + std::to_string(t) + ": Pauli string '" + term.pauli +
                             "' has length " + std::to_string(term.pauli.size()) + ", expected " +
                             std::to_string(n_qubits));
        }
        if (!std::isfinite(term.coeff)) {
            throw InputError("term " + std::to_string(t) + ": non-finite coefficient");
        }
        std::uint64_t flip = 0, sign = 0;
        int n_y = 0;
        for (int q = 0; q < n_qubits; ++q) {
            const std::uint64_t bit = std::uint64_t{1} << q;
            switch (term.pauli[static_cast<std::size_t>(q)]) {
            case 'I': break;
            case 'X': flip |= bit; break;
            case 'Y': flip |= bit; sign |= bit; ++n_y; break;
            case 'Z': sign |= bit; break;
            default:
                throw InputError("term " + std::to_string(t) + ": invalid Pauli letter '" +
                                 std::string(1, term.pauli[static_cast<std::size_t>(q)]) + "'");
            }
        }
        static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const MaskedTerm masked{term.coeff * ipow[n_y % 4], sign};
        auto [it, inserted] = slot.try_emplace(flip, groups_.size());
        if (inserted) {
            groups_.push_back(FlipGroup{flip, {}});
        }
        groups_[it->second].terms.push_back(masked);
    }
}

PauliSum PauliSum::normalized() const {
    std::vector<PauliTerm> merged;
    std::unordered_map<std::string, std::size_t> index;
    for (const PauliTerm &t : terms_) {
        auto [it, inserted] = index.try_emplace(t.pauli, merged.size());
        if (inserted) {
            merged.push_back(t);
        } else {
            merged[it->second].coeff += t.coeff;
        }
    }
    std::erase_if(merged, [](const PauliTerm &t) { return t.coeff == 0.0; });
    return PauliSum(n_qubits_, std::move(merged));
}

PauliSum PauliSum::operator+(const PauliSum &rhs) const {
    if (rhs.n_qubits_ != n_qubits_) {
        throw InputError("cannot add PauliSums on different qubit counts");
    }
    std::vector<PauliTerm> all = terms_;
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    return PauliSum(n_qubits_, std::move(all)).normalized();
}

PauliSum PauliSum::scaled(double factor) const {
    std::vector<PauliTerm> out = terms_;
    for (PauliTerm &t : out) {
        t.coeff *= factor;
    }
    return PauliSum(n_qubits_, std::move(out));
}

bool PauliSum::is_real() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm &t) {
        return std::count(t.pauli.begin(), t.pauli.end(), 'Y') % 2 == 0;
    });
}

void PauliSum::apply(const Statevector &in, Statevector &out) const {
    if (in.n_qubits() != n_qubits_) {
        throw InputError("Hamiltonian acts on " + std::to_string(n_qubits_) +
                         " qubits, state has " + std::to_string(in.n_qubits()));
    }
    if (out.n_qubits() != n_qubits_) {
        out = Statevector(n_qubits_);
    }
    auto dst = out.amplitudes();
    std::fill(dst.begin(), dst.end(), cplx{0.0, 0.0});
    const auto src = in.amplitudes();
    for (const FlipGroup &g : groups_) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            cplx w = 0.0;
            for (const MaskedTerm &t : g.terms) {
                w += (std::popcount(i & t.sign) & 1) ? -t.weight : t.weight;
            }
            dst[i ^ g.flip] += w * src[i];
        }
    }
}

double expectation(const PauliSum &h, const Statevector &sv) {
    if (h.n_qubits() != sv.n_qubits()) {
        throw InputError("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                         " qubits, state has " + std::to_string(sv.n_qubits()));
    }
    const auto a = sv.amplitudes();
    cplx acc = 0.0;
    for (const auto &g : h.groups()) {
        cplx group_acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            cplx w = 0.0;
            for (const auto &t : g.terms) {
                w += (std::popcount(i & t.sign) & 1) ? -t.weight : t.weight;
            }
            group_acc += std::conj(a[i ^ g.flip]) * w * a[i];
        }
        acc += group_acc;
    }
    if (std::abs(acc.imag()) > kImagTolerance) {
        throw InternalError("expectation has imaginary part " + std::to_string(acc.imag()) +
                            "; operator is not Hermitian");
    }
    return acc.real();
}

PauliSum heisenberg_1d(int n_sites, double J) {
    if (n_sites < 2) {
        throw InputError("Heisenberg chain needs at least 2 sites, got " + std::to_string(n_sites));
    }
    std::vector<PauliTerm> terms;
    for (int n = 0; n + 1 < n_sites; ++n) {
        for (char letter : {'X', 'Y', 'Z'}) {
            std::string s = identity_string(n_sites);
            s[static_cast<std::size_t>(n)] = letter;
            s[static_cast<std::size_t>(n + 1)] = letter;
            terms.push_back({-J / 2, std::move(s)});
        }
    }
    return PauliSum(n_sites, std::move(terms));
}

PauliSum disjoint_union(const PauliSum &a, const PauliSum &b) {
    const int n = a.n_qubits() + b.n_qubits();
    std::vector<PauliTerm> terms;
    terms.reserve(a.terms().size() + b.terms().size());
    for (const PauliTerm &t : a.terms()) {
        terms.push_back({t.coeff, t.pauli + identity_string(b.n_qubits())});
    }
    for (const PauliTerm &t : b.terms()) {
        terms.push_back({t.coeff, identity_string(a.n_qubits()) + t.pauli});
    }
    return PauliSum(n, std::move(terms));
}

PauliSum number_penalty(int n_qubits, int n_up, int n_down, double beta) {
    if (n_qubits < 2 || n_qubits % 2 != 0) {
        throw InputError("number penalty needs an even qubit count, got " +
                         std::to_string(n_qubits));
    }
    if (n_up < 0 || n_down < 0 || n_up > n_qubits / 2 || n_down > n_qubits / 2) {
        throw InputError("target occupations out of range");
    }
    if (beta == 0.0) {
        return PauliSum(n_qubits, {});
    }
    Expansion total;
    for (int spin = 0; spin < 2; ++spin) {
        const int target = spin == 0 ? n_up : n_down;
        // N_s - n_s = sum_q (I - Z_q)/2 - n_s
        Expansion dev;
        dev[identity_string(n_qubits)] = -static_cast<double>(target);
        for (int q = spin; q < n_qubits; q += 2) {
            std::string z = identity_string(n_qubits);
            z[static_cast<std::size_t>(q)] = 'Z';
            dev[identity_string(n_qubits)] += 0.5;
            dev[z] += -0.5;
        }
        for (const auto &[s, c] : multiply(dev, dev)) {
            total[s] += beta * c;
        }
    }
    std::vector<PauliTerm> terms;
    for (const auto &[s, c] : total) {
        if (std::abs(c.imag()) > 1e-14) {
            throw InternalError("penalty expansion produced a complex coefficient");
        }
        if (c.real() != 0.0) {
            terms.push_back({c.real(), s});
        }
    }
    // Identity first, then Z strings in lexicographic order.
    std::stable_sort(terms.begin(), terms.end(), [&](const PauliTerm &x, const PauliTerm &y) {
        const bool xi = x.pauli == identity_string(n_qubits);
        const bool yi = y.pauli == identity_string(n_qubits);
        return xi && !yi;
    });
    return PauliSum(n_qubits, std::move(terms));
}

std::string neel_bitstring(int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; q += 2) {
        s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
}

} // namespace xyzhea
