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

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "support/oracle.hpp"
#include "xyzhea/csv.hpp"
#include "xyzhea/eigensolver.hpp"
#include "xyzhea/error.hpp"
#include "xyzhea/experiments.hpp"

namespace xyzhea {
namespace {

LayerwiseOptions quick_options() {
    LayerwiseOptions o;
    o.workers = 1;
    o.restarts = RestartSpec::with_count(3, 11);
    return o;
}

} // namespace

TEST_SUITE("experiments") {

TEST_CASE("power-law fit") {
    std::vector<std::pair<double, double>> pts;
    for (double n : {4.0, 6.0, 8.0, 10.0}) {
        pts.emplace_back(n, 2.0 * n * n);
    }
    const PowerLaw fit = power_law_fit(pts);
    CHECK(std::abs(fit.exponent - 2.0) < 1e-10);
    CHECK(std::abs(fit.prefactor - 2.0) < 1e-9);
    CHECK_THROWS_AS((void)power_law_fit(std::vector<std::pair<double, double>>{{4.0, 1.0}}), InputError);
    pts.emplace_back(12.0, 0.0);
    CHECK_THROWS_AS((void)power_law_fit(pts), InputError);
}

TEST_CASE("sample variance") {
    CHECK(sample_variance(std::vector<double>{1.0, 3.0}) == 2.0);
    CHECK(sample_variance(std::vector<double>{5.0, 5.0}) == 0.0);
    CHECK_THROWS_AS((void)sample_variance(std::vector<double>{1.0}), InputError);
}

TEST_CASE("convergence sweep rows") {
    const PauliSum h = heisenberg_1d(4, -1.0);
    const ConvergenceSweep s = convergence_sweep(h, AnsatzKind::XYZ2F, "1010", 2, quick_options(), 4);
    REQUIRE(s.rows.size() == 2);
    CHECK(s.exact_energy == doctest::Approx(exact_ground_state(h).energy));
    for (const ConvergenceRow &r : s.rows) {
        CHECK(r.error_vs_exact >= -1e-9);
        CHECK(r.error_vs_exact == doctest::Approx(r.energy - s.exact_energy));
        CHECK(*r.per_site_energy == doctest::Approx(r.energy / 4));
        CHECK(r.n_params == 18 * r.layer);
    }
    CHECK(s.rows[1].energy <= s.rows[0].energy);
    CHECK_THROWS_AS((void)convergence_sweep(h, AnsatzKind::XYZ2F, "1010", 0, quick_options()), InputError);
}

TEST_CASE("layers to accuracy") {
    const PauliSum h = heisenberg_1d(4, -1.0);
    const AccuracyResult any = layers_to_accuracy(h, AnsatzKind::XYZ2F, "1010",
                                                  std::numeric_limits<double>::infinity(), 5,
                                                  quick_options());
    CHECK(any.reached);
    CHECK(any.layers == 1);
    CHECK(any.counts.n_params == 18);
    const AccuracyResult none = layers_to_accuracy(h, AnsatzKind::RyLinear, "1010", 1e-14, 1,
                                                   quick_options());
    CHECK_FALSE(none.reached);
    CHECK(none.layers == 1);
    CHECK_THROWS_AS((void)layers_to_accuracy(h, AnsatzKind::XYZ2F, "1010", 0.0, 2, quick_options()),
                    InputError);
}

TEST_CASE("XYZ2F composite check with random parameters") {
    std::mt19937_64 rng(71);
    const PauliSum h = heisenberg_1d(3, -1.0);
    const GroundState g = exact_ground_state(h);
    const Circuit c = build_ansatz(AnsatzKind::XYZ2F, 3, 2);
    const auto p = oracle::random_params(c.n_params(), rng);
    const CompositeCheck r = composite_check(AnsatzKind::XYZ2F, h, "101", 2, p, g.state);
    CHECK(r.factorization_fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.energy_composite - r.energy_sub) < 1e-12);
    CHECK(r.fidelity_composite == doctest::Approx(r.fidelity_sub * r.fidelity_sub).epsilon(1e-12));
}

TEST_CASE("size-consistency rows") {
    const std::vector<int> layers{1, 2};
    const auto xyz = size_consistency_test(AnsatzKind::XYZ2F, 4, layers, -1.0, quick_options());
    REQUIRE(xyz.size() == 2);
    for (const auto &r : xyz) {
        CHECK(std::abs(r.e_composite - r.e_sub) < 1e-12);
    }
    const auto ry = size_consistency_test(AnsatzKind::RyLinear, 4, std::vector<int>{2}, -1.0,
                                          quick_options());
    CHECK(ry[0].e_composite > ry[0].e_sub);
}

TEST_CASE("barren-plateau rows") {
    VarianceConfig config;
    config.samples = 2;
    config.seed = 3;
    const std::vector<int> ns{3};
    const std::vector<int> ls{1, 2};
    const auto rows = barren_plateau_variance(AnsatzKind::XYZ2F, ns, ls, VarianceMode::Random, config);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].parameter_id == "theta_1_1");
    CHECK(rows[1].parameter_id == "theta_L_1");
    for (const auto &r : rows) {
        CHECK(r.variance >= 0.0);
        CHECK(r.sample_count == 2);
    }
    // One layer: first parameter of the circuit and of the last layer coincide.
    CHECK(rows[0].variance == rows[1].variance);
    config.samples = 1;
    CHECK_THROWS_AS((void)barren_plateau_variance(AnsatzKind::XYZ2F, ns, ls, VarianceMode::Random, config),
                    InputError);
}

TEST_CASE("tracked parameters") {
    const auto [a, b] = tracked_parameters(build_ansatz(AnsatzKind::RyLinear, 3, 4));
    CHECK(a == 0);
    CHECK(b == 3 + 3 * 3);
}

} // TEST_SUITE

TEST_SUITE("csv") {

TEST_CASE("convergence round trip") {
    std::vector<ConvergenceRow> rows{{1, -4.5, 0.25, -0.75, 28, 10, 27, 100, 0.5},
                                     {2, -4.875, 0.0001220703125, std::nullopt, 56, 20, 54, 900, 1.25}};
    std::stringstream ss;
    write_convergence_csv(ss, rows);
    CHECK(ss.str().rfind(std::string(kConvergenceHeader) + "\n", 0) == 0);
    CHECK(read_convergence_csv(ss) == rows);
}

TEST_CASE("twelve significant digits") {
    CHECK(format_real(std::numbers::pi) == "3.14159265359");
    CHECK(format_real(-0.83054) == "-0.83054");
    const std::vector<VarianceRow> rows{{AnsatzKind::XYZ2F, 6, 20, "theta_1_1", VarianceMode::Random,
                                         100, 1.0 / 3.0}};
    std::stringstream ss;
    write_variance_csv(ss, rows);
    const auto back = read_variance_csv(ss);
    REQUIRE(back.size() == 1);
    CHECK(std::abs(back[0].variance - 1.0 / 3.0) < 1e-12);
    std::stringstream again;
    write_variance_csv(again, back);
    std::stringstream first;
    write_variance_csv(first, rows);
    CHECK(again.str() == first.str());
}

TEST_CASE("size-consistency and variance round trip") {
    const std::vector<SizeConsistencyRow> sc{{AnsatzKind::ASWAP, 4, -0.75, -0.5, 0.125, 0.875}};
    std::stringstream a;
    write_size_consistency_csv(a, sc);
    CHECK(read_size_consistency_csv(a) == sc);
    const std::vector<VarianceRow> v{{AnsatzKind::RyFull, 8, 3, "theta_L_1", VarianceMode::Layerwise, 50, 0.0625}};
    std::stringstream b;
    write_variance_csv(b, v);
    CHECK(read_variance_csv(b) == v);
}

TEST_CASE("malformed files") {
    std::stringstream wrong_header("layer,energy\n1,2\n");
    CHECK_THROWS_AS((void)read_convergence_csv(wrong_header), ParseError);
    std::stringstream short_row(std::string(kSizeConsistencyHeader) + "\nxyz2f,2,1\n");
    CHECK_THROWS_AS((void)read_size_consistency_csv(short_row), ParseError);
    std::stringstream bad_kind(std::string(kVarianceHeader) + "\nfoo,4,1,theta_1_1,random,2,0.5\n");
    CHECK_THROWS_AS((void)read_variance_csv(bad_kind), ParseError);
    std::stringstream bad_number(std::string(kVarianceHeader) + "\nxyz2f,4,1,theta_1_1,random,2,abc\n");
    CHECK_THROWS_AS((void)read_variance_csv(bad_number), ParseError);
}

} // TEST_SUITE
} // namespace xyzhea
