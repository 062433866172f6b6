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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xyzhea/experiments.hpp"

namespace xyzhea {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr std::string_view kConvergenceHeader =
    "layer,energy,error_vs_exact,per_site_energy,n_params,n_two_qubit,asap_depth,iterations,"
    "wall_time_s";
inline constexpr std::string_view kVarianceHeader =
    "kind,n_qubits,layers,parameter_id,mode,sample_count,variance";
inline constexpr std::string_view kSizeConsistencyHeader =
    "kind,L,e_sub,e_composite,infidelity_sub,infidelity_composite";

/// 12 significant digits.
[[nodiscard]] std::string format_real(double v);

void write_convergence_csv(std::ostream &os, const std::vector<ConvergenceRow> &rows);
void write_variance_csv(std::ostream &os, const std::vector<VarianceRow> &rows);
void write_size_consistency_csv(std::ostream &os, const std::vector<SizeConsistencyRow> &rows);

/// Throw ParseError on a wrong header or malformed row.
[[nodiscard]] std::vector<ConvergenceRow> read_convergence_csv(std::istream &is);
[[nodiscard]] std::vector<VarianceRow> read_variance_csv(std::istream &is);
[[nodiscard]] std::vector<SizeConsistencyRow> read_size_consistency_csv(std::istream &is);

/// `<output>.meta.json`.
[[nodiscard]] std::filesystem::path sidecar_path(const std::filesystem::path &output);

/// Writes `metadata` plus the version to the sidecar of `output`.
void write_sidecar(const std::filesystem::path &output, nlohmann::json metadata);

} // namespace xyzhea
