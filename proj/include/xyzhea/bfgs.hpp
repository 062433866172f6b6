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

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace xyzhea {

/// f(x), writing df/dx into `grad`.
using ObjectiveWithGradient =
    std::function<double(std::span<const double> x, std::span<double> grad)>;

struct BfgsConfig {
    int max_iterations = 3000;
    double gradient_tolerance = 1e-7; // on the max-norm of the gradient
    double c1 = 1e-4;                 // sufficient decrease
    double c2 = 0.9;                  // curvature
    int max_line_search_evaluations = 40;
};

enum class BfgsStatus { Converged, MaxIterations, LineSearchFailed };

[[nodiscard]] std::string_view bfgs_status_name(BfgsStatus s) noexcept;

struct BfgsResult {
    std::vector<double> x;
    double f = 0.0;
    std::vector<double> gradient;
    int iterations = 0;
    int evaluations = 0;
    BfgsStatus status = BfgsStatus::Converged;
};

/// Dense inverse-Hessian BFGS with a strong-Wolfe line search. Every
/// accepted step satisfies the sufficient-decrease condition, so the
/// returned f never exceeds f(x0). The inverse Hessian is reset once on a
/// line-search failure before giving up. A NaN objective throws
/// NumericalError.
[[nodiscard]] BfgsResult minimize_bfgs(const ObjectiveWithGradient &objective,
                                       std::span<const double> x0, const BfgsConfig &config = {});

} // namespace xyzhea
