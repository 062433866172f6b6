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

#include <stdexcept>
#include <string>

namespace xyzhea {

/// Caller supplied something that violates a precondition.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed Hamiltonian file or CSV document.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant, e.g. a non-Hermitian operator reaching the
/// energy evaluation.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Iterative numerical method failed (eigensolver stalled, NaN objective).
class NumericalError : public std::runtime_error {
  public:
    NumericalError(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    [[nodiscard]] double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

} // namespace xyzhea
