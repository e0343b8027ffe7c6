// Copyright 2026 The phasecov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phasecov {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NotHermitian,
    NotUnitTrace,
    NotPSD,
    Inconsistent,
    WrongSpectrumKind,
    KTooLarge,
    GridTooCoarse,
    NotCovariantForm,
    NegativeWeight,
    StepUnstable,
    TailOverflow,
};

std::string_view to_string(ErrorCode code);

/**
 * Library error. Carries a machine-readable code and, where one exists, the
 * measured size of the violation (e.g. the Hermiticity defect).
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message, double magnitude = 0.0);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] double magnitude() const noexcept { return magnitude_; }

    /// True for failures raised while integrating (StepUnstable, TailOverflow).
    [[nodiscard]] bool is_numerical() const noexcept;

  private:
    ErrorCode code_;
    double magnitude_;
};

/// Formats a double in scientific notation for error messages.
std::string format_magnitude(double value);

} // namespace phasecov
