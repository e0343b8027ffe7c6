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

#include "phasecov/error.hpp"

#include <cmath>
#include <sstream>

#include "phasecov/types.hpp"

namespace phasecov {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::WrongSpectrumKind: return "WrongSpectrumKind";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NotCovariantForm: return "NotCovariantForm";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::StepUnstable: return "StepUnstable";
    case ErrorCode::TailOverflow: return "TailOverflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message, double magnitude)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code),
      magnitude_(magnitude) {}

bool Error::is_numerical() const noexcept {
    return code_ == ErrorCode::StepUnstable || code_ == ErrorCode::TailOverflow;
}

std::string format_magnitude(double value) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << value;
    return out.str();
}

double wrap_angle(double angle) {
    double wrapped = std::remainder(angle, kTwoPi);
    if (wrapped <= -kPi) {
        wrapped += kTwoPi;
    }
    return wrapped;
}

} // namespace phasecov
