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

#include "phasecov/shift_operator.hpp"

#include <cstdlib>

#include "phasecov/error.hpp"

namespace phasecov {

ShiftOperator::ShiftOperator(Spectrum spectrum, std::vector<double> chi)
    : spectrum_(spectrum), chi_(std::move(chi)) {
    if (chi_.empty()) {
        chi_.assign(spectrum_.dim(), 0.0);
    }
    if (chi_.size() != spectrum_.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "phase sequence length differs from dimension");
    }
}

Matrix ShiftOperator::raising() const { return power(1); }

Matrix ShiftOperator::power(int power) const {
    const auto d = static_cast<Eigen::Index>(spectrum_.dim());
    Matrix out = Matrix::Zero(d, d);
    const auto k = static_cast<Eigen::Index>(std::abs(power));
    for (Eigen::Index n = 0; n + k < d; ++n) {
        const Complex element = std::polar(
            1.0, chi_[static_cast<std::size_t>(n + k)] - chi_[static_cast<std::size_t>(n)]);
        if (power >= 0) {
            out(n + k, n) = element;
        } else {
            out(n, n + k) = std::conj(element);
        }
    }
    return out;
}

} // namespace phasecov
