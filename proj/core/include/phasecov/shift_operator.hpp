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

#include <vector>

#include "phasecov/spectrum.hpp"
#include "phasecov/types.hpp"

namespace phasecov {

/**
 * Phase-referenced raising operator e_+ with
 * (e_+)_{n+1,n} = exp(i(chi_{n+1} - chi_n)).
 *
 * The shift is non-cyclic on every spectrum kind, so e_+^d = 0.
 */
class ShiftOperator {
  public:
    /// chi defaults to all zeros (the 0/1 subdiagonal shift).
    explicit ShiftOperator(Spectrum spectrum, std::vector<double> chi = {});

    [[nodiscard]] const Spectrum &spectrum() const noexcept { return spectrum_; }
    [[nodiscard]] const std::vector<double> &chi() const noexcept { return chi_; }

    [[nodiscard]] Matrix raising() const;
    [[nodiscard]] Matrix lowering() const { return raising().adjoint(); }
    /// e_+^power for power >= 0, e_-^|power| for power < 0.
    [[nodiscard]] Matrix power(int power) const;

  private:
    Spectrum spectrum_;
    std::vector<double> chi_;
};

} // namespace phasecov
