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

#include <string>
#include <utility>
#include <vector>

namespace phasecov {

enum class UncertaintyMap {
    ReciprocalPeakLikelihood,  ///< f(x) = -1/x
    PhaseDeviation,            ///< f(x) = 2(1 - x^2/4)
    Affine,                    ///< f(x) = slope * x + intercept, slope > 0
};

/**
 * Holevo-class cost C = c0 - sum_k c_k (e_+^k + e_-^k), c_k >= 0, together
 * with the monotone map f giving the phase uncertainty f(<C>).
 *
 * coefficient(k) is c_k for 1 <= k <= order(). Construction rejects negative
 * coefficients and maps that are not increasing over the attainable range
 * [c0 - 2 sum c_k, c0] of <C> on phase-pure states.
 */
class CostFunction {
  public:
    /// c0 = 0, c1 = 1, f(x) = 2(1 - x^2/4) = 2(1 - <e_+>^2).
    static CostFunction phase_deviation();
    /// c0 = -1, c_k = 1 for k = 1..dim-1, f(x) = -1/x = 1/(2 pi p(0)).
    static CostFunction reciprocal_peak_likelihood(std::size_t dim);
    static CostFunction affine(double c0, std::vector<double> coefficients, double slope,
                               double intercept = 0.0);
    /// Arbitrary coefficients under one of the named maps. slope/intercept
    /// are used only by the affine map.
    static CostFunction with_map(UncertaintyMap map, double c0, std::vector<double> coefficients,
                                 std::string name, double slope = 1.0, double intercept = 0.0);

    [[nodiscard]] UncertaintyMap map() const noexcept { return map_; }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] double c0() const noexcept { return c0_; }
    [[nodiscard]] std::size_t order() const noexcept { return coefficients_.size(); }
    [[nodiscard]] double coefficient(std::size_t k) const;
    [[nodiscard]] const std::vector<double> &coefficients() const noexcept {
        return coefficients_;
    }

    /// f(x). For the reciprocal map, x >= 0 returns +infinity.
    [[nodiscard]] double uncertainty(double mean_cost) const;
    /// f'(x).
    [[nodiscard]] double slope_at(double mean_cost) const;
    [[nodiscard]] std::pair<double, double> attainable_range() const;

  private:
    CostFunction(UncertaintyMap map, std::string name, double c0,
                 std::vector<double> coefficients, double slope, double intercept);

    UncertaintyMap map_;
    std::string name_;
    double c0_;
    std::vector<double> coefficients_;
    double slope_;
    double intercept_;
};

} // namespace phasecov
