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

#include "phasecov/cost_function.hpp"
#include "phasecov/generator.hpp"
#include "phasecov/phase_purity.hpp"

namespace phasecov {

/**
 * Contribution of one generator term to T_k = -2 Re d<e_+^k>/dt, split by
 * the kind of sum it comes from. Every part is a sum of
 * |rho_{l,l+k}| * |...|^2 and therefore non-negative.
 */
struct TermRate {
    std::size_t term = 0;
    std::size_t k = 0;
    /// |w(a) - w(a + k)|^2 terms with both endpoints inside the spectrum.
    double bulk = 0.0;
    /// Lowering terms, l in [max(0, m - k), m): |w(l - m + k)|^2.
    double bottom_boundary = 0.0;
    /// Raising terms whose upper endpoint falls off the top: |w(l + m)|^2.
    double top_boundary = 0.0;

    [[nodiscard]] double total() const noexcept { return bulk + bottom_boundary + top_boundary; }
};

struct CostDerivative {
    /// Index k-1 holds T_k, k = 1..order of the cost.
    std::vector<double> moment_rates;
    std::vector<TermRate> term_rates;
    /// d<C>/dt = sum_k c_k T_k.
    double total = 0.0;
};

/// Closed-form rates from the moduli of rho and the weights of gen (after
/// regauging to the state's chi).
CostDerivative cost_derivative_analytic(const CovariantGenerator &gen, const DensityMatrix &rho,
                                        const PhasePureDecomposition &decomp,
                                        const CostFunction &cost);

/// Per-term rates from dense operators: result[term][k-1] is
/// -Tr[(e_+^k + e_-^k) L_term(rho)], the numeric T_k of that term.
std::vector<std::vector<double>> term_rates_numeric(const CovariantGenerator &gen,
                                                    const DensityMatrix &rho,
                                                    const PhasePureDecomposition &decomp,
                                                    std::size_t max_k);

/// Tr[C L(rho)] with dense C and dense L: the oracle for the analytic form.
double cost_derivative_numeric(const CovariantGenerator &gen, const DensityMatrix &rho,
                               const PhasePureDecomposition &decomp, const CostFunction &cost);
double cost_derivative_numeric(const CovariantGenerator &gen, const DensityMatrix &rho,
                               const CostFunction &cost);

/// Chain rule f'(<C>) d<C>/dt.
double uncertainty_rate(const CostDerivative &derivative, const DensityMatrix &rho,
                        const PhasePureDecomposition &decomp, const CostFunction &cost);

} // namespace phasecov
