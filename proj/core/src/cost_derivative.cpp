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

#include "phasecov/cost_derivative.hpp"

#include <cstdlib>

#include "phasecov/error.hpp"
#include "phasecov/phase_statistics.hpp"
#include "phasecov/shift_operator.hpp"

namespace phasecov {

namespace {

void check_inputs(const CovariantGenerator &gen, const DensityMatrix &rho,
                  const PhasePureDecomposition &decomp) {
    const std::size_t d = rho.dim();
    if (gen.dim() != d || decomp.chi.size() != d) {
        throw Error(ErrorCode::DimensionMismatch,
                    "generator, state and decomposition dimensions differ");
    }
    for (const CovariantTerm &term : gen.terms()) {
        if (term.weight.size() != d || static_cast<std::size_t>(std::abs(term.shift)) >= d) {
            throw Error(ErrorCode::NotCovariantForm, "term with shift " +
                                                         std::to_string(term.shift) +
                                                         " is not a weighted shift on d = " +
                                                         std::to_string(d));
        }
    }
}

void check_cost_order(const CostFunction &cost, std::size_t d) {
    if (cost.order() >= d) {
        throw Error(ErrorCode::KTooLarge, "cost order " + std::to_string(cost.order()) +
                                              " exceeds d-1 = " + std::to_string(d - 1));
    }
}

TermRate term_rate(const CovariantTerm &term, const RealMatrix &moduli, std::size_t k) {
    const auto d = static_cast<std::size_t>(moduli.rows());
    const std::vector<Complex> &w = term.weight;
    TermRate rate;
    rate.k = k;
    for (std::size_t l = 0; l + k < d; ++l) {
        const double coherence =
            moduli(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l + k));
        if (coherence == 0.0) {
            continue;
        }
        if (term.shift >= 0) {
            const auto m = static_cast<std::size_t>(term.shift);
            const std::size_t lower = l + m;
            const std::size_t upper = l + m + k;
            if (upper < d) {
                rate.bulk += coherence * std::norm(w[lower] - w[upper]);
            } else if (lower < d) {
                rate.top_boundary += coherence * std::norm(w[lower]);
            }
        } else {
            const auto m = static_cast<std::size_t>(-term.shift);
            if (l >= m) {
                rate.bulk += coherence * std::norm(w[l - m] - w[l - m + k]);
            } else if (l + k >= m) {
                rate.bottom_boundary += coherence * std::norm(w[l + k - m]);
            }
        }
    }
    return rate;
}

} // namespace

CostDerivative cost_derivative_analytic(const CovariantGenerator &gen, const DensityMatrix &rho,
                                        const PhasePureDecomposition &decomp,
                                        const CostFunction &cost) {
    check_inputs(gen, rho, decomp);
    check_cost_order(cost, rho.dim());
    const CovariantGenerator gauged = regauge(gen, decomp.chi);

    CostDerivative result;
    result.moment_rates.assign(cost.order(), 0.0);
    for (std::size_t j = 0; j < gauged.terms().size(); ++j) {
        for (std::size_t k = 1; k <= cost.order(); ++k) {
            TermRate rate = term_rate(gauged.terms()[j], decomp.moduli, k);
            rate.term = j;
            result.moment_rates[k - 1] += rate.total();
            result.term_rates.push_back(rate);
        }
    }
    for (std::size_t k = 1; k <= cost.order(); ++k) {
        result.total += cost.coefficient(k) * result.moment_rates[k - 1];
    }
    return result;
}

std::vector<std::vector<double>> term_rates_numeric(const CovariantGenerator &gen,
                                                    const DensityMatrix &rho,
                                                    const PhasePureDecomposition &decomp,
                                                    std::size_t max_k) {
    check_inputs(gen, rho, decomp);
    if (max_k >= rho.dim()) {
        throw Error(ErrorCode::KTooLarge, "order " + std::to_string(max_k) +
                                              " exceeds d-1 = " + std::to_string(rho.dim() - 1));
    }
    const ShiftOperator shift(rho.spectrum(), decomp.chi);
    std::vector<Matrix> symmetric_shifts;
    for (std::size_t k = 1; k <= max_k; ++k) {
        const Matrix raise = shift.power(static_cast<int>(k));
        symmetric_shifts.emplace_back(raise + raise.adjoint());
    }

    std::vector<std::vector<double>> rates;
    for (const CovariantTerm &term : gen.terms()) {
        const LindbladGenerator single{gen.spectrum(), {gen.jump_operator(term)}};
        const Matrix change = lindblad_apply(single, rho.entries());
        std::vector<double> per_k;
        for (const Matrix &sym : symmetric_shifts) {
            per_k.push_back(-(sym * change).trace().real());
        }
        rates.push_back(std::move(per_k));
    }
    return rates;
}

double cost_derivative_numeric(const CovariantGenerator &gen, const DensityMatrix &rho,
                               const PhasePureDecomposition &decomp, const CostFunction &cost) {
    check_inputs(gen, rho, decomp);
    check_cost_order(cost, rho.dim());
    const Matrix c = cost_operator(ShiftOperator(rho.spectrum(), decomp.chi), cost);
    const Matrix change = lindblad_apply(to_dense(gen), rho.entries());
    return (c * change).trace().real();
}

double cost_derivative_numeric(const CovariantGenerator &gen, const DensityMatrix &rho,
                               const CostFunction &cost) {
    return cost_derivative_numeric(gen, rho, require_phase_pure(rho), cost);
}

double uncertainty_rate(const CostDerivative &derivative, const DensityMatrix &rho,
                        const PhasePureDecomposition &decomp, const CostFunction &cost) {
    return cost.slope_at(mean_cost(rho, decomp, cost)) * derivative.total;
}

} // namespace phasecov
