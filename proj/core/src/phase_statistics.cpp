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

#include "phasecov/phase_statistics.hpp"

#include <cmath>
#include <numeric>

#include "phasecov/error.hpp"

namespace phasecov {

namespace {

void check_order(std::size_t k, std::size_t dim) {
    if (k == 0) {
        throw Error(ErrorCode::InvalidArgument, "moment order must be positive");
    }
    if (k >= dim) {
        throw Error(ErrorCode::KTooLarge, "order " + std::to_string(k) +
                                              " exceeds d-1 = " + std::to_string(dim - 1));
    }
}

// Tr[rho e_+^k] for the phase reference chi.
Complex shifted_trace(const DensityMatrix &rho, std::span<const double> chi, std::size_t k) {
    Complex sum(0.0);
    for (std::size_t l = 0; l + k < rho.dim(); ++l) {
        sum += rho(l, l + k) * std::polar(1.0, chi[l + k] - chi[l]);
    }
    return sum;
}

} // namespace

std::vector<double> phase_grid(std::size_t points) {
    std::vector<double> grid(points);
    for (std::size_t j = 0; j < points; ++j) {
        grid[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(points);
    }
    return grid;
}

double integrate_periodic(std::span<const double> values) {
    if (values.empty()) {
        return 0.0;
    }
    const double sum = std::accumulate(values.begin(), values.end(), 0.0);
    return sum * kTwoPi / static_cast<double>(values.size());
}

Complex moment_complex(const DensityMatrix &rho, const PhasePureDecomposition &decomp,
                       std::size_t k) {
    check_order(k, rho.dim());
    if (decomp.chi.size() != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "decomposition does not match the state");
    }
    return shifted_trace(rho, decomp.chi, k);
}

double moment(const DensityMatrix &rho, const PhasePureDecomposition &decomp, std::size_t k) {
    return moment_complex(rho, decomp, k).real();
}

std::vector<double> povm_density(const DensityMatrix &rho, std::span<const double> chi,
                                 std::size_t points) {
    const std::size_t d = rho.dim();
    if (chi.size() != d) {
        throw Error(ErrorCode::DimensionMismatch, "phase sequence length differs from dimension");
    }
    // <e|rho|e> = Tr rho + 2 Re sum_k Tr[rho e_+^k] e^{ik phi} for Hermitian rho.
    std::vector<Complex> harmonics(d, Complex(0.0));
    for (std::size_t k = 1; k < d; ++k) {
        harmonics[k] = shifted_trace(rho, chi, k);
    }
    const double trace = rho.entries().trace().real();
    const std::vector<double> grid = phase_grid(points);
    std::vector<double> density(points);
    for (std::size_t j = 0; j < points; ++j) {
        double value = trace;
        for (std::size_t k = 1; k < d; ++k) {
            value += 2.0 * (harmonics[k] * std::polar(1.0, static_cast<double>(k) * grid[j])).real();
        }
        density[j] = value / kTwoPi;
    }
    return density;
}

std::vector<double> phase_distribution(const DensityMatrix &rho,
                                       const PhasePureDecomposition &decomp, std::size_t points) {
    if (points < 2 * rho.dim()) {
        throw Error(ErrorCode::GridTooCoarse, std::to_string(points) + " grid points for d = " +
                                                  std::to_string(rho.dim()) + " (need >= 2d)");
    }
    return povm_density(rho, decomp.chi, points);
}

double mean_cost(const DensityMatrix &rho, const PhasePureDecomposition &decomp,
                 const CostFunction &cost) {
    if (cost.order() >= rho.dim() && rho.dim() > 0) {
        throw Error(ErrorCode::KTooLarge, "cost order " + std::to_string(cost.order()) +
                                              " exceeds d-1 = " + std::to_string(rho.dim() - 1));
    }
    double value = cost.c0();
    for (std::size_t k = 1; k <= cost.order(); ++k) {
        if (cost.coefficient(k) != 0.0) {
            value -= 2.0 * cost.coefficient(k) * moment(rho, decomp, k);
        }
    }
    return value;
}

double phase_uncertainty(const DensityMatrix &rho, const PhasePureDecomposition &decomp,
                         const CostFunction &cost) {
    return cost.uncertainty(mean_cost(rho, decomp, cost));
}

Matrix cost_operator(const ShiftOperator &shift, const CostFunction &cost) {
    const std::size_t d = shift.spectrum().dim();
    if (cost.order() >= d) {
        throw Error(ErrorCode::KTooLarge, "cost order " + std::to_string(cost.order()) +
                                              " exceeds d-1 = " + std::to_string(d - 1));
    }
    const auto n = static_cast<Eigen::Index>(d);
    Matrix c = cost.c0() * Matrix::Identity(n, n);
    for (std::size_t k = 1; k <= cost.order(); ++k) {
        const Matrix raise = shift.power(static_cast<int>(k));
        c -= cost.coefficient(k) * (raise + raise.adjoint());
    }
    return c;
}

} // namespace phasecov
