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

#include <span>
#include <vector>

#include "phasecov/cost_function.hpp"
#include "phasecov/phase_purity.hpp"
#include "phasecov/shift_operator.hpp"

namespace phasecov {

/// phi_j = 2 pi j / M, j = 0..M-1.
std::vector<double> phase_grid(std::size_t points);

/// Equal-weight (trapezoidal) rule on a periodic grid covering [0, 2 pi).
double integrate_periodic(std::span<const double> values);

/// Tr[rho e_+^k] with e_+ built from decomp.chi. Throws KTooLarge for k >= d.
Complex moment_complex(const DensityMatrix &rho, const PhasePureDecomposition &decomp,
                       std::size_t k);
/// Real part of moment_complex; equals sum_l |rho_{l,l+k}| for phase-pure rho.
double moment(const DensityMatrix &rho, const PhasePureDecomposition &decomp, std::size_t k);

/**
 * <e(phi)|rho|e(phi)> / 2 pi on an M-point grid, with
 * <n|e(phi)> = exp(i(n phi + chi_n)).
 *
 * Valid for any rho; only the phase sequence chi is taken from the caller.
 */
std::vector<double> povm_density(const DensityMatrix &rho, std::span<const double> chi,
                                 std::size_t points);

/// Phase probability density of a phase-pure state. Throws GridTooCoarse for
/// M < 2d.
std::vector<double> phase_distribution(const DensityMatrix &rho,
                                       const PhasePureDecomposition &decomp, std::size_t points);

/// <C> = c0 - 2 sum_k c_k <e_+^k>.
double mean_cost(const DensityMatrix &rho, const PhasePureDecomposition &decomp,
                 const CostFunction &cost);

/// f(<C>).
double phase_uncertainty(const DensityMatrix &rho, const PhasePureDecomposition &decomp,
                         const CostFunction &cost);

/// Dense cost operator C for the given shift (phase reference).
Matrix cost_operator(const ShiftOperator &shift, const CostFunction &cost);

} // namespace phasecov
