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

#include <optional>
#include <vector>

#include "phasecov/density_matrix.hpp"

namespace phasecov {

/// rho_nm = moduli_nm * exp(i(chi_n - chi_m)).
struct PhasePureDecomposition {
    RealMatrix moduli;
    std::vector<double> chi;
};

struct PhasePurityTolerances {
    /// Entries at or below this modulus impose no phase constraint.
    double modulus = 1e-10;
    /// Largest accepted wrapped phase mismatch on a constrained entry.
    double phase = 1e-8;
};

struct PhasePurityReport {
    std::optional<PhasePureDecomposition> decomposition;
    double max_residual = 0.0;
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;

    [[nodiscard]] bool phase_pure() const noexcept { return decomposition.has_value(); }
};

/**
 * Tests the factorisation arg rho_nm = chi_n - chi_m.
 *
 * chi is propagated breadth-first over the graph of entries with modulus
 * above tol.modulus, starting from the lowest populated position of each
 * connected component (which gets chi = 0). Every remaining constrained entry
 * is then checked against the propagated phases.
 */
PhasePurityReport is_phase_pure(const DensityMatrix &rho, const PhasePurityTolerances &tol = {});

/// As is_phase_pure, throwing Error(Inconsistent) with the residual on failure.
PhasePureDecomposition require_phase_pure(const DensityMatrix &rho,
                                          const PhasePurityTolerances &tol = {});

/// U rho U^dagger with U = diag(e^{-i chi_n}); the result has real,
/// non-negative entries on every constrained position.
DensityMatrix gauge_fix(const DensityMatrix &rho, const PhasePureDecomposition &decomp);

} // namespace phasecov
