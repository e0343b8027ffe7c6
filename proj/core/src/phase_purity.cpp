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

#include "phasecov/phase_purity.hpp"

#include <cmath>
#include <deque>

#include "phasecov/error.hpp"

namespace phasecov {

PhasePurityReport is_phase_pure(const DensityMatrix &rho, const PhasePurityTolerances &tol) {
    const std::size_t d = rho.dim();
    const Matrix &entries = rho.entries();
    RealMatrix moduli = entries.cwiseAbs();
    auto linked = [&](std::size_t n, std::size_t m) {
        return moduli(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m)) > tol.modulus;
    };

    std::vector<double> chi(d, 0.0);
    std::vector<bool> visited(d, false);
    std::deque<std::size_t> queue;
    // Ascending roots: each component is rooted at its lowest position, which
    // in a PSD matrix is also its lowest populated label.
    for (std::size_t root = 0; root < d; ++root) {
        if (visited[root]) {
            continue;
        }
        visited[root] = true;
        queue.push_back(root);
        while (!queue.empty()) {
            const std::size_t n = queue.front();
            queue.pop_front();
            for (std::size_t m = 0; m < d; ++m) {
                if (visited[m] || !linked(n, m)) {
                    continue;
                }
                visited[m] = true;
                chi[m] = wrap_angle(chi[n] - std::arg(rho(n, m)));
                queue.push_back(m);
            }
        }
    }

    PhasePurityReport report;
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            if (n == m || !linked(n, m)) {
                continue;
            }
            const double residual = std::abs(wrap_angle(std::arg(rho(n, m)) - (chi[n] - chi[m])));
            if (residual > report.max_residual) {
                report.max_residual = residual;
                report.worst_row = n;
                report.worst_col = m;
            }
        }
    }
    if (report.max_residual <= tol.phase) {
        report.decomposition = PhasePureDecomposition{std::move(moduli), std::move(chi)};
    }
    return report;
}

PhasePureDecomposition require_phase_pure(const DensityMatrix &rho,
                                          const PhasePurityTolerances &tol) {
    PhasePurityReport report = is_phase_pure(rho, tol);
    if (!report.phase_pure()) {
        throw Error(ErrorCode::Inconsistent,
                    "phase residual " + format_magnitude(report.max_residual) + " at entry (" +
                        std::to_string(report.worst_row) + ", " +
                        std::to_string(report.worst_col) + ")",
                    report.max_residual);
    }
    return std::move(*report.decomposition);
}

DensityMatrix gauge_fix(const DensityMatrix &rho, const PhasePureDecomposition &decomp) {
    std::vector<double> inverse(decomp.chi.size());
    for (std::size_t n = 0; n < inverse.size(); ++n) {
        inverse[n] = -decomp.chi[n];
    }
    return apply_diagonal_phases(rho, inverse);
}

} // namespace phasecov
