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

#include "phasecov/spectrum.hpp"
#include "phasecov/types.hpp"

namespace phasecov {

struct DensityTolerances {
    double hermitian = 1e-12;
    double trace = 1e-12;
    double min_eigenvalue = -1e-10;
};

/**
 * Density matrix indexed by the positions of a Spectrum.
 *
 * Instances built through make_density() satisfy Hermiticity, unit trace and
 * positivity within DensityTolerances. unvalidated() exists for integrator
 * output, where those properties are diagnostics rather than preconditions
 * (a time-reversed run may leave the positive cone).
 */
class DensityMatrix {
  public:
    static DensityMatrix unvalidated(Spectrum spectrum, Matrix entries);

    [[nodiscard]] const Spectrum &spectrum() const noexcept { return spectrum_; }
    [[nodiscard]] const Matrix &entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t dim() const noexcept { return spectrum_.dim(); }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    [[nodiscard]] double trace_error() const;
    [[nodiscard]] double hermitian_residue() const;
    [[nodiscard]] double min_eigenvalue() const;
    [[nodiscard]] double population(std::size_t position) const;

    /// Population on the top ceil(d/8) labels, plus the bottom ones for Z.
    /// Always 0 for cyclic spectra, whose model is exact.
    [[nodiscard]] double tail_mass() const;

    /// Tr[rho F] and Tr[rho F^2] - Tr[rho F]^2 with F = diag(labels).
    [[nodiscard]] double number_mean() const;
    [[nodiscard]] double number_variance() const;

  private:
    DensityMatrix(Spectrum spectrum, Matrix entries);

    friend DensityMatrix make_density(const Spectrum &, Matrix, const DensityTolerances &);

    Spectrum spectrum_;
    Matrix entries_;
};

/// Validating constructor. Throws Error with NotHermitian, NotUnitTrace or
/// NotPSD (carrying the measured violation), or DimensionMismatch.
DensityMatrix make_density(const Spectrum &spectrum, Matrix entries,
                           const DensityTolerances &tol = {});

/// e^{iF theta} rho e^{-iF theta}.
DensityMatrix rotate_phase(const DensityMatrix &rho, double theta);

/// diag(e^{i phases}) rho diag(e^{-i phases}).
DensityMatrix apply_diagonal_phases(const DensityMatrix &rho, const std::vector<double> &phases);

} // namespace phasecov
