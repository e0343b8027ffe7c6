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

#include "phasecov/density_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "phasecov/error.hpp"

namespace phasecov {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

} // namespace

DensityMatrix::DensityMatrix(Spectrum spectrum, Matrix entries)
    : spectrum_(spectrum), entries_(std::move(entries)) {
    if (entries_.rows() != idx(spectrum_.dim()) || entries_.cols() != idx(spectrum_.dim())) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix is " + std::to_string(entries_.rows()) + "x" +
                        std::to_string(entries_.cols()) + ", spectrum has dimension " +
                        std::to_string(spectrum_.dim()));
    }
}

DensityMatrix DensityMatrix::unvalidated(Spectrum spectrum, Matrix entries) {
    return {spectrum, std::move(entries)};
}

double DensityMatrix::trace_error() const { return std::abs(entries_.trace() - Complex(1.0)); }

double DensityMatrix::hermitian_residue() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    // Eigen reads only the lower triangle, so pass the Hermitian part.
    const Matrix hermitian = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityMatrix::population(std::size_t position) const {
    return entries_(idx(position), idx(position)).real();
}

double DensityMatrix::tail_mass() const {
    if (!spectrum_.is_truncated()) {
        return 0.0;
    }
    const std::size_t d = dim();
    const std::size_t width = std::min(spectrum_.tail_width(), d);
    double mass = 0.0;
    for (std::size_t i = d - width; i < d; ++i) {
        mass += population(i);
    }
    if (spectrum_.kind() == SpectrumKind::IntegersTruncated) {
        // The bottom window may overlap the top one for tiny d.
        for (std::size_t i = 0; i < width && i < d - width; ++i) {
            mass += population(i);
        }
    }
    return mass;
}

double DensityMatrix::number_mean() const {
    double mean = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        mean += population(i) * spectrum_.label(i);
    }
    return mean;
}

double DensityMatrix::number_variance() const {
    const double mean = number_mean();
    double second = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) {
        const double centred = spectrum_.label(i) - mean;
        second += population(i) * centred * centred;
    }
    return second;
}

DensityMatrix make_density(const Spectrum &spectrum, Matrix entries,
                           const DensityTolerances &tol) {
    DensityMatrix rho(spectrum, std::move(entries));
    const double herm = rho.hermitian_residue();
    if (herm > tol.hermitian) {
        throw Error(ErrorCode::NotHermitian,
                    "max |rho_nm - conj(rho_mn)| = " + format_magnitude(herm), herm);
    }
    const double trace = rho.trace_error();
    if (trace > tol.trace) {
        throw Error(ErrorCode::NotUnitTrace, "|Tr rho - 1| = " + format_magnitude(trace), trace);
    }
    const double least = rho.min_eigenvalue();
    if (least < tol.min_eigenvalue) {
        throw Error(ErrorCode::NotPSD, "smallest eigenvalue " + format_magnitude(least), least);
    }
    return rho;
}

DensityMatrix apply_diagonal_phases(const DensityMatrix &rho, const std::vector<double> &phases) {
    if (phases.size() != rho.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "phase vector length differs from dimension");
    }
    Matrix out = rho.entries();
    for (std::size_t n = 0; n < rho.dim(); ++n) {
        for (std::size_t m = 0; m < rho.dim(); ++m) {
            out(idx(n), idx(m)) *= std::polar(1.0, phases[n] - phases[m]);
        }
    }
    return DensityMatrix::unvalidated(rho.spectrum(), std::move(out));
}

DensityMatrix rotate_phase(const DensityMatrix &rho, double theta) {
    std::vector<double> phases(rho.dim());
    for (std::size_t n = 0; n < rho.dim(); ++n) {
        phases[n] = theta * rho.spectrum().label(n);
    }
    return apply_diagonal_phases(rho, phases);
}

} // namespace phasecov
