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

#include "phasecov/states.hpp"

#include <cmath>
#include <vector>

#include "phasecov/error.hpp"
#include "phasecov/rng.hpp"

namespace phasecov {

namespace {

Eigen::VectorXcd normalised(const Spectrum &spectrum, std::span<const Complex> amplitudes) {
    if (amplitudes.size() != spectrum.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "amplitude count " +
                                                      std::to_string(amplitudes.size()) +
                                                      " differs from dimension " +
                                                      std::to_string(spectrum.dim()));
    }
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(amplitudes.size()));
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        psi(static_cast<Eigen::Index>(i)) = amplitudes[i];
    }
    const double norm = psi.norm();
    if (!(norm > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "state vector has zero norm");
    }
    return psi / norm;
}

std::vector<double> simplex_point(Rng &rng, std::size_t rank) {
    std::vector<double> weights(rank);
    double total = 0.0;
    for (double &w : weights) {
        w = -std::log1p(-rng.uniform());
        total += w;
    }
    if (!(total > 0.0)) {
        weights.assign(rank, 1.0);
        total = static_cast<double>(rank);
    }
    for (double &w : weights) {
        w /= total;
    }
    return weights;
}

} // namespace

DensityMatrix pure_state(const Spectrum &spectrum, std::span<const Complex> amplitudes) {
    const Eigen::VectorXcd psi = normalised(spectrum, amplitudes);
    return make_density(spectrum, psi * psi.adjoint());
}

DensityMatrix standard_state(const Spectrum &spectrum, const StandardState &which) {
    const std::size_t d = spectrum.dim();
    std::vector<Complex> amplitudes(d, Complex(0.0));

    if (const auto *fock = std::get_if<FockState>(&which)) {
        const auto position = spectrum.position_of(fock->label);
        if (!position) {
            throw Error(ErrorCode::InvalidArgument,
                        "Fock label " + std::to_string(fock->label) + " is outside the spectrum");
        }
        amplitudes[*position] = 1.0;
        return pure_state(spectrum, amplitudes);
    }
    if (std::holds_alternative<UniformPhaseState>(which)) {
        amplitudes.assign(d, Complex(1.0));
        return pure_state(spectrum, amplitudes);
    }
    if (const auto *coherent = std::get_if<TruncatedCoherentState>(&which)) {
        if (spectrum.kind() != SpectrumKind::NaturalsTruncated) {
            throw Error(ErrorCode::WrongSpectrumKind,
                        "coherent states need a naturals spectrum, got " +
                            std::string(to_string(spectrum.kind())));
        }
        Complex amplitude(1.0);
        for (std::size_t n = 0; n < d; ++n) {
            if (n > 0) {
                amplitude *= coherent->alpha / std::sqrt(static_cast<double>(n));
            }
            amplitudes[n] = amplitude;
        }
        return pure_state(spectrum, amplitudes);
    }
    const auto &thermal = std::get<ThermalState>(which);
    if (!(thermal.mean_number >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "thermal mean number must be non-negative");
    }
    const double ratio = thermal.mean_number / (1.0 + thermal.mean_number);
    RealMatrix populations = RealMatrix::Zero(static_cast<Eigen::Index>(d),
                                              static_cast<Eigen::Index>(d));
    double weight = 1.0;
    double total = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        populations(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weight;
        total += weight;
        weight *= ratio;
    }
    return make_density(spectrum, (populations / total).cast<Complex>());
}

DensityMatrix random_phase_pure(const Spectrum &spectrum, std::uint64_t seed, std::size_t rank,
                                std::optional<Support> support) {
    if (rank == 0) {
        throw Error(ErrorCode::InvalidArgument, "mixture rank must be at least 1");
    }
    const std::size_t d = spectrum.dim();
    const Support window = support.value_or(Support{0, d});
    if (window.count == 0 || window.begin + window.count > d) {
        throw Error(ErrorCode::InvalidArgument, "support window does not fit the spectrum");
    }

    Rng rng(seed);
    const std::vector<double> mix = simplex_point(rng, rank);
    const auto dim = static_cast<Eigen::Index>(d);
    RealMatrix rho = RealMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < rank; ++i) {
        Eigen::VectorXd psi = Eigen::VectorXd::Zero(dim);
        for (std::size_t n = window.begin; n < window.begin + window.count; ++n) {
            psi(static_cast<Eigen::Index>(n)) = rng.uniform();
        }
        if (!(psi.norm() > 0.0)) {
            psi(static_cast<Eigen::Index>(window.begin)) = 1.0;
        }
        psi /= psi.norm();
        rho += mix[i] * (psi * psi.transpose());
    }
    const RealMatrix symmetric = 0.5 * (rho + rho.transpose());
    return make_density(spectrum, symmetric.cast<Complex>());
}

DensityMatrix random_density(const Spectrum &spectrum, std::uint64_t seed, std::size_t rank) {
    if (rank == 0) {
        throw Error(ErrorCode::InvalidArgument, "mixture rank must be at least 1");
    }
    Rng rng(seed);
    const std::vector<double> mix = simplex_point(rng, rank);
    const auto dim = static_cast<Eigen::Index>(spectrum.dim());
    Matrix rho = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < rank; ++i) {
        Eigen::VectorXcd psi(dim);
        for (Eigen::Index n = 0; n < dim; ++n) {
            psi(n) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        }
        psi /= psi.norm();
        rho += mix[i] * (psi * psi.adjoint());
    }
    return make_density(spectrum, std::move(rho));
}

} // namespace phasecov
