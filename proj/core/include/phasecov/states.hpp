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

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "phasecov/density_matrix.hpp"

namespace phasecov {

struct FockState {
    int label = 0;
};
/// Amplitudes 1/sqrt(d) on every label.
struct UniformPhaseState {};
/// Amplitudes proportional to alpha^n / sqrt(n!), renormalised. Naturals only.
struct TruncatedCoherentState {
    Complex alpha{1.0, 0.0};
};
/// Populations proportional to (nbar / (1 + nbar))^i over positions i.
struct ThermalState {
    double mean_number = 1.0;
};

using StandardState =
    std::variant<FockState, UniformPhaseState, TruncatedCoherentState, ThermalState>;

DensityMatrix standard_state(const Spectrum &spectrum, const StandardState &which);

/// |psi><psi| / <psi|psi>.
DensityMatrix pure_state(const Spectrum &spectrum, std::span<const Complex> amplitudes);

/// Contiguous block of positions [begin, begin + count).
struct Support {
    std::size_t begin = 0;
    std::size_t count = 0;
};

/**
 * Seeded sampler of phase-pure states with chi = 0.
 *
 * rho = sum_i p_i psi_i psi_i^dagger where each psi_i has non-negative real
 * amplitudes on `support` (default: every position) and p is a uniform
 * point of the (rank-1)-simplex.
 */
DensityMatrix random_phase_pure(const Spectrum &spectrum, std::uint64_t seed, std::size_t rank,
                                std::optional<Support> support = std::nullopt);

/// Seeded sampler of generic mixed states with complex amplitudes (not
/// phase-pure in general for d > 2).
DensityMatrix random_density(const Spectrum &spectrum, std::uint64_t seed, std::size_t rank);

} // namespace phasecov
