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
#include <vector>

#include "phasecov/density_matrix.hpp"

namespace phasecov {

/**
 * One Lindblad operator of phase-covariant form.
 *
 * shift >= 0: B = diag(weight) S^shift (raising).
 * shift <  0: B = diag(weight) (S^dagger)^|shift| (lowering).
 *
 * S is the plain 0/1 shift |n> -> |n+1>, and weight[i] is the value of the
 * weight function at position i. Because the diagonal sits on the left, a
 * basis vector at position s is sent to weight[s + shift] at s + shift.
 */
struct CovariantTerm {
    int shift = 0;
    std::vector<Complex> weight;
};

/// Sum of L[B] over covariant terms; several terms may share a shift.
class CovariantGenerator {
  public:
    explicit CovariantGenerator(Spectrum spectrum) : spectrum_(spectrum) {}

    /// Throws NotCovariantForm if the weight length is not d or |shift| >= d.
    CovariantGenerator &add_term(int shift, std::vector<Complex> weight);

    [[nodiscard]] const Spectrum &spectrum() const noexcept { return spectrum_; }
    [[nodiscard]] const std::vector<CovariantTerm> &terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t dim() const noexcept { return spectrum_.dim(); }

    /// Dense matrix of a term's operator B.
    [[nodiscard]] Matrix jump_operator(const CovariantTerm &term) const;

  private:
    Spectrum spectrum_;
    std::vector<CovariantTerm> terms_;
};

/// Generic Lindblad generator sum_j L[B_j] with dense operators; used for
/// oracles and for non-covariant counterexamples.
struct LindbladGenerator {
    Spectrum spectrum;
    std::vector<Matrix> jump_operators;
};

LindbladGenerator to_dense(const CovariantGenerator &gen);

/// L[O] rho = O rho O^dagger - (O^dagger O rho + rho O^dagger O) / 2, summed
/// over terms. The covariant overload works entrywise without forming B.
Matrix lindblad_apply(const CovariantGenerator &gen, const Matrix &rho);
Matrix lindblad_apply(const LindbladGenerator &gen, const Matrix &rho);
Matrix lindblad_apply(const CovariantGenerator &gen, const DensityMatrix &rho);

/// Entrywise max |L(U rho U^dagger) - U L(rho) U^dagger| with U = e^{iF theta}.
double check_covariance(const LindbladGenerator &gen, const Matrix &rho, double theta);
double check_covariance(const CovariantGenerator &gen, const Matrix &rho, double theta);

/**
 * The same dynamics expressed relative to the phase reference chi: weights
 * become weight(t) * exp(-i(chi_t - chi_s)) for a jump s -> t. Conjugating
 * the state by diag(e^{-i chi}) and the generator by this map leaves
 * Tr[C L(rho)] unchanged.
 */
CovariantGenerator regauge(const CovariantGenerator &gen, const std::vector<double> &chi);

/**
 * Uncertainty-preserving generator: raising terms with constant weight
 * sqrt(u_m) for m = 1..u.size() and, on integer spectra, lowering terms with
 * constant weight sqrt(v_m). Zero rates emit no term.
 *
 * Throws NegativeWeight for negative rates and WrongSpectrumKind for cyclic
 * spectra or when v is given on a naturals spectrum.
 */
CovariantGenerator build_preserving_generator(const Spectrum &spectrum,
                                              const std::vector<double> &u,
                                              const std::optional<std::vector<double>> &v = {});

struct PurityPreservation {
    bool preserving = true;
    double max_spread = 0.0;
    std::vector<double> term_spreads;
};

/// Largest wrapped arg difference between non-negligible weights of each term;
/// preserving iff every spread is <= 1e-10.
PurityPreservation check_phase_purity_preservation(const CovariantGenerator &gen);

struct RandomGeneratorOptions {
    std::size_t max_shift = 3;
    std::size_t terms_per_shift = 2;
    /// Restrict to real non-negative weights.
    bool purity_preserving = false;
};

/// Shifts -max_shift..max_shift (capped at d-1), terms_per_shift terms each,
/// magnitudes uniform on [0, 1] and phases uniform on [0, 2 pi).
CovariantGenerator random_covariant_generator(const Spectrum &spectrum, std::uint64_t seed,
                                              const RandomGeneratorOptions &options = {});

} // namespace phasecov
