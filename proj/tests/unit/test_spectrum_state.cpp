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

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "phasecov/density_matrix.hpp"
#include "phasecov/error.hpp"
#include "phasecov/phase_purity.hpp"
#include "phasecov/phase_statistics.hpp"
#include "phasecov/rng.hpp"
#include "phasecov/states.hpp"

#include "oracles.hpp"

using namespace phasecov;
using Catch::Matchers::WithinAbs;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected phasecov::Error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("Spectrum labels", "[spectrum]") {
    CHECK(Spectrum::naturals(4).labels() == std::vector<int>{0, 1, 2, 3});
    CHECK(Spectrum::integers(5).labels() == std::vector<int>{-2, -1, 0, 1, 2});
    CHECK(Spectrum::integers(4).labels() == std::vector<int>{-2, -1, 0, 1});
    CHECK(Spectrum::cyclic(3).labels() == std::vector<int>{0, 1, 2});
    CHECK(Spectrum::integers(33).tail_width() == 5);
    CHECK(Spectrum::naturals(32).tail_width() == 4);
    CHECK_FALSE(Spectrum::integers(5).position_of(3).has_value());
    CHECK(*Spectrum::integers(5).position_of(-2) == 0);
    CHECK(code_of([] { Spectrum::cyclic(0); }) == ErrorCode::InvalidArgument);
    CHECK(parse_spectrum_kind("int") == SpectrumKind::IntegersTruncated);
    CHECK_FALSE(parse_spectrum_kind("reals").has_value());
}

TEST_CASE("make_density validates its invariants", "[density]") {
    const Spectrum s4 = Spectrum::cyclic(4);

    SECTION("maximally mixed state") {
        const DensityMatrix rho = make_density(s4, Matrix::Identity(4, 4) / 4.0);
        CHECK(rho.trace_error() < 1e-15);
        CHECK_THAT(rho.min_eigenvalue(), WithinAbs(0.25, 1e-14));
    }
    SECTION("trace 0.9") {
        Matrix m = Matrix::Identity(4, 4) * 0.225;
        try {
            make_density(s4, m);
            FAIL("accepted a trace-0.9 matrix");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::NotUnitTrace);
            CHECK_THAT(e.magnitude(), WithinAbs(0.1, 1e-12));
        }
    }
    SECTION("pure projector") {
        const Spectrum s2 = Spectrum::cyclic(2);
        Eigen::VectorXcd psi(2);
        psi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        const DensityMatrix rho = make_density(s2, psi * psi.adjoint());
        CHECK_THAT(rho.min_eigenvalue(), WithinAbs(0.0, 1e-14));
    }
    SECTION("non-Hermitian") {
        Matrix m = Matrix::Identity(4, 4) / 4.0;
        m(0, 1) = Complex(0.1, 0.0);
        CHECK(code_of([&] { make_density(s4, m); }) == ErrorCode::NotHermitian);
    }
    SECTION("negative eigenvalue") {
        Matrix m = Matrix::Zero(2, 2);
        m << 0.5, 0.7, 0.7, 0.5;
        CHECK(code_of([&] { make_density(Spectrum::cyclic(2), m); }) == ErrorCode::NotPSD);
    }
    SECTION("shape") {
        CHECK(code_of([&] { make_density(s4, Matrix::Identity(3, 3) / 3.0); }) ==
              ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("standard states", "[states]") {
    SECTION("fock") {
        const DensityMatrix rho = standard_state(Spectrum::naturals(5), FockState{2});
        for (std::size_t n = 0; n < 5; ++n) {
            for (std::size_t m = 0; m < 5; ++m) {
                CHECK(std::abs(rho(n, m) - Complex(n == 2 && m == 2 ? 1.0 : 0.0)) == 0.0);
            }
        }
        CHECK(code_of([] { standard_state(Spectrum::naturals(5), FockState{7}); }) ==
              ErrorCode::InvalidArgument);
    }
    SECTION("uniform phase state d=2") {
        const DensityMatrix rho = standard_state(Spectrum::cyclic(2), UniformPhaseState{});
        for (std::size_t n = 0; n < 2; ++n) {
            for (std::size_t m = 0; m < 2; ++m) {
                CHECK_THAT(std::abs(rho(n, m) - Complex(0.5)), WithinAbs(0.0, 1e-15));
            }
        }
    }
    SECTION("truncated coherent tail") {
        const DensityMatrix rho = standard_state(Spectrum::naturals(16), TruncatedCoherentState{});
        double tail = 0.0;
        for (std::size_t n = 9; n < 16; ++n) {
            tail += rho.population(n);
        }
        CHECK(tail < 1e-4);
        CHECK_THAT(tail, WithinAbs(oracle::truncated_poisson_tail(1.0, 16, 8), 1e-15));
    }
    SECTION("coherent needs naturals") {
        CHECK(code_of([] {
                  standard_state(Spectrum::integers(5), TruncatedCoherentState{});
              }) == ErrorCode::WrongSpectrumKind);
        CHECK(code_of([] {
                  standard_state(Spectrum::cyclic(5), TruncatedCoherentState{});
              }) == ErrorCode::WrongSpectrumKind);
    }
    SECTION("thermal") {
        const DensityMatrix rho = standard_state(Spectrum::naturals(40), ThermalState{0.5});
        CHECK_THAT(rho.population(1) / rho.population(0), WithinAbs(1.0 / 3.0, 1e-14));
        CHECK_THAT(rho.number_mean(), WithinAbs(0.5, 1e-12));
    }
}

TEST_CASE("is_phase_pure", "[phase_purity]") {
    SECTION("diagonal states have chi = 0") {
        const DensityMatrix rho = standard_state(Spectrum::naturals(6), ThermalState{1.0});
        const PhasePurityReport report = is_phase_pure(rho);
        REQUIRE(report.phase_pure());
        for (double chi : report.decomposition->chi) {
            CHECK(chi == 0.0);
        }
    }
    SECTION("psi = (1, i)/sqrt 2") {
        const std::vector<Complex> amps{1.0, Complex(0.0, 1.0)};
        const DensityMatrix rho = pure_state(Spectrum::cyclic(2), amps);
        const PhasePurityReport report = is_phase_pure(rho);
        REQUIRE(report.phase_pure());
        const auto &decomp = *report.decomposition;
        CHECK_THAT(decomp.chi[0], WithinAbs(0.0, 1e-15));
        CHECK_THAT(decomp.chi[1], WithinAbs(M_PI / 2, 1e-15));
        for (Eigen::Index n = 0; n < 2; ++n) {
            for (Eigen::Index m = 0; m < 2; ++m) {
                CHECK_THAT(decomp.moduli(n, m), WithinAbs(0.5, 1e-15));
            }
        }
    }
    SECTION("mixture with clashing phases is inconsistent") {
        const double r = 1.0 / std::sqrt(3.0);
        const Complex i(0.0, 1.0);
        const std::vector<std::vector<Complex>> psis{
            {r, r, r}, {r, r, r}, {r, r * i, -r}};
        Matrix m = Matrix::Zero(3, 3);
        for (const auto &psi : psis) {
            Eigen::VectorXcd v(3);
            v << psi[0], psi[1], psi[2];
            m += v * v.adjoint() / 3.0;
        }
        const double brute = oracle::cocycle_residual(m);
        REQUIRE(brute > 1e-8);
        const DensityMatrix rho = make_density(Spectrum::cyclic(3), m);
        const PhasePurityReport report = is_phase_pure(rho);
        CHECK_FALSE(report.phase_pure());
        CHECK(report.max_residual > 1e-8);
        CHECK(code_of([&] { require_phase_pure(rho); }) == ErrorCode::Inconsistent);
    }
    SECTION("every 2x2 state is phase-pure") {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const DensityMatrix rho = random_density(Spectrum::cyclic(2), seed, 1 + seed % 2);
            REQUIRE(is_phase_pure(rho).phase_pure());
        }
    }
    SECTION("decomposition reconstructs and satisfies the cocycle") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const std::size_t d = 2 + seed % 9;
            const Spectrum s = Spectrum::cyclic(d);
            std::vector<double> phases(d);
            Rng rng(seed + 1000);
            for (double &p : phases) {
                p = rng.uniform(0.0, kTwoPi);
            }
            const DensityMatrix rho =
                apply_diagonal_phases(random_phase_pure(s, seed, 1 + seed % 4), phases);
            const auto decomp = require_phase_pure(rho);
            CHECK(decomp.chi[0] == 0.0);
            for (std::size_t n = 0; n < d; ++n) {
                for (std::size_t m = 0; m < d; ++m) {
                    const Complex rebuilt =
                        decomp.moduli(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m)) *
                        std::polar(1.0, decomp.chi[n] - decomp.chi[m]);
                    REQUIRE(std::abs(rebuilt - rho(n, m)) <= 1e-10);
                }
            }
            CHECK(oracle::cocycle_residual(rho.entries()) <= 1e-8);
        }
    }
    SECTION("gauge is fixed at the lowest populated label") {
        // Fock-like support starting at position 2.
        const Spectrum s = Spectrum::naturals(5);
        const std::vector<Complex> amps{0.0, 0.0, 1.0, std::polar(1.0, 0.7), std::polar(1.0, -0.3)};
        const auto decomp = require_phase_pure(pure_state(s, amps));
        CHECK(decomp.chi[2] == 0.0);
        CHECK_THAT(decomp.chi[3], WithinAbs(0.7, 1e-14));
        CHECK_THAT(decomp.chi[4], WithinAbs(-0.3, 1e-14));
    }
}

TEST_CASE("gauge_fix", "[phase_purity]") {
    SECTION("(1, i)/sqrt 2 becomes all 1/2") {
        const std::vector<Complex> amps{1.0, Complex(0.0, 1.0)};
        const DensityMatrix rho = pure_state(Spectrum::cyclic(2), amps);
        const DensityMatrix fixed = gauge_fix(rho, require_phase_pure(rho));
        CHECK(((fixed.entries() - Matrix::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff()) <= 1e-15);
    }
    SECTION("real non-negative input is unchanged") {
        const DensityMatrix rho = random_phase_pure(Spectrum::naturals(6), 3, 2);
        const DensityMatrix fixed = gauge_fix(rho, require_phase_pure(rho));
        CHECK((fixed.entries() - rho.entries()).cwiseAbs().maxCoeff() == 0.0);
    }
    SECTION("random phase-pure states become real, idempotently, same distribution") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const std::size_t d = 2 + seed % 12;
            const Spectrum s = Spectrum::integers(d);
            std::vector<double> phases(d);
            Rng rng(seed ^ 0xabcdefULL);
            for (double &p : phases) {
                p = rng.uniform(-M_PI, M_PI);
            }
            const DensityMatrix rho =
                apply_diagonal_phases(random_phase_pure(s, seed, 1 + seed % 3), phases);
            const auto decomp = require_phase_pure(rho);
            const DensityMatrix once = gauge_fix(rho, decomp);
            CHECK(once.entries().imag().cwiseAbs().maxCoeff() <= 1e-12);
            CHECK(once.entries().real().minCoeff() >= -1e-12);

            const DensityMatrix twice = gauge_fix(once, require_phase_pure(once));
            CHECK((twice.entries() - once.entries()).cwiseAbs().maxCoeff() <= 1e-12);

            const auto p_in = phase_distribution(rho, decomp, 8 * d);
            const auto p_out = phase_distribution(once, require_phase_pure(once), 8 * d);
            for (std::size_t j = 0; j < p_in.size(); ++j) {
                REQUIRE(std::abs(p_in[j] - p_out[j]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("random_phase_pure", "[states]") {
    const Spectrum s = Spectrum::naturals(8);
    SECTION("rank 1 is a projector") {
        const Matrix rho = random_phase_pure(s, 11, 1).entries();
        CHECK((rho * rho - rho).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SECTION("deterministic per seed") {
        const Matrix a = random_phase_pure(s, 42, 3).entries();
        const Matrix b = random_phase_pure(s, 42, 3).entries();
        CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
        const Matrix c = random_phase_pure(s, 43, 3).entries();
        CHECK((a - c).cwiseAbs().maxCoeff() > 0.0);
    }
    SECTION("phase-pure with chi = 0 and exactly symmetric") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const DensityMatrix rho = random_phase_pure(s, seed, 1 + seed % 4);
            const auto report = is_phase_pure(rho);
            REQUIRE(report.phase_pure());
            for (double chi : report.decomposition->chi) {
                CHECK(std::abs(wrap_angle(chi)) == 0.0);
            }
            CHECK((rho.entries() - rho.entries().transpose()).cwiseAbs().maxCoeff() == 0.0);
        }
    }
    SECTION("support window") {
        const DensityMatrix rho = random_phase_pure(Spectrum::naturals(32), 5, 2, Support{0, 8});
        double outside = 0.0;
        for (std::size_t n = 8; n < 32; ++n) {
            outside += rho.population(n);
        }
        CHECK(outside == 0.0);
        CHECK(rho.tail_mass() == 0.0);
        CHECK(code_of([] { random_phase_pure(Spectrum::naturals(4), 1, 1, Support{2, 3}); }) ==
              ErrorCode::InvalidArgument);
    }
    SECTION("rank must be positive") {
        CHECK(code_of([&] { random_phase_pure(s, 1, 0); }) == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("tail mass and number statistics", "[density]") {
    SECTION("naturals watches the top labels") {
        const DensityMatrix rho = standard_state(Spectrum::naturals(16), FockState{15});
        CHECK(rho.tail_mass() == 1.0);
        CHECK(standard_state(Spectrum::naturals(16), FockState{13}).tail_mass() == 0.0);
    }
    SECTION("integers watch both ends") {
        const Spectrum s = Spectrum::integers(17);
        CHECK(standard_state(s, FockState{-8}).tail_mass() == 1.0);
        CHECK(standard_state(s, FockState{8}).tail_mass() == 1.0);
        CHECK(standard_state(s, FockState{0}).tail_mass() == 0.0);
    }
    SECTION("cyclic spectra are exact") {
        CHECK(standard_state(Spectrum::cyclic(4), FockState{3}).tail_mass() == 0.0);
    }
    SECTION("variance of the uniform state") {
        const DensityMatrix rho = standard_state(Spectrum::integers(5), UniformPhaseState{});
        CHECK_THAT(rho.number_mean(), WithinAbs(0.0, 1e-15));
        CHECK_THAT(rho.number_variance(), WithinAbs(2.0, 1e-14));
    }
}
