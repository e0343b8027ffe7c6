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

#include "phasecov/generator.hpp"

#include <cmath>
#include <cstdlib>

#include "phasecov/error.hpp"
#include "phasecov/rng.hpp"

namespace phasecov {

namespace {

constexpr double kNegligibleWeight = 1e-12;
constexpr double kSpreadTolerance = 1e-10;

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

// Positions t that B of this shift can land on: [m, d) raising, [0, d-|m|) lowering.
std::pair<std::size_t, std::size_t> target_range(int shift, std::size_t dim) {
    const auto magnitude = static_cast<std::size_t>(std::abs(shift));
    if (magnitude >= dim) {
        return {0, 0};
    }
    if (shift >= 0) {
        return {magnitude, dim};
    }
    return {0, dim - magnitude};
}

void require_dim(const Spectrum &spectrum, const Matrix &rho) {
    const auto d = idx(spectrum.dim());
    if (rho.rows() != d || rho.cols() != d) {
        throw Error(ErrorCode::DimensionMismatch,
                    "state is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                        ", generator acts on dimension " + std::to_string(spectrum.dim()));
    }
}

Matrix phase_rotation(const Spectrum &spectrum, double theta) {
    const auto d = idx(spectrum.dim());
    Matrix u = Matrix::Zero(d, d);
    for (Eigen::Index n = 0; n < d; ++n) {
        u(n, n) = std::polar(1.0, theta * spectrum.label(static_cast<std::size_t>(n)));
    }
    return u;
}

} // namespace

CovariantGenerator &CovariantGenerator::add_term(int shift, std::vector<Complex> weight) {
    const std::size_t d = spectrum_.dim();
    if (weight.size() != d) {
        throw Error(ErrorCode::NotCovariantForm, "weight function has " +
                                                     std::to_string(weight.size()) +
                                                     " values for dimension " + std::to_string(d));
    }
    if (static_cast<std::size_t>(std::abs(shift)) >= d) {
        throw Error(ErrorCode::NotCovariantForm,
                    "|shift| = " + std::to_string(std::abs(shift)) + " must be below d = " +
                        std::to_string(d));
    }
    terms_.push_back(CovariantTerm{shift, std::move(weight)});
    return *this;
}

Matrix CovariantGenerator::jump_operator(const CovariantTerm &term) const {
    const std::size_t d = dim();
    Matrix b = Matrix::Zero(idx(d), idx(d));
    const auto [lo, hi] = target_range(term.shift, d);
    for (std::size_t t = lo; t < hi; ++t) {
        const auto source = static_cast<std::size_t>(static_cast<long>(t) - term.shift);
        b(idx(t), idx(source)) = term.weight[t];
    }
    return b;
}

LindbladGenerator to_dense(const CovariantGenerator &gen) {
    LindbladGenerator dense{gen.spectrum(), {}};
    dense.jump_operators.reserve(gen.terms().size());
    for (const CovariantTerm &term : gen.terms()) {
        dense.jump_operators.push_back(gen.jump_operator(term));
    }
    return dense;
}

Matrix lindblad_apply(const CovariantGenerator &gen, const Matrix &rho) {
    require_dim(gen.spectrum(), rho);
    const std::size_t d = gen.dim();
    Matrix out = Matrix::Zero(idx(d), idx(d));
    std::vector<double> loss(d);
    for (const CovariantTerm &term : gen.terms()) {
        const int m = term.shift;
        const auto [lo, hi] = target_range(m, d);
        // (B^dagger B)_ss = |w(s + m)|^2 when s + m is a position.
        for (std::size_t s = 0; s < d; ++s) {
            const long t = static_cast<long>(s) + m;
            loss[s] = (t >= 0 && t < static_cast<long>(d))
                          ? std::norm(term.weight[static_cast<std::size_t>(t)])
                          : 0.0;
        }
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
                Complex value = -0.5 * (loss[a] + loss[b]) * rho(idx(a), idx(b));
                if (a >= lo && a < hi && b >= lo && b < hi) {
                    value += term.weight[a] * rho(idx(a) - m, idx(b) - m) *
                             std::conj(term.weight[b]);
                }
                out(idx(a), idx(b)) += value;
            }
        }
    }
    return out;
}

Matrix lindblad_apply(const LindbladGenerator &gen, const Matrix &rho) {
    require_dim(gen.spectrum, rho);
    const auto d = idx(gen.spectrum.dim());
    Matrix out = Matrix::Zero(d, d);
    for (const Matrix &op : gen.jump_operators) {
        if (op.rows() != d || op.cols() != d) {
            throw Error(ErrorCode::DimensionMismatch, "jump operator has the wrong shape");
        }
        const Matrix loss = op.adjoint() * op;
        out += op * rho * op.adjoint() - 0.5 * (loss * rho + rho * loss);
    }
    return out;
}

Matrix lindblad_apply(const CovariantGenerator &gen, const DensityMatrix &rho) {
    return lindblad_apply(gen, rho.entries());
}

double check_covariance(const LindbladGenerator &gen, const Matrix &rho, double theta) {
    require_dim(gen.spectrum, rho);
    if (gen.jump_operators.empty()) {
        return 0.0;
    }
    const Matrix u = phase_rotation(gen.spectrum, theta);
    const Matrix lhs = lindblad_apply(gen, Matrix(u * rho * u.adjoint()));
    const Matrix rhs = u * lindblad_apply(gen, rho) * u.adjoint();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

double check_covariance(const CovariantGenerator &gen, const Matrix &rho, double theta) {
    require_dim(gen.spectrum(), rho);
    if (gen.empty()) {
        return 0.0;
    }
    const Matrix u = phase_rotation(gen.spectrum(), theta);
    const Matrix lhs = lindblad_apply(gen, Matrix(u * rho * u.adjoint()));
    const Matrix rhs = u * lindblad_apply(gen, rho) * u.adjoint();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

CovariantGenerator regauge(const CovariantGenerator &gen, const std::vector<double> &chi) {
    const std::size_t d = gen.dim();
    if (chi.size() != d) {
        throw Error(ErrorCode::DimensionMismatch, "phase sequence length differs from dimension");
    }
    CovariantGenerator out(gen.spectrum());
    for (const CovariantTerm &term : gen.terms()) {
        std::vector<Complex> weight = term.weight;
        const auto [lo, hi] = target_range(term.shift, d);
        for (std::size_t t = lo; t < hi; ++t) {
            const auto s = static_cast<std::size_t>(static_cast<long>(t) - term.shift);
            weight[t] *= std::polar(1.0, -(chi[t] - chi[s]));
        }
        out.add_term(term.shift, std::move(weight));
    }
    return out;
}

CovariantGenerator build_preserving_generator(const Spectrum &spectrum,
                                              const std::vector<double> &u,
                                              const std::optional<std::vector<double>> &v) {
    if (spectrum.kind() == SpectrumKind::CyclicFinite) {
        throw Error(ErrorCode::WrongSpectrumKind,
                    "uncertainty-preserving generators need an unbounded (nat or int) spectrum");
    }
    if (v && spectrum.kind() != SpectrumKind::IntegersTruncated) {
        throw Error(ErrorCode::WrongSpectrumKind, "lowering rates v need an integer spectrum");
    }
    auto check = [](const std::vector<double> &rates, const char *name) {
        for (std::size_t i = 0; i < rates.size(); ++i) {
            if (!(rates[i] >= 0.0)) {
                throw Error(ErrorCode::NegativeWeight,
                            std::string(name) + "_" + std::to_string(i + 1) + " is negative",
                            rates[i]);
            }
        }
    };
    check(u, "u");
    if (v) {
        check(*v, "v");
    }

    const std::size_t d = spectrum.dim();
    CovariantGenerator gen(spectrum);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0.0) {
            gen.add_term(static_cast<int>(i + 1), std::vector<Complex>(d, std::sqrt(u[i])));
        }
    }
    if (v) {
        for (std::size_t i = 0; i < v->size(); ++i) {
            if ((*v)[i] > 0.0) {
                gen.add_term(-static_cast<int>(i + 1),
                             std::vector<Complex>(d, std::sqrt((*v)[i])));
            }
        }
    }
    return gen;
}

PurityPreservation check_phase_purity_preservation(const CovariantGenerator &gen) {
    PurityPreservation result;
    for (const CovariantTerm &term : gen.terms()) {
        const auto [lo, hi] = target_range(term.shift, gen.dim());
        std::vector<double> args;
        for (std::size_t t = lo; t < hi; ++t) {
            if (std::abs(term.weight[t]) >= kNegligibleWeight) {
                args.push_back(std::arg(term.weight[t]));
            }
        }
        double spread = 0.0;
        for (std::size_t i = 0; i < args.size(); ++i) {
            for (std::size_t j = i + 1; j < args.size(); ++j) {
                spread = std::max(spread, std::abs(wrap_angle(args[i] - args[j])));
            }
        }
        result.term_spreads.push_back(spread);
        result.max_spread = std::max(result.max_spread, spread);
    }
    result.preserving = result.max_spread <= kSpreadTolerance;
    return result;
}

CovariantGenerator random_covariant_generator(const Spectrum &spectrum, std::uint64_t seed,
                                              const RandomGeneratorOptions &options) {
    const std::size_t d = spectrum.dim();
    const int max_shift = static_cast<int>(std::min(options.max_shift, d - 1));
    Rng rng(seed);
    CovariantGenerator gen(spectrum);
    for (int m = -max_shift; m <= max_shift; ++m) {
        for (std::size_t j = 0; j < options.terms_per_shift; ++j) {
            std::vector<Complex> weight(d);
            for (Complex &w : weight) {
                const double magnitude = rng.uniform();
                const double phase = rng.uniform(0.0, kTwoPi);
                w = options.purity_preserving ? Complex(magnitude) : std::polar(magnitude, phase);
            }
            gen.add_term(m, std::move(weight));
        }
    }
    return gen;
}

} // namespace phasecov
