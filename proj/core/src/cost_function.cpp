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

#include "phasecov/cost_function.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "phasecov/error.hpp"

namespace phasecov {

namespace {

constexpr int kMonotoneGridPoints = 257;

} // namespace

CostFunction::CostFunction(UncertaintyMap map, std::string name, double c0,
                           std::vector<double> coefficients, double slope, double intercept)
    : map_(map), name_(std::move(name)), c0_(c0), coefficients_(std::move(coefficients)),
      slope_(slope), intercept_(intercept) {
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        if (!(coefficients_[k] >= 0.0)) {
            throw Error(ErrorCode::NegativeWeight,
                        "cost coefficient c_" + std::to_string(k + 1) + " is negative",
                        coefficients_[k]);
        }
    }
    if (map_ == UncertaintyMap::Affine && !(slope_ > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "affine uncertainty map needs a positive slope");
    }
    const auto [lo, hi] = attainable_range();
    double previous = uncertainty(lo);
    for (int i = 1; i < kMonotoneGridPoints; ++i) {
        const double x = lo + (hi - lo) * i / (kMonotoneGridPoints - 1);
        const double value = uncertainty(x);
        if (value < previous) {
            throw Error(ErrorCode::InvalidArgument,
                        "uncertainty map of cost '" + name_ +
                            "' decreases on the attainable range of <C>");
        }
        previous = value;
    }
}

CostFunction CostFunction::phase_deviation() {
    return {UncertaintyMap::PhaseDeviation, "phase_deviation", 0.0, {1.0}, 1.0, 0.0};
}

CostFunction CostFunction::reciprocal_peak_likelihood(std::size_t dim) {
    return {UncertaintyMap::ReciprocalPeakLikelihood,
            "reciprocal_peak_likelihood",
            -1.0,
            std::vector<double>(dim > 0 ? dim - 1 : 0, 1.0),
            1.0,
            0.0};
}

CostFunction CostFunction::affine(double c0, std::vector<double> coefficients, double slope,
                                  double intercept) {
    return {UncertaintyMap::Affine, "affine", c0, std::move(coefficients), slope, intercept};
}

CostFunction CostFunction::with_map(UncertaintyMap map, double c0,
                                    std::vector<double> coefficients, std::string name,
                                    double slope, double intercept) {
    return {map, std::move(name), c0, std::move(coefficients), slope, intercept};
}

double CostFunction::coefficient(std::size_t k) const {
    if (k == 0 || k > coefficients_.size()) {
        return 0.0;
    }
    return coefficients_[k - 1];
}

double CostFunction::uncertainty(double mean_cost) const {
    switch (map_) {
    case UncertaintyMap::ReciprocalPeakLikelihood:
        if (mean_cost >= 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        return -1.0 / mean_cost;
    case UncertaintyMap::PhaseDeviation:
        return 2.0 * (1.0 - 0.25 * mean_cost * mean_cost);
    case UncertaintyMap::Affine:
        return slope_ * mean_cost + intercept_;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double CostFunction::slope_at(double mean_cost) const {
    switch (map_) {
    case UncertaintyMap::ReciprocalPeakLikelihood:
        return 1.0 / (mean_cost * mean_cost);
    case UncertaintyMap::PhaseDeviation:
        return -0.5 * mean_cost;
    case UncertaintyMap::Affine:
        return slope_;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::pair<double, double> CostFunction::attainable_range() const {
    // Moments of phase-pure states lie in [0, 1].
    const double weight = std::accumulate(coefficients_.begin(), coefficients_.end(), 0.0);
    return {c0_ - 2.0 * weight, c0_};
}

} // namespace phasecov
