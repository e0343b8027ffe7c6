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

#include "phasecov/spectrum.hpp"

#include "phasecov/error.hpp"

namespace phasecov {

std::string_view to_string(SpectrumKind kind) {
    switch (kind) {
    case SpectrumKind::NaturalsTruncated: return "nat";
    case SpectrumKind::IntegersTruncated: return "int";
    case SpectrumKind::CyclicFinite: return "cyclic";
    }
    return "unknown";
}

std::optional<SpectrumKind> parse_spectrum_kind(std::string_view name) {
    if (name == "nat") {
        return SpectrumKind::NaturalsTruncated;
    }
    if (name == "int") {
        return SpectrumKind::IntegersTruncated;
    }
    if (name == "cyclic") {
        return SpectrumKind::CyclicFinite;
    }
    return std::nullopt;
}

Spectrum::Spectrum(SpectrumKind kind, std::size_t dim) : kind_(kind), dim_(dim), first_label_(0) {
    if (dim == 0) {
        throw Error(ErrorCode::InvalidArgument, "spectrum dimension must be positive");
    }
    if (kind == SpectrumKind::IntegersTruncated) {
        first_label_ = -static_cast<int>(dim / 2);
    }
}

std::optional<std::size_t> Spectrum::position_of(int label) const noexcept {
    if (label < first_label_ || label > last_label()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(label - first_label_);
}

std::vector<int> Spectrum::labels() const {
    std::vector<int> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        out[i] = label(i);
    }
    return out;
}

} // namespace phasecov
