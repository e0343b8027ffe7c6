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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace phasecov {

enum class SpectrumKind {
    NaturalsTruncated,  ///< labels 0..d-1 standing in for N
    IntegersTruncated,  ///< labels centred on 0 standing in for Z
    CyclicFinite,       ///< labels 0..q-1, exact
};

std::string_view to_string(SpectrumKind kind);
/// Accepts the short CLI names "nat", "int", "cyclic".
std::optional<SpectrumKind> parse_spectrum_kind(std::string_view name);

/**
 * Integer-labelled spectrum of a nondegenerate phase-shift generator F.
 *
 * Labels are consecutive integers. Position i (0-based) carries label
 * first_label() + i. Integer spectra use first_label = -floor(d/2), so odd d
 * gives the symmetric range -L..L.
 */
class Spectrum {
  public:
    Spectrum(SpectrumKind kind, std::size_t dim);

    static Spectrum naturals(std::size_t dim) {
        return {SpectrumKind::NaturalsTruncated, dim};
    }
    static Spectrum integers(std::size_t dim) {
        return {SpectrumKind::IntegersTruncated, dim};
    }
    static Spectrum cyclic(std::size_t q) {
        return {SpectrumKind::CyclicFinite, q};
    }

    [[nodiscard]] SpectrumKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] int first_label() const noexcept { return first_label_; }
    [[nodiscard]] int last_label() const noexcept {
        return first_label_ + static_cast<int>(dim_) - 1;
    }
    [[nodiscard]] int label(std::size_t position) const noexcept {
        return first_label_ + static_cast<int>(position);
    }
    [[nodiscard]] std::optional<std::size_t> position_of(int label) const noexcept;
    [[nodiscard]] std::vector<int> labels() const;

    /// True for the truncated stand-ins of unbounded spectra.
    [[nodiscard]] bool is_truncated() const noexcept {
        return kind_ != SpectrumKind::CyclicFinite;
    }
    /// Number of edge labels monitored for truncation leakage: ceil(d/8).
    [[nodiscard]] std::size_t tail_width() const noexcept { return (dim_ + 7) / 8; }

    friend bool operator==(const Spectrum &, const Spectrum &) = default;

  private:
    SpectrumKind kind_;
    std::size_t dim_;
    int first_label_;
};

} // namespace phasecov
