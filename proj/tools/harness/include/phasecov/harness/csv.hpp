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
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phasecov::harness {

/// Tool version recorded in every output header.
std::string_view tool_version();

/// 17 significant digits, scientific notation.
std::string format_double(double value);

/// Header block written as '#'-prefixed lines before the column names.
struct CsvHeader {
    std::string digest;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> extra;
};

class CsvWriter {
  public:
    CsvWriter(const CsvHeader &header, const std::vector<std::string> &columns);

    void row(const std::vector<std::string> &fields);
    void row(std::string_view label, const std::vector<double> &values);
    void row(const std::vector<double> &values);

    [[nodiscard]] const std::string &text() const noexcept { return text_; }
    /// Writes the buffered text; throws std::runtime_error on I/O failure.
    void save(const std::filesystem::path &path) const;

  private:
    std::string text_;
    std::size_t columns_;
};

struct CsvTable {
    std::vector<std::string> meta;
    std::vector<std::string> columns;
    /// Non-numeric fields read as NaN.
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::ptrdiff_t column(std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path &path);

void write_file(const std::filesystem::path &path, std::string_view text);

} // namespace phasecov::harness
