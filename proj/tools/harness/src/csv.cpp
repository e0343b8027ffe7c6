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

#include "phasecov/harness/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace phasecov::harness {

std::string_view tool_version() { return "phasecov 0.1.0"; }

std::string format_double(double value) { return fmt::format("{:.16e}", value); }

CsvWriter::CsvWriter(const CsvHeader &header, const std::vector<std::string> &columns)
    : columns_(columns.size()) {
    text_ += fmt::format("# tool: {}\n", tool_version());
    text_ += fmt::format("# config_sha256: {}\n", header.digest);
    text_ += fmt::format("# seed: {}\n", header.seed);
    for (const auto &[key, value] : header.extra) {
        text_ += fmt::format("# {}: {}\n", key, value);
    }
    text_ += fmt::format("{}\n", fmt::join(columns, ","));
}

void CsvWriter::row(const std::vector<std::string> &fields) {
    if (fields.size() != columns_) {
        throw std::logic_error(
            fmt::format("csv row has {} fields, header has {}", fields.size(), columns_));
    }
    text_ += fmt::format("{}\n", fmt::join(fields, ","));
}

void CsvWriter::row(std::string_view label, const std::vector<double> &values) {
    std::vector<std::string> fields{std::string(label)};
    for (double v : values) {
        fields.push_back(format_double(v));
    }
    row(fields);
}

void CsvWriter::row(const std::vector<double> &values) {
    std::vector<std::string> fields;
    for (double v : values) {
        fields.push_back(format_double(v));
    }
    row(fields);
}

void CsvWriter::save(const std::filesystem::path &path) const { write_file(path, text_); }

void write_file(const std::filesystem::path &path, std::string_view text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

std::ptrdiff_t CsvTable::column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : it - columns.begin();
}

CsvTable read_csv(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    CsvTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            table.meta.push_back(line);
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (table.columns.empty()) {
            table.columns = std::move(fields);
            continue;
        }
        std::vector<double> row;
        for (const std::string &f : fields) {
            double v = std::numeric_limits<double>::quiet_NaN();
            std::from_chars(f.data(), f.data() + f.size(), v);
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace phasecov::harness
