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

#include <filesystem>

namespace phasecov::harness {

/// Line plot of every delta_phi_* column over t, above a heat strip of the
/// phase density. Reads only the CSV files.
void write_svg(const std::filesystem::path &trajectory_csv,
               const std::filesystem::path &phase_dist_csv, const std::filesystem::path &svg);

} // namespace phasecov::harness
