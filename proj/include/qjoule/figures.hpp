// Copyright 2026 the qjoule developers
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

#include <string>
#include <vector>

namespace qj {

/// Values m * 10^k with mantissa m in {1, 2, 5}, clipped to [lo, hi].
/// The standard axis grid of the figure catalog.
std::vector<double> log_grid(double lo, double hi);

struct FigureFile {
    std::string filename;
    std::string csv;
};

/// Supported figure identifiers, fig3 .. fig17.
std::vector<std::string> figure_catalog();

/// Generates the data series behind one catalog figure. Deterministic:
/// repeated calls return byte-identical content.
std::vector<FigureFile> reproduce_figure(const std::string& figure_id);

/// Writes the figure's CSV files under out_dir; returns the paths written.
std::vector<std::string> write_figure(const std::string& figure_id, const std::string& out_dir);

} // namespace qj
