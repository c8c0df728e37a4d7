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

/// Locale-independent shortest representation that parses back to the same
/// double. Infinities print as "inf"/"-inf". Keeps every emitted file
/// byte-identical across runs.
std::string format_double(double value);

/// Minimal CSV table: a header row plus string cells, '\n' line endings,
/// '.' decimal separator (cells are preformatted).
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::size_t row_count() const { return rows_.size(); }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

void write_text_file(const std::string& path, const std::string& content);

} // namespace qj
