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

#include "qjoule/config.hpp"

namespace qj {

/// Stable, ordered catalog of the built-in platform presets.
std::vector<std::string> preset_names();

/// Builds the named built-in preset. Throws ConfigError for unknown names.
PlatformConfig preset(const std::string& name);

/// Resolves a platform by name: a file <name>.json under $QJ_PRESET_DIR wins
/// over the built-in catalog.
PlatformConfig find_platform(const std::string& name);

struct PresetInfo {
    std::string name;
    std::string family;
    double power_w;
    std::string citation;
};

/// Catalog listing with provenance notes and evaluated total power.
std::vector<PresetInfo> list_presets();

} // namespace qj
