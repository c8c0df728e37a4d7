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

#include "qjoule/zones.hpp"

#include <algorithm>
#include <cmath>

namespace qj {

std::int64_t layer_split_factor(double gates_per_layer, int zones) {
    if (zones < 1) {
        throw DomainError("gate zone count must be >= 1");
    }
    if (!(gates_per_layer > 0.0)) {
        throw DomainError("average gates per layer must be > 0");
    }
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(gates_per_layer / zones)));
}

std::int64_t zone_limited_depth(double gates_per_layer, int zones, std::int64_t d0) {
    if (d0 < 1) {
        throw DomainError("pre-routing depth D0 must be >= 1");
    }
    return layer_split_factor(gates_per_layer, zones) * d0;
}

double beta_min(double gates_per_layer, int zones) {
    const std::int64_t splits = layer_split_factor(gates_per_layer, zones);
    return 1.0 - 1.0 / static_cast<double>(splits);
}

double clamp_beta(double beta, double beta_floor, bool* clamped) {
    if (clamped != nullptr) {
        *clamped = beta < beta_floor;
    }
    return std::clamp(beta, beta_floor, 1.0);
}

std::vector<BetaEnvelopeRow> beta_envelope(const std::vector<double>& gates_per_layer,
                                           const std::vector<int>& zones) {
    if (gates_per_layer.empty() || zones.empty()) {
        throw ConfigError("beta envelope needs at least one gate density and one zone count");
    }
    std::vector<double> densities = gates_per_layer;
    std::sort(densities.begin(), densities.end());
    std::vector<BetaEnvelopeRow> rows;
    rows.reserve(densities.size() * zones.size());
    for (const int z : zones) {
        for (const double g : densities) {
            rows.push_back({g, z, beta_min(g, z), 1.0});
        }
    }
    return rows;
}

} // namespace qj
