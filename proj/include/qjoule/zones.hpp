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

#include <cstdint>
#include <vector>

#include "qjoule/errors.hpp"

namespace qj {

// Gate-zone compilation model for atom-based devices: each zone runs one gate
// (on one or two qubits) per layer, so layers with more gates than zones are
// split and the split layers force extra storage-to-gate-zone transport.
// Devices whose zones hold several atoms at once are modeled by passing the
// total atom capacity as the zone count.

/// Number of new layers each original layer is split into:
/// ceil(gates_per_layer / zones), at least 1.
std::int64_t layer_split_factor(double gates_per_layer, int zones);

/// Zone-limited depth: ceil(gates_per_layer / zones) * d0. Equals d0 whenever
/// the layers fit in the available zones.
std::int64_t zone_limited_depth(double gates_per_layer, int zones, std::int64_t d0);

/// Physical floor of the transport-per-layer ratio:
/// beta_min = 1 - 1/ceil(gates_per_layer / zones), in [0, 1).
double beta_min(double gates_per_layer, int zones);

/// Clamps a user-supplied transport ratio into [beta_min, 1]. Out-of-range
/// inputs are legal on purpose; `clamped` reports that the floor was applied.
double clamp_beta(double beta, double beta_floor, bool* clamped = nullptr);

struct BetaEnvelopeRow {
    double gates_per_layer;
    int zones;
    double beta_min;
    double beta_max;   // always 1: every layer may need transport
};

/// Cartesian product of gate densities and zone counts, ordered by zone count
/// first (input order), then gates_per_layer.
std::vector<BetaEnvelopeRow> beta_envelope(const std::vector<double>& gates_per_layer,
                                           const std::vector<int>& zones);

} // namespace qj
