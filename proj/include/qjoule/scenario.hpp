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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qjoule/config.hpp"

namespace qj {

enum class SweepAxis { Depth, Samples, Qubits, GatesPerLayer, D0 };

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& s);

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(const std::string& s);

/// Parameters held constant across a sweep.
struct FixedParams {
    std::int64_t n_samples = 1;
    std::int64_t depth = 100;        // used when the axis is not depth
    std::int64_t d0 = 500;           // pre-routing depth for the gates_per_layer axis
    double alpha_2q = 0.5;           // two-qubit layer ratio for the d0 axis
    std::optional<double> beta;      // transport ratio override
    std::optional<int> zones;        // gate zone override (recomputes the clock)
    ResetKind reset = ResetKind::Default;
    std::optional<ReloadMode> reload;        // timing-only what-if switch
    std::optional<std::string> chip;         // photonic chip override
    std::optional<ConnectivitySpec> graph;   // connectivity override
    DistanceMode distance_mode = DistanceMode::Average;
};

struct ScenarioConfig {
    std::string preset;        // exactly one of preset / config_path
    std::string config_path;
    SweepAxis axis = SweepAxis::Depth;
    std::vector<double> axis_values;
    FixedParams fixed;
    std::string out_path;      // empty writes to stdout
    OutputFormat format = OutputFormat::Csv;
};

struct SweepRow {
    double axis_value = 0.0;
    std::int64_t depth = 0;
    double t_circuit_s = 0.0;
    double t_alg_s = 0.0;
    double power_w = 0.0;
    double ee_per_j = 0.0;
    double n_in_24h = 0.0;
    bool overflow = false;
};

struct SweepResult {
    std::string platform_name;
    std::string axis_name;
    std::vector<SweepRow> rows;
    std::vector<std::string> warnings;   // e.g. beta clamped to its physical floor

    bool any_overflow() const;
};

/// Loads the platform (preset name, $QJ_PRESET_DIR override, or config file)
/// and applies the chip override.
PlatformConfig resolve_platform(const ScenarioConfig& cfg);

/// Evaluates one operating point of a platform.
SweepRow evaluate_point(const PlatformConfig& platform, const FixedParams& fixed,
                        const AlgorithmSpec& algorithm);

/// Runs a sweep: one row per axis value, sorted by axis value. Deterministic;
/// identical configs produce identical results.
SweepResult run_scenario(const ScenarioConfig& cfg);

std::string to_csv(const SweepResult& result);
nlohmann::ordered_json to_json(const SweepResult& result);
std::string render(const SweepResult& result, OutputFormat format);

} // namespace qj
