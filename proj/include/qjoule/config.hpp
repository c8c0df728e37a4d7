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

#include <optional>
#include <string>

#include <json.hpp>

#include "qjoule/inventory.hpp"
#include "qjoule/photonics.hpp"
#include "qjoule/timing.hpp"
#include "qjoule/topology.hpp"

namespace qj {

enum class TimingFamily { SolidState, Atom, Neutral, Photonic };

std::string to_string(TimingFamily f);
TimingFamily timing_family_from_string(const std::string& s);

/// Which reset technology to plug into a solid-state timing model.
enum class ResetKind { Default, Active, Passive, Instant };

ResetKind reset_kind_from_string(const std::string& s);

/// Declarative timing parameter set; which fields matter depends on `family`.
struct TimingConfig {
    TimingFamily family = TimingFamily::SolidState;
    double t_reset_s = 0.0;
    double t_clock_s = 0.0;
    double t_meas_s = 0.0;
    double t_trans_s = 0.0;
    double beta_trans = 0.0;
    double t_reload_s = 0.0;
    std::int64_t reload_period_layers = 2400;
    ReloadMode mode = ReloadMode::PeriodicReload;
    /// Alternative passive reset time where the platform has one; the main
    /// t_reset_s then holds the active value.
    std::optional<double> t_reset_passive_s;

    SolidStateTiming solid(ResetKind reset = ResetKind::Default) const;
    AtomTiming atom(std::optional<double> beta_override = std::nullopt) const;
    NeutralAtomTiming neutral(std::optional<double> beta_override = std::nullopt,
                              std::optional<ReloadMode> mode_override = std::nullopt) const;
};

/// Declarative coupling-graph choice for platforms with routing constraints.
struct ConnectivitySpec {
    GraphFamily family = GraphFamily::Linear;
    int n = 0;          // linear / circular / fully connected
    int rows = 0;       // square lattice / heavy hex
    int cols = 0;
    std::string edge_list_path;   // custom graphs

    CouplingGraph build() const;
};

/// Photonic device parameters that sit outside the component table.
struct PhotonicSettings {
    PhotonicEfficiencies efficiencies;
    ChipTechnology chip = glass_mesh_chip();
    int n_sources = 1;
    double source_rate_hz = 1e9;
    double elements_per_mzi = 2.0;
    double chip_length_cm = 0.0;

    PhotonicDevice device(int n_qubits) const;
};

/// A complete platform description: the hardware inventory, the execution
/// time model, and optional connectivity/photonic extensions.
struct PlatformConfig {
    PlatformInventory inventory;
    TimingConfig timing;
    std::optional<ConnectivitySpec> connectivity;
    std::optional<PhotonicSettings> photonic;
    std::string citation;

    const std::string& name() const { return inventory.platform_name; }
};

void validate_platform_config(const PlatformConfig& cfg);

nlohmann::ordered_json to_json(const PlatformConfig& cfg);
PlatformConfig platform_config_from_json(const nlohmann::json& j);
PlatformConfig load_platform_config(const std::string& path);
void save_platform_config(const PlatformConfig& cfg, const std::string& path);

} // namespace qj
