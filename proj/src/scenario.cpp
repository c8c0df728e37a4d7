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

#include "qjoule/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "qjoule/efficiency.hpp"
#include "qjoule/presets.hpp"
#include "qjoule/textio.hpp"
#include "qjoule/zones.hpp"

namespace qj {

std::string to_string(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::Depth: return "depth";
    case SweepAxis::Samples: return "samples";
    case SweepAxis::Qubits: return "qubits";
    case SweepAxis::GatesPerLayer: return "gates_per_layer";
    case SweepAxis::D0: return "d0";
    }
    throw DomainError("unknown sweep axis");
}

SweepAxis sweep_axis_from_string(const std::string& s) {
    if (s == "depth") return SweepAxis::Depth;
    if (s == "samples") return SweepAxis::Samples;
    if (s == "qubits") return SweepAxis::Qubits;
    if (s == "gates_per_layer") return SweepAxis::GatesPerLayer;
    if (s == "d0") return SweepAxis::D0;
    throw ConfigError("unknown sweep axis '" + s + "'");
}

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw ConfigError("unknown output format '" + s + "' (expected csv or json)");
}

bool SweepResult::any_overflow() const {
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.overflow; });
}

PlatformConfig resolve_platform(const ScenarioConfig& cfg) {
    if (cfg.preset.empty() == cfg.config_path.empty()) {
        throw ConfigError("give exactly one of a preset name or a config path");
    }
    PlatformConfig platform =
        cfg.preset.empty() ? load_platform_config(cfg.config_path) : find_platform(cfg.preset);
    if (cfg.fixed.chip) {
        if (!platform.photonic) {
            throw ConfigError("--chip only applies to photonic platforms");
        }
        platform.photonic->chip = chip_from_name(*cfg.fixed.chip);
        const int n_q = static_cast<int>(platform.inventory.params.get("N_q", "photonic device"));
        auto params = platform.inventory.params;
        platform.inventory = photonic_inventory(platform.photonic->device(n_q));
        platform.inventory.params = params;
    }
    return platform;
}

namespace {

std::int64_t integral_value(double v, const std::string& what) {
    if (!(v >= 1.0) || v != std::floor(v)) {
        throw ConfigError(what + " values must be integers >= 1, got " + format_double(v));
    }
    return static_cast<std::int64_t>(v);
}

double circuit_time_for(const PlatformConfig& platform, const FixedParams& fixed,
                        std::int64_t depth, std::optional<double> beta_override) {
    const auto beta = beta_override ? beta_override : fixed.beta;
    switch (platform.timing.family) {
    case TimingFamily::SolidState:
        return solid_state_circuit_time(platform.timing.solid(fixed.reset), depth);
    case TimingFamily::Atom: {
        TimingConfig timing = platform.timing;
        if (fixed.zones) {
            timing.t_clock_s = multizone_clock(*fixed.zones);
        }
        return atom_circuit_time(timing.atom(beta), depth);
    }
    case TimingFamily::Neutral:
        return neutral_circuit_time(platform.timing.neutral(beta, fixed.reload), depth);
    case TimingFamily::Photonic:
        throw ConfigError("photonic platforms have no depth-based circuit time; sweep qubits or samples");
    }
    throw DomainError("unknown timing family");
}

SweepRow finish_row(double axis_value, std::int64_t depth, double t_circuit,
                    std::int64_t n_samples, double power) {
    SweepRow row;
    row.axis_value = axis_value;
    row.depth = depth;
    row.t_circuit_s = t_circuit;
    row.t_alg_s = algorithm_time(t_circuit, n_samples);
    row.power_w = power;
    row.ee_per_j = energy_efficiency(row.t_alg_s, power);
    row.n_in_24h = n_algorithms(kSecondsPerDay, row.t_alg_s);
    return row;
}

SweepRow photonic_row(const PlatformConfig& platform, double axis_value, int n_qubits,
                      std::int64_t n_samples) {
    PlatformInventory inv = platform.inventory;
    inv.params.set("N_q", static_cast<double>(n_qubits));
    const double power = total_power(inv);
    const PhotonicDevice dev = platform.photonic->device(n_qubits);
    const SampleTime t = sample_time(dev);
    SweepRow row;
    row.axis_value = axis_value;
    row.depth = 0;   // no layer structure on the photonic platform
    row.t_circuit_s = t.seconds;
    row.power_w = power;
    row.overflow = t.overflow;
    if (t.overflow) {
        row.t_alg_s = t.seconds;   // +inf
        row.ee_per_j = 0.0;
        row.n_in_24h = 0.0;
    } else {
        row.t_alg_s = algorithm_time(t.seconds, n_samples);
        row.ee_per_j = energy_efficiency(row.t_alg_s, power);
        row.n_in_24h = n_algorithms(kSecondsPerDay, row.t_alg_s);
    }
    return row;
}

void check_row_identities(const SweepRow& row) {
    if (row.overflow) {
        return;
    }
    const double metric = row.ee_per_j * row.t_alg_s * row.power_w;
    const double window = row.n_in_24h * row.t_alg_s / kSecondsPerDay;
    if (std::abs(metric - 1.0) > 1e-9 || std::abs(window - 1.0) > 1e-9) {
        throw std::logic_error("sweep row violates its defining identities");
    }
}

} // namespace

SweepRow evaluate_point(const PlatformConfig& platform, const FixedParams& fixed,
                        const AlgorithmSpec& algorithm) {
    if (algorithm.depth < 1 || algorithm.n_samples < 1) {
        throw DomainError("algorithm depth and sample count must be >= 1");
    }
    if (platform.timing.family == TimingFamily::Photonic) {
        const int n_q = static_cast<int>(platform.inventory.params.get("N_q", "photonic device"));
        return photonic_row(platform, static_cast<double>(algorithm.depth), n_q, algorithm.n_samples);
    }
    const double t_circuit = circuit_time_for(platform, fixed, algorithm.depth, std::nullopt);
    return finish_row(static_cast<double>(algorithm.depth), algorithm.depth, t_circuit,
                      algorithm.n_samples, total_power(platform.inventory));
}

SweepResult run_scenario(const ScenarioConfig& cfg) {
    if (cfg.axis_values.empty()) {
        throw ConfigError("sweep range is empty");
    }
    const PlatformConfig platform = resolve_platform(cfg);
    const bool is_photonic = platform.timing.family == TimingFamily::Photonic;

    std::vector<double> values = cfg.axis_values;
    std::sort(values.begin(), values.end());

    SweepResult result;
    result.platform_name = platform.name();
    result.axis_name = to_string(cfg.axis);
    result.rows.reserve(values.size());

    const FixedParams& fixed = cfg.fixed;
    const double platform_power = is_photonic ? 0.0 : total_power(platform.inventory);

    switch (cfg.axis) {
    case SweepAxis::Depth: {
        if (is_photonic) {
            throw ConfigError("photonic platforms have no depth axis; sweep qubits or samples");
        }
        for (const double v : values) {
            const std::int64_t depth = integral_value(v, "depth");
            const double t = circuit_time_for(platform, fixed, depth, std::nullopt);
            result.rows.push_back(finish_row(v, depth, t, fixed.n_samples, platform_power));
        }
        break;
    }
    case SweepAxis::Samples: {
        if (is_photonic) {
            const int n_q = static_cast<int>(platform.inventory.params.get("N_q", "photonic device"));
            for (const double v : values) {
                result.rows.push_back(photonic_row(platform, v, n_q, integral_value(v, "samples")));
            }
        } else {
            const double t = circuit_time_for(platform, fixed, fixed.depth, std::nullopt);
            for (const double v : values) {
                result.rows.push_back(
                    finish_row(v, fixed.depth, t, integral_value(v, "samples"), platform_power));
            }
        }
        break;
    }
    case SweepAxis::Qubits: {
        if (!is_photonic) {
            throw ConfigError("the qubits axis is only defined for photonic platforms");
        }
        for (const double v : values) {
            const std::int64_t n_q = integral_value(v, "qubit");
            result.rows.push_back(
                photonic_row(platform, v, static_cast<int>(n_q), fixed.n_samples));
        }
        break;
    }
    case SweepAxis::GatesPerLayer: {
        if (platform.timing.family != TimingFamily::Atom &&
            platform.timing.family != TimingFamily::Neutral) {
            throw ConfigError("the gates_per_layer axis needs an atom-based platform");
        }
        int zones = 0;
        if (fixed.zones) {
            zones = *fixed.zones;
        } else if (platform.inventory.params.has("N_zones")) {
            zones = static_cast<int>(platform.inventory.params.get("N_zones", "gate zone model"));
        } else {
            throw ConfigError("platform has no N_zones parameter; pass --zones");
        }
        bool warned = false;
        for (const double v : values) {
            if (!(v > 0.0)) {
                throw ConfigError("gates_per_layer values must be > 0");
            }
            const std::int64_t depth = zone_limited_depth(v, zones, fixed.d0);
            const double floor = beta_min(v, zones);
            bool clamped = false;
            const double beta =
                clamp_beta(fixed.beta.value_or(platform.timing.beta_trans), floor, &clamped);
            if (clamped && !warned) {
                result.warnings.push_back("beta_trans raised to its physical floor beta_min for some rows");
                warned = true;
            }
            const double t = circuit_time_for(platform, fixed, depth, beta);
            result.rows.push_back(finish_row(v, depth, t, fixed.n_samples, platform_power));
        }
        break;
    }
    case SweepAxis::D0: {
        if (is_photonic) {
            throw ConfigError("photonic platforms have no routing model; sweep qubits or samples");
        }
        std::optional<ConnectivitySpec> graph_spec = fixed.graph;
        if (!graph_spec) {
            graph_spec = platform.connectivity;
        }
        if (!graph_spec) {
            throw ConfigError("platform '" + platform.name() +
                              "' has no connectivity graph; pass a graph override for the d0 axis");
        }
        const GraphMetrics m = metrics(graph_spec->build());
        for (const double v : values) {
            const std::int64_t d0 = integral_value(v, "d0");
            const std::int64_t depth =
                post_routing_depth({d0, fixed.alpha_2q}, m, fixed.distance_mode);
            const double t = circuit_time_for(platform, fixed, depth, std::nullopt);
            result.rows.push_back(finish_row(v, depth, t, fixed.n_samples, platform_power));
        }
        break;
    }
    }

    for (const auto& row : result.rows) {
        check_row_identities(row);
    }
    return result;
}

std::string to_csv(const SweepResult& result) {
    CsvTable table({"axis_" + result.axis_name, "depth", "t_circuit_s", "t_alg_s", "power_w",
                    "ee_per_j", "n_in_24h"});
    for (const auto& row : result.rows) {
        table.add_row({format_double(row.axis_value), std::to_string(row.depth),
                       format_double(row.t_circuit_s), format_double(row.t_alg_s),
                       format_double(row.power_w), format_double(row.ee_per_j),
                       format_double(row.n_in_24h)});
    }
    return table.str();
}

nlohmann::ordered_json to_json(const SweepResult& result) {
    nlohmann::ordered_json j;
    j["platform"] = result.platform_name;
    j["axis"] = result.axis_name;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : result.rows) {
        nlohmann::ordered_json jr;
        jr["axis_" + result.axis_name] = row.axis_value;
        jr["depth"] = row.depth;
        if (row.overflow) {
            jr["t_circuit_s"] = "inf";
            jr["t_alg_s"] = "inf";
            jr["overflow"] = true;
        } else {
            jr["t_circuit_s"] = row.t_circuit_s;
            jr["t_alg_s"] = row.t_alg_s;
        }
        jr["power_w"] = row.power_w;
        jr["ee_per_j"] = row.ee_per_j;
        jr["n_in_24h"] = row.n_in_24h;
        j["rows"].push_back(jr);
    }
    return j;
}

std::string render(const SweepResult& result, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        return to_csv(result);
    }
    return to_json(result).dump(2) + "\n";
}

} // namespace qj
