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

#include "qjoule/figures.hpp"

#include <filesystem>

#include "qjoule/efficiency.hpp"
#include "qjoule/presets.hpp"
#include "qjoule/scenario.hpp"
#include "qjoule/textio.hpp"
#include "qjoule/zones.hpp"

namespace qj {

std::vector<double> log_grid(double lo, double hi) {
    std::vector<double> out;
    for (double decade = 1.0; decade <= hi; decade *= 10.0) {
        for (const double mantissa : {1.0, 2.0, 5.0}) {
            const double v = mantissa * decade;
            if (v >= lo && v <= hi) {
                out.push_back(v);
            }
        }
    }
    return out;
}

namespace {

const std::vector<double> kSampleSeries = {1, 10, 100, 1000, 10000};
const std::vector<double> kDepthSeries = {10, 100, 1000, 10000};

/// Cells for a labelled depth-sweep row: depth plus the five metrics.
std::vector<std::string> metric_cells(const SweepRow& row) {
    return {std::to_string(row.depth),      format_double(row.t_circuit_s),
            format_double(row.t_alg_s),     format_double(row.power_w),
            format_double(row.ee_per_j),    format_double(row.n_in_24h)};
}

/// Dual-axis EE/N panels: (a) EE vs depth for several sample counts,
/// (b) EE vs sample count for several depths.
std::vector<FigureFile> ee_panels(const std::string& figure_id, const std::string& preset_name,
                                  std::optional<double> beta = std::nullopt) {
    CsvTable panel_a({"n_samples", "depth", "t_circuit_s", "t_alg_s", "power_w", "ee_per_j", "n_in_24h"});
    for (const double n : kSampleSeries) {
        ScenarioConfig cfg;
        cfg.preset = preset_name;
        cfg.axis = SweepAxis::Depth;
        cfg.axis_values = log_grid(10, 1e5);
        cfg.fixed.n_samples = static_cast<std::int64_t>(n);
        cfg.fixed.beta = beta;
        for (const auto& row : run_scenario(cfg).rows) {
            panel_a.add_row({format_double(n), format_double(row.axis_value),
                             format_double(row.t_circuit_s), format_double(row.t_alg_s),
                             format_double(row.power_w), format_double(row.ee_per_j),
                             format_double(row.n_in_24h)});
        }
    }
    CsvTable panel_b({"depth", "n_samples", "t_circuit_s", "t_alg_s", "power_w", "ee_per_j", "n_in_24h"});
    for (const double d : kDepthSeries) {
        ScenarioConfig cfg;
        cfg.preset = preset_name;
        cfg.axis = SweepAxis::Samples;
        cfg.axis_values = log_grid(1, 1e5);
        cfg.fixed.depth = static_cast<std::int64_t>(d);
        cfg.fixed.beta = beta;
        for (const auto& row : run_scenario(cfg).rows) {
            panel_b.add_row({format_double(d), format_double(row.axis_value),
                             format_double(row.t_circuit_s), format_double(row.t_alg_s),
                             format_double(row.power_w), format_double(row.ee_per_j),
                             format_double(row.n_in_24h)});
        }
    }
    return {{figure_id + "a.csv", panel_a.str()}, {figure_id + "b.csv", panel_b.str()}};
}

std::vector<FigureFile> breakdown_figure(const std::string& figure_id, const std::string& preset_name) {
    const PlatformConfig cfg = preset(preset_name);
    CsvTable table({"group", "power_w", "fraction"});
    for (const auto& [group, share] : breakdown_by_group(cfg.inventory)) {
        table.add_row({to_string(group), format_double(share.watts),
                       share.fraction ? format_double(*share.fraction) : "undefined"});
    }
    return {{figure_id + ".csv", table.str()}};
}

std::vector<FigureFile> fig3_routing() {
    const std::vector<CouplingGraph> graphs = {
        CouplingGraph::linear(49),
        CouplingGraph::circular(49),
        CouplingGraph::square_lattice(7, 7),
        CouplingGraph::heavy_hex(2, 3),   // 49 nodes
        CouplingGraph::fully_connected(49),
    };
    std::vector<std::int64_t> d0_values;
    for (const double v : log_grid(10, 1e4)) {
        d0_values.push_back(static_cast<std::int64_t>(v));
    }
    CsvTable table({"family", "n", "d_avg", "diameter", "d0", "alpha_2q", "depth"});
    for (const auto& row : routing_sweep(graphs, d0_values, {0.1, 0.5, 1.0})) {
        table.add_row({to_string(row.family), std::to_string(row.nodes),
                       format_double(row.avg_shortest_path), std::to_string(row.diameter),
                       std::to_string(row.d0), format_double(row.alpha_2q),
                       std::to_string(row.depth)});
    }
    return {{"fig3.csv", table.str()}};
}

std::vector<FigureFile> fig6_reset_comparison() {
    // The passive-reset efficiency quoted for D~100 pins N_samples = 100.
    CsvTable table({"reset_mode", "depth", "t_circuit_s", "t_alg_s", "power_w", "ee_per_j", "n_in_24h"});
    const std::vector<std::pair<std::string, ResetKind>> modes = {
        {"active", ResetKind::Active}, {"passive", ResetKind::Passive}, {"instant", ResetKind::Instant}};
    for (const auto& [label, kind] : modes) {
        ScenarioConfig cfg;
        cfg.preset = "superconducting-baseline";
        cfg.axis = SweepAxis::Depth;
        cfg.axis_values = log_grid(10, 1e5);
        cfg.fixed.n_samples = 100;
        cfg.fixed.reset = kind;
        for (const auto& row : run_scenario(cfg).rows) {
            auto cells = metric_cells(row);
            cells.insert(cells.begin(), label);
            table.add_row(cells);
        }
    }
    return {{"fig6.csv", table.str()}};
}

std::vector<FigureFile> fig9_spin_architectures() {
    CsvTable table({"preset", "d0", "depth", "t_circuit_s", "t_alg_s", "power_w", "ee_per_j", "n_in_24h"});
    for (const std::string name : {"spin-linear", "spin-2d", "spin-crossbar-paper-times",
                                   "spin-crossbar-2d-times"}) {
        ScenarioConfig cfg;
        cfg.preset = name;
        cfg.axis = SweepAxis::D0;
        cfg.axis_values = log_grid(10, 1e4);
        cfg.fixed.n_samples = 1;
        cfg.fixed.alpha_2q = 0.5;
        for (const auto& row : run_scenario(cfg).rows) {
            auto cells = metric_cells(row);
            cells.insert(cells.begin(), format_double(row.axis_value));
            cells.insert(cells.begin(), name);
            table.add_row(cells);
        }
    }
    return {{"fig9.csv", table.str()}};
}

std::vector<FigureFile> fig12_gate_zones() {
    CsvTable beta_table({"gates_per_layer", "zones", "beta_min", "beta_max"});
    std::vector<double> densities;
    for (int g = 1; g <= 40; ++g) {
        densities.push_back(g);
    }
    for (const auto& row : beta_envelope(densities, {1, 5, 10})) {
        beta_table.add_row({format_double(row.gates_per_layer), std::to_string(row.zones),
                            format_double(row.beta_min), format_double(row.beta_max)});
    }

    // Best case runs at the transport floor beta_min, worst case at beta = 1.
    // The fast_clock variant gives multi-zone devices the single-zone gate
    // clock, the fair comparison for circuits that never hop between zones.
    CsvTable ee_table({"zones", "clock_variant", "gates_per_layer", "depth", "beta_min",
                       "t_circuit_best_s", "t_circuit_worst_s", "power_w", "ee_best_per_j",
                       "ee_worst_per_j"});
    constexpr std::int64_t d0 = 500;
    for (const int zones : {1, 5, 10}) {
        const PlatformConfig cfg = preset("trapped-ion-" + std::to_string(zones) + "zone");
        const double power = total_power(cfg.inventory);
        for (const std::string variant : {"standard", "fast_clock"}) {
            if (variant == "fast_clock" && zones == 1) {
                continue;   // already gate-time limited
            }
            TimingConfig timing = cfg.timing;
            if (variant == "fast_clock") {
                timing.t_clock_s = multizone_clock(1);
            }
            for (const double g : densities) {
                const std::int64_t depth = zone_limited_depth(g, zones, d0);
                const double floor = beta_min(g, zones);
                const double t_best = atom_circuit_time(timing.atom(floor), depth);
                const double t_worst = atom_circuit_time(timing.atom(1.0), depth);
                ee_table.add_row({std::to_string(zones), variant, format_double(g),
                                  std::to_string(depth), format_double(floor),
                                  format_double(t_best), format_double(t_worst),
                                  format_double(power),
                                  format_double(energy_efficiency(t_best, power)),
                                  format_double(energy_efficiency(t_worst, power))});
            }
        }
    }
    return {{"fig12_beta.csv", beta_table.str()}, {"fig12_ee.csv", ee_table.str()}};
}

std::vector<FigureFile> fig14_photonic_qubits() {
    CsvTable table({"n_qubits", "n_samples", "modes", "eta", "t_sample_s", "power_w", "ee_per_j",
                    "n_in_24h"});
    const PlatformConfig cfg = preset("photonic-glass");
    for (const int n_q : {1, 6, 12, 18, 24}) {
        const PhotonicDevice dev = cfg.photonic->device(n_q);
        for (const double n : log_grid(1, 1e5)) {
            const PhotonicPoint p = evaluate_photonic(dev, static_cast<std::int64_t>(n));
            table.add_row({std::to_string(n_q), format_double(n), std::to_string(p.modes),
                           format_double(p.eta), format_double(p.sample_time_s),
                           format_double(p.power_w), format_double(p.ee_per_j),
                           format_double(p.overflow ? 0.0
                                                    : n_algorithms(kSecondsPerDay,
                                                                   p.sample_time_s * n))});
        }
    }
    return {{"fig14.csv", table.str()}};
}

std::vector<FigureFile> fig15_chip_technologies() {
    CsvTable table({"chip", "n_samples", "eta", "t_sample_s", "power_w", "ee_per_j", "n_in_24h"});
    for (const std::string chip : {"glass", "eo-ln", "eo-bto"}) {
        const PlatformConfig cfg = preset("photonic-" + chip);
        const PhotonicDevice dev = cfg.photonic->device(12);
        for (const double n : log_grid(1, 1e5)) {
            const PhotonicPoint p = evaluate_photonic(dev, static_cast<std::int64_t>(n));
            table.add_row({chip, format_double(n), format_double(p.eta),
                           format_double(p.sample_time_s), format_double(p.power_w),
                           format_double(p.ee_per_j),
                           format_double(p.overflow ? 0.0
                                                    : n_algorithms(kSecondsPerDay,
                                                                   p.sample_time_s * n))});
        }
    }
    return {{"fig15.csv", table.str()}};
}

std::vector<FigureFile> fig17_reload_comparison() {
    CsvTable table({"reload_mode", "depth", "t_circuit_s", "t_alg_s", "power_w", "ee_per_j", "n_in_24h"});
    for (const std::string name : {"neutral-periodic", "neutral-continuous"}) {
        ScenarioConfig cfg;
        cfg.preset = name;
        cfg.axis = SweepAxis::Depth;
        cfg.axis_values = log_grid(1, 1e5);   // runs past the 2400-layer reload period
        cfg.fixed.n_samples = 1;
        for (const auto& row : run_scenario(cfg).rows) {
            auto cells = metric_cells(row);
            cells.insert(cells.begin(), name == "neutral-periodic" ? "periodic" : "continuous");
            table.add_row(cells);
        }
    }
    return {{"fig17.csv", table.str()}};
}

} // namespace

std::vector<std::string> figure_catalog() {
    std::vector<std::string> ids;
    for (int i = 3; i <= 17; ++i) {
        ids.push_back("fig" + std::to_string(i));
    }
    return ids;
}

std::vector<FigureFile> reproduce_figure(const std::string& figure_id) {
    if (figure_id == "fig3") return fig3_routing();
    if (figure_id == "fig4") return breakdown_figure("fig4", "superconducting-baseline");
    if (figure_id == "fig5") return ee_panels("fig5", "superconducting-baseline");
    if (figure_id == "fig6") return fig6_reset_comparison();
    if (figure_id == "fig7") return breakdown_figure("fig7", "spin-2d");
    if (figure_id == "fig8") return ee_panels("fig8", "spin-2d");
    if (figure_id == "fig9") return fig9_spin_architectures();
    if (figure_id == "fig10") return breakdown_figure("fig10", "trapped-ion-1zone");
    if (figure_id == "fig11") return ee_panels("fig11", "trapped-ion-1zone", 1.0);
    if (figure_id == "fig12") return fig12_gate_zones();
    if (figure_id == "fig13") return breakdown_figure("fig13", "neutral-periodic");
    if (figure_id == "fig14") return fig14_photonic_qubits();
    if (figure_id == "fig15") return fig15_chip_technologies();
    if (figure_id == "fig16") return ee_panels("fig16", "neutral-periodic", 0.25);
    if (figure_id == "fig17") return fig17_reload_comparison();
    throw ConfigError("unknown figure id '" + figure_id + "'; supported: fig3..fig17");
}

std::vector<std::string> write_figure(const std::string& figure_id, const std::string& out_dir) {
    const auto files = reproduce_figure(figure_id);
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> paths;
    for (const auto& file : files) {
        const auto path = (std::filesystem::path(out_dir) / file.filename).string();
        write_text_file(path, file.csv);
        paths.push_back(path);
    }
    return paths;
}

} // namespace qj
