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

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "qjoule/efficiency.hpp"
#include "qjoule/figures.hpp"
#include "qjoule/presets.hpp"
#include "qjoule/scenario.hpp"
#include "qjoule/textio.hpp"
#include "qjoule/zones.hpp"

namespace {

using namespace qj;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitOverflow = 3;

int g_exit_code = kExitOk;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(out_path, content);
        std::cerr << "wrote " << out_path << "\n";
    }
}

std::vector<double> parse_values(const std::string& spec) {
    if (spec.empty()) {
        throw ConfigError("empty range");
    }
    std::vector<double> values;
    if (spec.find(':') != std::string::npos) {
        double lo = 0, hi = 0, step = 1;
        char colon1 = 0, colon2 = 0;
        std::istringstream in(spec);
        if (!(in >> lo >> colon1 >> hi) || colon1 != ':') {
            throw ConfigError("cannot parse range '" + spec + "' (expected lo:hi or lo:hi:step)");
        }
        if (in >> colon2 >> step) {
            if (colon2 != ':' || !(step > 0)) {
                throw ConfigError("cannot parse range '" + spec + "'");
            }
        }
        if (hi < lo) {
            throw ConfigError("range '" + spec + "' is empty");
        }
        for (double v = lo; v <= hi + 1e-9; v += step) {
            values.push_back(v);
        }
        return values;
    }
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            values.push_back(std::stod(token));
        } catch (const std::exception&) {
            throw ConfigError("cannot parse value '" + token + "' in '" + spec + "'");
        }
    }
    if (values.empty()) {
        throw ConfigError("empty range '" + spec + "'");
    }
    return values;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    for (const double v : parse_values(spec)) {
        out.push_back(static_cast<int>(v));
    }
    return out;
}

/// Options shared by the graph-based subcommands.
struct GraphOptions {
    std::string family;
    int n = 0;
    int rows = 0;
    int cols = 0;
    std::string edge_list;

    void attach(CLI::App* cmd, bool required) {
        auto* fam = cmd->add_option("--family", family,
                                    "graph family: linear|circular|grid|heavy_hex|full|custom");
        if (required) fam->required();
        cmd->add_option("--n", n, "node count (linear/circular/full)");
        cmd->add_option("--rows", rows, "rows (grid/heavy_hex)");
        cmd->add_option("--cols", cols, "columns (grid/heavy_hex)");
        cmd->add_option("--edge-list", edge_list, "edge list file for --family custom");
    }

    bool given() const { return !family.empty(); }

    ConnectivitySpec spec() const {
        ConnectivitySpec s;
        s.family = graph_family_from_string(family);
        s.n = n;
        s.rows = rows;
        s.cols = cols;
        s.edge_list_path = edge_list;
        return s;
    }
};

struct CommonOutput {
    std::string out_path;
    std::string format = "csv";

    void attach(CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--format", format, "output format: csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
    }
};

void print_power_report(const PlatformConfig& cfg, const std::string& format,
                        const std::string& out_path) {
    const auto rows = instantiate(cfg.inventory);
    const auto shares = breakdown_by_group(cfg.inventory);
    const double total = total_power(cfg.inventory);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["platform"] = cfg.name();
        j["components"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            j["components"].push_back({{"name", row.name},
                                       {"group", to_string(row.group)},
                                       {"count", row.count},
                                       {"subtotal_w", row.subtotal_w}});
        }
        j["breakdown"] = nlohmann::ordered_json::object();
        for (const auto& [group, share] : shares) {
            nlohmann::ordered_json js{{"watts", share.watts}};
            if (share.fraction) js["fraction"] = *share.fraction;
            j["breakdown"][to_string(group)] = js;
        }
        j["total_power_w"] = total;
        emit(j.dump(2) + "\n", out_path);
        return;
    }
    if (format == "csv") {
        CsvTable table({"name", "group", "count", "subtotal_w"});
        for (const auto& row : rows) {
            table.add_row({row.name, to_string(row.group), format_double(row.count),
                           format_double(row.subtotal_w)});
        }
        emit(table.str(), out_path);
        return;
    }
    std::ostringstream out;
    out << "platform: " << cfg.name() << "\n";
    for (const auto& row : rows) {
        out << "  " << row.name << " [" << to_string(row.group) << "]  count="
            << format_double(row.count) << "  subtotal=" << format_double(row.subtotal_w) << " W\n";
    }
    out << "breakdown:\n";
    for (const auto& [group, share] : shares) {
        out << "  " << to_string(group) << ": " << format_double(share.watts) << " W";
        if (share.fraction) {
            out << " (" << format_double(*share.fraction * 100.0) << "%)";
        }
        out << "\n";
    }
    out << "total: " << format_double(total) << " W\n";
    out << "energy over 24 h: " << format_double(energy_in_window(cfg.inventory, kSecondsPerDay))
        << " J\n";
    emit(out.str(), out_path);
}

void run_time_command(const std::string& platform_name, std::int64_t depth, std::int64_t samples,
                      std::optional<double> beta, const std::string& reset,
                      const std::string& reload, std::optional<int> zones, bool floor_mode) {
    const PlatformConfig cfg = find_platform(platform_name);
    std::ostringstream out;
    double t_circuit = 0.0;
    double power = 0.0;
    if (cfg.timing.family == TimingFamily::Photonic) {
        const int n_q = static_cast<int>(cfg.inventory.params.get("N_q", "photonic device"));
        const PhotonicPoint p = evaluate_photonic(cfg.photonic->device(n_q), samples);
        out << "platform: " << cfg.name() << " (photonic, N_q=" << n_q << ")\n"
            << "  eta(" << p.modes << " modes) = " << format_double(p.eta) << "\n"
            << "  t_sample   = " << format_double(p.sample_time_s) << " s\n";
        if (p.overflow) {
            out << "  sampling time overflowed: photon survival below 1e-300\n";
            g_exit_code = kExitOverflow;
        }
        t_circuit = p.sample_time_s;
        power = p.power_w;
    } else {
        CircuitTimeBreakdown b;
        FixedParams fixed;
        fixed.reset = reset.empty() ? ResetKind::Default : reset_kind_from_string(reset);
        if (zones) fixed.zones = zones;
        switch (cfg.timing.family) {
        case TimingFamily::SolidState:
            b = solid_state_breakdown(cfg.timing.solid(fixed.reset), depth);
            break;
        case TimingFamily::Atom: {
            TimingConfig timing = cfg.timing;
            if (zones) timing.t_clock_s = multizone_clock(*zones);
            b = atom_breakdown(timing.atom(beta), depth);
            break;
        }
        case TimingFamily::Neutral: {
            std::optional<ReloadMode> mode;
            if (!reload.empty()) {
                mode = reload == "continuous" ? ReloadMode::ContinuousReload
                                              : ReloadMode::PeriodicReload;
            }
            b = neutral_breakdown(cfg.timing.neutral(beta, mode), depth);
            break;
        }
        default:
            break;
        }
        out << "platform: " << cfg.name() << " (depth " << depth << ", " << samples << " samples)\n"
            << "  reset     = " << format_double(b.reset_s) << " s\n"
            << "  clock     = " << format_double(b.clock_s) << " s\n"
            << "  measure   = " << format_double(b.meas_s) << " s\n";
        if (cfg.timing.family != TimingFamily::SolidState) {
            out << "  transport = " << format_double(b.transport_s) << " s\n";
        }
        if (cfg.timing.family == TimingFamily::Neutral) {
            out << "  reload    = " << format_double(b.reload_s) << " s\n";
        }
        t_circuit = b.total_s;
        power = total_power(cfg.inventory);
    }
    const double t_alg = algorithm_time(t_circuit, samples);
    out << "  t_circuit  = " << format_double(t_circuit) << " s\n"
        << "  t_alg      = " << format_double(t_alg) << " s\n"
        << "  power      = " << format_double(power) << " W\n";
    if (std::isfinite(t_alg)) {
        out << "  EE         = " << format_double(energy_efficiency(t_alg, power)) << " per J\n"
            << "  N(24h)     = " << format_double(n_algorithms(kSecondsPerDay, t_alg, floor_mode))
            << (floor_mode ? " (completed executions only)" : "") << "\n";
    }
    std::cout << out.str();
}

void run_route(const GraphOptions& graph, const std::string& d0_spec, const std::string& alpha_spec,
               bool diameter_bound, const CommonOutput& output) {
    const CouplingGraph g = graph.spec().build();
    std::vector<std::int64_t> d0_values;
    for (const double v : parse_values(d0_spec)) {
        d0_values.push_back(static_cast<std::int64_t>(v));
    }
    const auto rows = routing_sweep({g}, d0_values, parse_values(alpha_spec),
                                    diameter_bound ? DistanceMode::Diameter : DistanceMode::Average);
    if (output.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            j.push_back({{"family", to_string(row.family)},
                         {"n", row.nodes},
                         {"d_avg", row.avg_shortest_path},
                         {"diameter", row.diameter},
                         {"d0", row.d0},
                         {"alpha_2q", row.alpha_2q},
                         {"depth", row.depth}});
        }
        emit(j.dump(2) + "\n", output.out_path);
        return;
    }
    CsvTable table({"family", "n", "d_avg", "diameter", "d0", "alpha_2q", "depth"});
    for (const auto& row : rows) {
        table.add_row({to_string(row.family), std::to_string(row.nodes),
                       format_double(row.avg_shortest_path), std::to_string(row.diameter),
                       std::to_string(row.d0), format_double(row.alpha_2q),
                       std::to_string(row.depth)});
    }
    emit(table.str(), output.out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qjoule: energy-efficiency models of quantum computing platforms"};
    app.require_subcommand(1);

    // --- presets ---------------------------------------------------------
    auto* presets_cmd = app.add_subcommand("presets", "list the built-in platform presets");
    bool presets_json = false;
    presets_cmd->add_flag("--json", presets_json, "machine-readable catalog");
    presets_cmd->callback([&]() {
        const auto infos = list_presets();
        if (presets_json) {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& info : infos) {
                j.push_back({{"name", info.name},
                             {"family", info.family},
                             {"power_w", info.power_w},
                             {"citation", info.citation}});
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& info : infos) {
                std::cout << info.name << "  [" << info.family << ", "
                          << format_double(info.power_w) << " W]\n    " << info.citation << "\n";
            }
        }
    });

    // --- power -----------------------------------------------------------
    auto* power_cmd = app.add_subcommand("power", "instantiate a platform's component table");
    std::string power_preset, power_config, power_format = "text";
    CommonOutput power_out;
    power_cmd->add_option("--preset", power_preset, "built-in preset name");
    power_cmd->add_option("--config", power_config, "platform config JSON file");
    power_cmd->add_option("--format", power_format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    power_cmd->add_option("--out", power_out.out_path, "output file (default: stdout)");
    power_cmd->callback([&]() {
        if (power_preset.empty() == power_config.empty()) {
            throw ConfigError("give exactly one of --preset or --config");
        }
        const PlatformConfig cfg = power_preset.empty() ? load_platform_config(power_config)
                                                        : find_platform(power_preset);
        print_power_report(cfg, power_format, power_out.out_path);
    });

    // --- validate ---------------------------------------------------------
    auto* validate_cmd = app.add_subcommand("validate", "check a platform config file");
    std::string validate_config;
    validate_cmd->add_option("--config", validate_config, "platform config JSON file")->required();
    validate_cmd->callback([&]() {
        const PlatformConfig cfg = load_platform_config(validate_config);
        print_power_report(cfg, "text", "");
        std::cout << "config OK\n";
    });

    // --- export -----------------------------------------------------------
    auto* export_cmd = app.add_subcommand("export", "write a preset as a platform config JSON");
    std::string export_preset, export_out;
    export_cmd->add_option("--preset", export_preset, "built-in preset name")->required();
    export_cmd->add_option("--out", export_out, "output file (default: stdout)");
    export_cmd->callback([&]() {
        const PlatformConfig cfg = find_platform(export_preset);
        emit(to_json(cfg).dump(2) + "\n", export_out);
    });

    // --- time --------------------------------------------------------------
    auto* time_cmd = app.add_subcommand("time", "circuit/algorithm time with a per-term breakdown");
    std::string time_platform, time_reset, time_reload;
    std::int64_t time_depth = 100, time_samples = 1;
    double time_beta = -1.0;
    int time_zones = 0;
    time_cmd->add_option("--platform,--preset", time_platform, "platform preset or config name")
        ->required();
    time_cmd->add_option("--depth", time_depth, "post-compilation circuit depth");
    time_cmd->add_option("--samples", time_samples, "number of samples (shots)");
    time_cmd->add_option("--beta", time_beta, "transport ratio override, in [0,1]");
    time_cmd->add_option("--reset", time_reset, "reset mode: active|passive|instant");
    time_cmd->add_option("--reload", time_reload, "reload mode override: periodic|continuous");
    time_cmd->add_option("--zones", time_zones, "gate zone override (recomputes the clock)");
    bool time_floor = false;
    time_cmd->add_flag("--floor", time_floor, "count only completed executions in N(24h)");
    time_cmd->callback([&]() {
        run_time_command(time_platform, time_depth, time_samples,
                         time_beta >= 0 ? std::optional<double>(time_beta) : std::nullopt,
                         time_reset, time_reload,
                         time_zones > 0 ? std::optional<int>(time_zones) : std::nullopt, time_floor);
    });

    // --- ee (scenario runner) ----------------------------------------------
    auto* ee_cmd = app.add_subcommand("ee", "run an energy-efficiency sweep");
    ScenarioConfig scenario;
    std::string ee_axis = "depth", ee_range, ee_format = "csv", ee_reset, ee_reload, ee_chip;
    double ee_beta = -1.0;
    int ee_zones = 0;
    bool ee_diameter = false;
    GraphOptions ee_graph;
    ee_cmd->add_option("--preset", scenario.preset, "built-in preset name");
    ee_cmd->add_option("--config", scenario.config_path, "platform config JSON file");
    ee_cmd->add_option("--axis", ee_axis, "sweep axis: depth|samples|qubits|gates_per_layer|d0");
    ee_cmd->add_option("--range", ee_range, "axis values: lo:hi[:step] or v1,v2,...")->required();
    ee_cmd->add_option("--samples", scenario.fixed.n_samples, "fixed number of samples");
    ee_cmd->add_option("--depth", scenario.fixed.depth, "fixed depth (non-depth axes)");
    ee_cmd->add_option("--d0", scenario.fixed.d0, "pre-routing depth for the gates_per_layer axis");
    ee_cmd->add_option("--alpha", scenario.fixed.alpha_2q, "two-qubit layer ratio for the d0 axis");
    ee_cmd->add_option("--beta", ee_beta, "transport ratio override");
    ee_cmd->add_option("--zones", ee_zones, "gate zone override");
    ee_cmd->add_option("--reset", ee_reset, "reset mode: active|passive|instant");
    ee_cmd->add_option("--reload", ee_reload, "reload mode override: periodic|continuous");
    ee_cmd->add_option("--chip", ee_chip, "photonic chip: glass|eo-ln|eo-bto");
    ee_cmd->add_flag("--diameter-bound", ee_diameter, "route with the diameter upper bound");
    ee_graph.attach(ee_cmd, false);
    ee_cmd->add_option("--out", scenario.out_path, "output file (default: stdout)");
    ee_cmd->add_option("--format", ee_format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    ee_cmd->callback([&]() {
        scenario.axis = sweep_axis_from_string(ee_axis);
        scenario.axis_values = parse_values(ee_range);
        scenario.format = output_format_from_string(ee_format);
        if (ee_beta >= 0) scenario.fixed.beta = ee_beta;
        if (ee_zones > 0) scenario.fixed.zones = ee_zones;
        if (!ee_reset.empty()) scenario.fixed.reset = reset_kind_from_string(ee_reset);
        if (!ee_reload.empty()) {
            scenario.fixed.reload = ee_reload == "continuous" ? ReloadMode::ContinuousReload
                                                              : ReloadMode::PeriodicReload;
            std::cerr << "note: --reload changes the timing model only; the continuous-reload "
                         "hardware delta lives in the neutral-continuous preset\n";
        }
        if (!ee_chip.empty()) scenario.fixed.chip = ee_chip;
        if (ee_graph.given()) scenario.fixed.graph = ee_graph.spec();
        scenario.fixed.distance_mode = ee_diameter ? DistanceMode::Diameter : DistanceMode::Average;
        const SweepResult result = run_scenario(scenario);
        for (const auto& warning : result.warnings) {
            std::cerr << "warning: " << warning << "\n";
        }
        emit(render(result, scenario.format), scenario.out_path);
        if (result.any_overflow()) {
            g_exit_code = kExitOverflow;
        }
    });

    // --- route / topology ----------------------------------------------------
    GraphOptions route_graph;
    std::string route_d0 = "500", route_alpha = "1";
    bool route_diameter = false;
    CommonOutput route_out;
    auto* route_cmd = app.add_subcommand("route", "post-routing depth on a coupling graph");
    route_graph.attach(route_cmd, true);
    route_cmd->add_option("--d0", route_d0, "pre-routing depth values: lo:hi[:step] or list");
    route_cmd->add_option("--alpha", route_alpha, "two-qubit layer ratios: list");
    route_cmd->add_flag("--diameter-bound", route_diameter, "use the diameter upper bound");
    route_out.attach(route_cmd);
    route_cmd->callback([&]() { run_route(route_graph, route_d0, route_alpha, route_diameter, route_out); });

    auto* topo_cmd = app.add_subcommand("topology", "coupling graph tools");
    topo_cmd->require_subcommand(1);
    auto* metrics_cmd = topo_cmd->add_subcommand("metrics", "graph distance metrics");
    GraphOptions metrics_graph;
    metrics_graph.attach(metrics_cmd, true);
    metrics_cmd->callback([&]() {
        const GraphMetrics m = metrics(metrics_graph.spec().build());
        std::cout << "family: " << metrics_graph.family << "\n"
                  << "nodes: " << m.nodes << "\n"
                  << "edges: " << m.edges << "\n"
                  << "d_avg: " << format_double(m.avg_shortest_path) << "\n"
                  << "diameter: " << m.diameter << "\n";
    });
    auto* topo_route_cmd = topo_cmd->add_subcommand("route", "post-routing depth (alias of `route`)");
    GraphOptions topo_route_graph;
    std::string topo_route_d0 = "500", topo_route_alpha = "1";
    bool topo_route_diameter = false;
    CommonOutput topo_route_out;
    topo_route_graph.attach(topo_route_cmd, true);
    topo_route_cmd->add_option("--d0", topo_route_d0, "pre-routing depth values");
    topo_route_cmd->add_option("--alpha", topo_route_alpha, "two-qubit layer ratios");
    topo_route_cmd->add_flag("--diameter-bound", topo_route_diameter, "use the diameter upper bound");
    topo_route_out.attach(topo_route_cmd);
    topo_route_cmd->callback([&]() {
        run_route(topo_route_graph, topo_route_d0, topo_route_alpha, topo_route_diameter, topo_route_out);
    });

    // --- zones -----------------------------------------------------------------
    auto* zones_cmd = app.add_subcommand("zones", "gate-zone compilation model");
    zones_cmd->require_subcommand(1);
    auto* zdepth_cmd = zones_cmd->add_subcommand("depth", "zone-limited circuit depth");
    double zd_gates = 1.0;
    int zd_zones = 1;
    std::int64_t zd_d0 = 500;
    zdepth_cmd->add_option("--gates-per-layer", zd_gates, "average gates per layer")->required();
    zdepth_cmd->add_option("--zones", zd_zones, "gate zones")->required();
    zdepth_cmd->add_option("--d0", zd_d0, "pre-routing depth");
    zdepth_cmd->callback([&]() {
        std::cout << "depth: " << zone_limited_depth(zd_gates, zd_zones, zd_d0) << "\n"
                  << "split_factor: " << layer_split_factor(zd_gates, zd_zones) << "\n"
                  << "beta_min: " << format_double(beta_min(zd_gates, zd_zones)) << "\n";
    });
    auto* zbeta_cmd = zones_cmd->add_subcommand("beta", "transport-ratio envelope");
    std::string zb_range, zb_zones;
    CommonOutput zb_out;
    zbeta_cmd->add_option("--gates-per-layer-range", zb_range, "densities: lo:hi[:step] or list")
        ->required();
    zbeta_cmd->add_option("--zones", zb_zones, "zone counts, comma separated")->required();
    zb_out.attach(zbeta_cmd);
    zbeta_cmd->callback([&]() {
        const auto rows = beta_envelope(parse_values(zb_range), parse_int_list(zb_zones));
        if (zb_out.format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                j.push_back({{"gates_per_layer", row.gates_per_layer},
                             {"zones", row.zones},
                             {"beta_min", row.beta_min},
                             {"beta_max", row.beta_max}});
            }
            emit(j.dump(2) + "\n", zb_out.out_path);
            return;
        }
        CsvTable table({"gates_per_layer", "zones", "beta_min", "beta_max"});
        for (const auto& row : rows) {
            table.add_row({format_double(row.gates_per_layer), std::to_string(row.zones),
                           format_double(row.beta_min), format_double(row.beta_max)});
        }
        emit(table.str(), zb_out.out_path);
    });

    // --- photonic ---------------------------------------------------------------
    auto* photonic_cmd = app.add_subcommand("photonic", "photonic platform model");
    photonic_cmd->require_subcommand(1);
    auto* pee_cmd = photonic_cmd->add_subcommand("ee", "photonic energy-efficiency sweep over N_q");
    std::string pee_nq = "1:30", pee_chip = "glass";
    std::int64_t pee_samples = 1;
    int pee_sources = 1;
    double pee_rate = 1e9;
    CommonOutput pee_out;
    pee_cmd->add_option("--nq", pee_nq, "qubit counts: lo:hi[:step] or list");
    pee_cmd->add_option("--samples", pee_samples, "number of samples");
    pee_cmd->add_option("--chip", pee_chip, "chip technology: glass|eo-ln|eo-bto");
    pee_cmd->add_option("--sources", pee_sources, "number of single-photon sources");
    pee_cmd->add_option("--rate", pee_rate, "source rate in Hz");
    pee_out.attach(pee_cmd);
    pee_cmd->callback([&]() {
        PhotonicSettings settings;
        settings.chip = chip_from_name(pee_chip);
        settings.n_sources = pee_sources;
        settings.source_rate_hz = pee_rate;
        bool overflowed = false;
        CsvTable table({"n_q", "modes", "eta", "t_sample_s", "power_w", "ee_per_j"});
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const double v : parse_values(pee_nq)) {
            const PhotonicPoint p = evaluate_photonic(settings.device(static_cast<int>(v)), pee_samples);
            overflowed = overflowed || p.overflow;
            if (pee_out.format == "json") {
                nlohmann::ordered_json jr{{"n_q", p.n_qubits},       {"modes", p.modes},
                                          {"eta", p.eta},            {"power_w", p.power_w},
                                          {"ee_per_j", p.ee_per_j},  {"overflow", p.overflow}};
                jr["t_sample_s"] = p.overflow ? nlohmann::ordered_json("inf")
                                              : nlohmann::ordered_json(p.sample_time_s);
                j.push_back(jr);
            } else {
                table.add_row({std::to_string(p.n_qubits), std::to_string(p.modes),
                               format_double(p.eta), format_double(p.sample_time_s),
                               format_double(p.power_w), format_double(p.ee_per_j)});
            }
        }
        emit(pee_out.format == "json" ? j.dump(2) + "\n" : table.str(), pee_out.out_path);
        if (overflowed) {
            g_exit_code = kExitOverflow;
        }
    });

    // --- figure -------------------------------------------------------------------
    auto* figure_cmd = app.add_subcommand("figure", "emit the data series behind a catalog figure");
    std::string figure_id, figure_dir = "figures";
    figure_cmd->add_option("id", figure_id, "figure id (fig3..fig17) or 'all'")->required();
    figure_cmd->add_option("--out", figure_dir, "output directory");
    figure_cmd->callback([&]() {
        std::vector<std::string> ids;
        if (figure_id == "all") {
            ids = figure_catalog();
        } else {
            ids.push_back(figure_id);
        }
        for (const auto& id : ids) {
            for (const auto& path : write_figure(id, figure_dir)) {
                std::cout << path << "\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return g_exit_code;
}
