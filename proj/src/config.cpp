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

#include "qjoule/config.hpp"

#include <fstream>

namespace qj {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string count_rule_kind_name(CountRule::Kind k) {
    switch (k) {
    case CountRule::Kind::Constant: return "constant";
    case CountRule::Kind::Linear: return "linear";
    case CountRule::Kind::LinearSqrt: return "linear_sqrt";
    case CountRule::Kind::Quadratic: return "quadratic";
    case CountRule::Kind::CeilRatio: return "ceil_ratio";
    case CountRule::Kind::CeilSqrt: return "ceil_sqrt";
    }
    throw DomainError("unknown count rule kind");
}

ordered_json count_rule_to_json(const CountRule& r) {
    ordered_json j;
    j["kind"] = count_rule_kind_name(r.kind);
    switch (r.kind) {
    case CountRule::Kind::Constant:
        j["k"] = r.a;
        break;
    case CountRule::Kind::Linear:
        j["param"] = r.param;
        j["a"] = r.a;
        j["b"] = r.b;
        break;
    case CountRule::Kind::LinearSqrt:
        j["param"] = r.param;
        j["a"] = r.a;
        j["b"] = r.b;
        j["c"] = r.c;
        break;
    case CountRule::Kind::Quadratic:
        j["param"] = r.param;
        j["a2"] = r.a;
        j["a1"] = r.b;
        j["a0"] = r.c;
        break;
    case CountRule::Kind::CeilRatio:
        j["param"] = r.param;
        j["num_linear"] = r.a;
        j["num_quadratic"] = r.b;
        j["denom"] = r.denom;
        break;
    case CountRule::Kind::CeilSqrt:
        j["param"] = r.param;
        j["scale"] = r.scale;
        j["a"] = r.a;
        j["b"] = r.b;
        break;
    }
    return j;
}

CountRule count_rule_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw ConfigError("count rule must be an object with a 'kind' field");
    }
    const std::string kind = j.at("kind").get<std::string>();
    auto param = [&j]() { return j.at("param").get<std::string>(); };
    auto num = [&j](const char* field, double fallback) {
        return j.contains(field) ? j.at(field).get<double>() : fallback;
    };
    if (kind == "constant") {
        return CountRule::constant(j.at("k").get<double>());
    }
    if (kind == "linear") {
        return CountRule::linear(param(), num("a", 0.0), num("b", 0.0));
    }
    if (kind == "linear_sqrt") {
        return CountRule::linear_sqrt(param(), num("a", 0.0), num("b", 0.0), num("c", 0.0));
    }
    if (kind == "quadratic") {
        return CountRule::quadratic(param(), num("a2", 0.0), num("a1", 0.0), num("a0", 0.0));
    }
    if (kind == "ceil_ratio") {
        return CountRule::ceil_ratio(param(), num("num_linear", 0.0), num("num_quadratic", 0.0),
                                     j.at("denom").get<double>());
    }
    if (kind == "ceil_sqrt") {
        return CountRule::ceil_sqrt(param(), num("scale", 1.0), num("a", 0.0), num("b", 0.0));
    }
    throw ConfigError("unknown count rule kind '" + kind + "'");
}

std::string reload_mode_name(ReloadMode m) {
    return m == ReloadMode::PeriodicReload ? "periodic" : "continuous";
}

ReloadMode reload_mode_from_string(const std::string& s) {
    if (s == "periodic") return ReloadMode::PeriodicReload;
    if (s == "continuous") return ReloadMode::ContinuousReload;
    throw ConfigError("unknown reload mode '" + s + "' (expected periodic or continuous)");
}

} // namespace

std::string to_string(TimingFamily f) {
    switch (f) {
    case TimingFamily::SolidState: return "solid_state";
    case TimingFamily::Atom: return "atom";
    case TimingFamily::Neutral: return "neutral";
    case TimingFamily::Photonic: return "photonic";
    }
    throw DomainError("unknown timing family");
}

TimingFamily timing_family_from_string(const std::string& s) {
    if (s == "solid_state") return TimingFamily::SolidState;
    if (s == "atom") return TimingFamily::Atom;
    if (s == "neutral") return TimingFamily::Neutral;
    if (s == "photonic") return TimingFamily::Photonic;
    throw ConfigError("unknown timing family '" + s + "'");
}

ResetKind reset_kind_from_string(const std::string& s) {
    if (s == "default") return ResetKind::Default;
    if (s == "active") return ResetKind::Active;
    if (s == "passive") return ResetKind::Passive;
    if (s == "instant") return ResetKind::Instant;
    throw ConfigError("unknown reset kind '" + s + "' (expected active, passive or instant)");
}

SolidStateTiming TimingConfig::solid(ResetKind reset) const {
    SolidStateTiming t{t_reset_s, t_clock_s, t_meas_s};
    switch (reset) {
    case ResetKind::Default:
    case ResetKind::Active:
        break;
    case ResetKind::Passive:
        if (!t_reset_passive_s) {
            throw ConfigError("platform has no passive reset time configured");
        }
        t.t_reset_s = *t_reset_passive_s;
        break;
    case ResetKind::Instant:
        t.t_reset_s = 0.0;
        break;
    }
    return t;
}

AtomTiming TimingConfig::atom(std::optional<double> beta_override) const {
    AtomTiming t{t_reset_s, t_clock_s, t_meas_s, t_trans_s, beta_override.value_or(beta_trans)};
    if (!(t.beta_trans >= 0.0 && t.beta_trans <= 1.0)) {
        throw DomainError("beta_trans must be in [0, 1]");
    }
    return t;
}

NeutralAtomTiming TimingConfig::neutral(std::optional<double> beta_override,
                                        std::optional<ReloadMode> mode_override) const {
    NeutralAtomTiming t;
    t.atom = atom(beta_override);
    t.t_reload_s = t_reload_s;
    t.reload_period_layers = reload_period_layers;
    t.mode = mode_override.value_or(mode);
    return t;
}

CouplingGraph ConnectivitySpec::build() const {
    switch (family) {
    case GraphFamily::Linear: return CouplingGraph::linear(n);
    case GraphFamily::Circular: return CouplingGraph::circular(n);
    case GraphFamily::SquareLattice: return CouplingGraph::square_lattice(rows, cols);
    case GraphFamily::HeavyHex: return CouplingGraph::heavy_hex(rows, cols);
    case GraphFamily::FullyConnected: return CouplingGraph::fully_connected(n);
    case GraphFamily::Custom: return CouplingGraph::from_edge_list_file(edge_list_path);
    }
    throw DomainError("unknown graph family");
}

PhotonicDevice PhotonicSettings::device(int n_qubits) const {
    PhotonicDevice dev;
    dev.n_qubits = n_qubits;
    dev.n_sources = n_sources;
    dev.source_rate_hz = source_rate_hz;
    dev.efficiencies = efficiencies;
    dev.chip = chip;
    dev.elements_per_mzi = elements_per_mzi;
    dev.chip_length_cm = chip_length_cm;
    return dev;
}

void validate_platform_config(const PlatformConfig& cfg) {
    validate_inventory(cfg.inventory);
    if (cfg.timing.family == TimingFamily::Photonic && !cfg.photonic) {
        throw ConfigError("photonic platform '" + cfg.name() + "' is missing the photonic block");
    }
    if (cfg.photonic && !cfg.inventory.params.has("N_q")) {
        throw ConfigError("photonic platform '" + cfg.name() + "' needs the N_q parameter");
    }
    if (cfg.connectivity) {
        cfg.connectivity->build();   // errors on bad sizes / missing files
    }
    if (cfg.photonic) {
        validate(cfg.photonic->device(static_cast<int>(cfg.inventory.params.get("N_q", "photonic device"))));
    }
}

nlohmann::ordered_json to_json(const PlatformConfig& cfg) {
    ordered_json j;
    j["platform_name"] = cfg.inventory.platform_name;
    if (!cfg.citation.empty()) {
        j["citation"] = cfg.citation;
    }
    j["params"] = ordered_json::object();
    for (const auto& [name, value] : cfg.inventory.params.values) {
        j["params"][name] = value;
    }
    j["components"] = ordered_json::array();
    for (const auto& c : cfg.inventory.components) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["group"] = to_string(c.group);
        jc["count"] = count_rule_to_json(c.count);
        jc["unit_power_w"] = c.unit_power_w;
        jc["source_note"] = c.source_note;
        j["components"].push_back(jc);
    }
    ordered_json jt;
    jt["family"] = to_string(cfg.timing.family);
    if (cfg.timing.family != TimingFamily::Photonic) {
        jt["t_reset_s"] = cfg.timing.t_reset_s;
        jt["t_clock_s"] = cfg.timing.t_clock_s;
        jt["t_meas_s"] = cfg.timing.t_meas_s;
    }
    if (cfg.timing.t_reset_passive_s) {
        jt["t_reset_passive_s"] = *cfg.timing.t_reset_passive_s;
    }
    if (cfg.timing.family == TimingFamily::Atom || cfg.timing.family == TimingFamily::Neutral) {
        jt["t_trans_s"] = cfg.timing.t_trans_s;
        jt["beta_trans"] = cfg.timing.beta_trans;
    }
    if (cfg.timing.family == TimingFamily::Neutral) {
        jt["t_reload_s"] = cfg.timing.t_reload_s;
        jt["reload_period_layers"] = cfg.timing.reload_period_layers;
        jt["mode"] = reload_mode_name(cfg.timing.mode);
    }
    j["timing"] = jt;
    if (cfg.connectivity) {
        ordered_json jg;
        jg["family"] = to_string(cfg.connectivity->family);
        switch (cfg.connectivity->family) {
        case GraphFamily::SquareLattice:
        case GraphFamily::HeavyHex:
            jg["rows"] = cfg.connectivity->rows;
            jg["cols"] = cfg.connectivity->cols;
            break;
        case GraphFamily::Custom:
            jg["edge_list"] = cfg.connectivity->edge_list_path;
            break;
        default:
            jg["n"] = cfg.connectivity->n;
            break;
        }
        j["connectivity"] = jg;
    }
    if (cfg.photonic) {
        ordered_json jp;
        jp["efficiencies"] = {{"source", cfg.photonic->efficiencies.source},
                              {"detector", cfg.photonic->efficiencies.detector},
                              {"demux", cfg.photonic->efficiencies.demux}};
        jp["chip"] = {{"name", cfg.photonic->chip.name},
                      {"coupling_loss_db", cfg.photonic->chip.coupling_loss_db},
                      {"mzi_loss_db", cfg.photonic->chip.mzi_loss_db},
                      {"propagation_loss_db_per_cm", cfg.photonic->chip.propagation_loss_db_per_cm},
                      {"element_power_w", cfg.photonic->chip.element_power_w},
                      {"reconfig_time_s", cfg.photonic->chip.reconfig_time_s}};
        jp["n_sources"] = cfg.photonic->n_sources;
        jp["r_source_hz"] = cfg.photonic->source_rate_hz;
        jp["elements_per_mzi"] = cfg.photonic->elements_per_mzi;
        jp["chip_length_cm"] = cfg.photonic->chip_length_cm;
        j["photonic"] = jp;
    }
    return j;
}

PlatformConfig platform_config_from_json(const nlohmann::json& j) {
    PlatformConfig cfg;
    try {
        cfg.inventory.platform_name = j.at("platform_name").get<std::string>();
        cfg.citation = j.contains("citation") ? j.at("citation").get<std::string>() : "";
        if (j.contains("params")) {
            for (const auto& [name, value] : j.at("params").items()) {
                cfg.inventory.params.set(name, value.get<double>());
            }
        }
        for (const auto& jc : j.at("components")) {
            ComponentSpec spec;
            spec.name = jc.at("name").get<std::string>();
            spec.group = component_group_from_string(jc.at("group").get<std::string>());
            spec.count = count_rule_from_json(jc.at("count"));
            spec.unit_power_w = jc.at("unit_power_w").get<double>();
            spec.source_note = jc.contains("source_note") ? jc.at("source_note").get<std::string>() : "";
            cfg.inventory.components.push_back(std::move(spec));
        }
        const auto& jt = j.at("timing");
        cfg.timing.family = timing_family_from_string(jt.at("family").get<std::string>());
        auto opt_num = [&jt](const char* field, double fallback) {
            return jt.contains(field) ? jt.at(field).get<double>() : fallback;
        };
        cfg.timing.t_reset_s = opt_num("t_reset_s", 0.0);
        cfg.timing.t_clock_s = opt_num("t_clock_s", 0.0);
        cfg.timing.t_meas_s = opt_num("t_meas_s", 0.0);
        cfg.timing.t_trans_s = opt_num("t_trans_s", 0.0);
        cfg.timing.beta_trans = opt_num("beta_trans", 0.0);
        cfg.timing.t_reload_s = opt_num("t_reload_s", 0.0);
        if (jt.contains("reload_period_layers")) {
            cfg.timing.reload_period_layers = jt.at("reload_period_layers").get<std::int64_t>();
        }
        if (jt.contains("mode")) {
            cfg.timing.mode = reload_mode_from_string(jt.at("mode").get<std::string>());
        }
        if (jt.contains("t_reset_passive_s")) {
            cfg.timing.t_reset_passive_s = jt.at("t_reset_passive_s").get<double>();
        }
        if (j.contains("connectivity")) {
            const auto& jg = j.at("connectivity");
            ConnectivitySpec spec;
            spec.family = graph_family_from_string(jg.at("family").get<std::string>());
            if (jg.contains("n")) spec.n = jg.at("n").get<int>();
            if (jg.contains("rows")) spec.rows = jg.at("rows").get<int>();
            if (jg.contains("cols")) spec.cols = jg.at("cols").get<int>();
            if (jg.contains("edge_list")) spec.edge_list_path = jg.at("edge_list").get<std::string>();
            cfg.connectivity = spec;
        }
        if (j.contains("photonic")) {
            const auto& jp = j.at("photonic");
            PhotonicSettings settings;
            if (jp.contains("efficiencies")) {
                const auto& je = jp.at("efficiencies");
                settings.efficiencies.source = je.at("source").get<double>();
                settings.efficiencies.detector = je.at("detector").get<double>();
                settings.efficiencies.demux = je.at("demux").get<double>();
            }
            if (jp.contains("chip")) {
                const auto& jc = jp.at("chip");
                settings.chip.name = jc.at("name").get<std::string>();
                settings.chip.coupling_loss_db = jc.at("coupling_loss_db").get<double>();
                settings.chip.mzi_loss_db = jc.at("mzi_loss_db").get<double>();
                settings.chip.propagation_loss_db_per_cm = jc.value("propagation_loss_db_per_cm", 0.0);
                settings.chip.element_power_w = jc.at("element_power_w").get<double>();
                settings.chip.reconfig_time_s = jc.value("reconfig_time_s", 0.0);
            }
            if (jp.contains("n_sources")) settings.n_sources = jp.at("n_sources").get<int>();
            if (jp.contains("r_source_hz")) settings.source_rate_hz = jp.at("r_source_hz").get<double>();
            if (jp.contains("elements_per_mzi")) settings.elements_per_mzi = jp.at("elements_per_mzi").get<double>();
            if (jp.contains("chip_length_cm")) settings.chip_length_cm = jp.at("chip_length_cm").get<double>();
            cfg.photonic = settings;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid platform config: ") + e.what());
    }
    validate_platform_config(cfg);
    return cfg;
}

PlatformConfig load_platform_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("cannot parse '" + path + "': " + e.what());
    }
    return platform_config_from_json(j);
}

void save_platform_config(const PlatformConfig& cfg, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write config file '" + path + "'");
    }
    out << to_json(cfg).dump(2) << "\n";
}

} // namespace qj
