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

#include "qjoule/photonics.hpp"

#include <cmath>
#include <limits>

namespace qj {

ChipTechnology glass_mesh_chip() {
    return {"glass", 0.5, 0.1, 0.3, 0.075, 1e-6};
}

ChipTechnology eo_ln_chip() {
    return {"eo-ln", 3.4, 0.15, 0.025, 60e-6, 44e-12};
}

ChipTechnology eo_bto_chip() {
    return {"eo-bto", 0.127, 0.21, 0.016, 121e-9, 145e-12};
}

ChipTechnology chip_from_name(const std::string& name) {
    if (name == "glass") return glass_mesh_chip();
    if (name == "eo-ln" || name == "eo_ln") return eo_ln_chip();
    if (name == "eo-bto" || name == "eo_bto") return eo_bto_chip();
    throw ConfigError("unknown chip technology '" + name + "' (expected glass, eo-ln or eo-bto)");
}

void validate(const PhotonicDevice& dev) {
    if (dev.n_qubits < 1) {
        throw DomainError("photonic device needs at least one qubit");
    }
    if (dev.n_sources < 1) {
        throw DomainError("photonic device needs at least one source");
    }
    if (!(dev.source_rate_hz > 0.0)) {
        throw DomainError("source rate must be > 0");
    }
    auto in_unit = [](double x) { return x > 0.0 && x <= 1.0; };
    if (!in_unit(dev.efficiencies.source) || !in_unit(dev.efficiencies.detector) ||
        !in_unit(dev.efficiencies.demux)) {
        throw DomainError("photonic efficiencies must be in (0, 1]");
    }
    if (dev.chip.coupling_loss_db < 0.0 || dev.chip.mzi_loss_db < 0.0 ||
        dev.chip.element_power_w < 0.0) {
        throw DomainError("chip loss and power coefficients must be >= 0");
    }
}

double transmission(const PhotonicDevice& dev, int modes) {
    if (modes < 0) {
        throw DomainError("mode count must be >= 0");
    }
    const double fixed = dev.efficiencies.source * dev.efficiencies.detector * dev.efficiencies.demux;
    double loss_db = 2.0 * dev.chip.coupling_loss_db + static_cast<double>(modes) * dev.chip.mzi_loss_db;
    if (dev.chip_length_cm > 0.0) {
        loss_db += dev.chip_length_cm * dev.chip.propagation_loss_db_per_cm;
    }
    return fixed * std::pow(10.0, -loss_db / 10.0);
}

SampleTime sample_time(const PhotonicDevice& dev) {
    validate(dev);
    const double eta = transmission(dev, dev.modes());
    // log-space check before forming eta^-N_q; below 1e-300 the division is
    // meaningless denormal arithmetic, so saturate.
    const double log10_survival = static_cast<double>(dev.n_qubits) * std::log10(eta);
    if (log10_survival < -300.0) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    const double base = static_cast<double>(dev.n_qubits) / (static_cast<double>(dev.n_sources) * dev.source_rate_hz);
    const double seconds = base * std::pow(eta, -static_cast<double>(dev.n_qubits));
    if (!std::isfinite(seconds)) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    return {seconds, false};
}

PhotonicCounts component_counts(int n_qubits, double elements_per_mzi) {
    if (n_qubits < 1) {
        throw DomainError("photonic device needs at least one qubit");
    }
    const double nq = static_cast<double>(n_qubits);
    const double m = 2.0 * nq;
    PhotonicCounts c;
    c.cryostats = static_cast<std::int64_t>(std::ceil(2.0 * nq / 25.0));
    c.demultiplexers = static_cast<std::int64_t>(std::ceil(nq / 12.0));
    c.fpga_units = static_cast<std::int64_t>(std::ceil(m * m / 16.0));
    c.mesh_elements = static_cast<std::int64_t>(std::llround(elements_per_mzi * m * (m - 1.0) / 2.0));
    return c;
}

PlatformInventory photonic_inventory(const PhotonicDevice& dev) {
    validate(dev);
    PlatformInventory inv;
    inv.platform_name = "photonic-" + dev.chip.name;
    inv.params.set("N_q", static_cast<double>(dev.n_qubits));
    const double epm = dev.elements_per_mzi;
    inv.components = {
        {"Laser", ComponentGroup::QubitControl,
         CountRule::constant(1), 4.0, "shared pump for the quantum dot sources"},
        {"Cryogenic system (source + SNSPDs)", ComponentGroup::Cooling,
         CountRule::ceil_ratio("N_q", 2.0, 0.0, 25.0), 1500.0,
         "one cryostat per quantum dot source and 25 detectors"},
        {"Peltier chip cooler", ComponentGroup::Cooling,
         CountRule::constant(1), 250.0, "chip temperature stabilization, 200-300 W range midpoint"},
        {"Demultiplexer (DMX-12)", ComponentGroup::QubitControl,
         CountRule::ceil_ratio("N_q", 1.0, 0.0, 12.0), 50.0,
         "active demultiplexer, 12 outputs per unit"},
        {"Mesh phase shifters", ComponentGroup::QubitControl,
         CountRule::quadratic("N_q", 2.0 * epm, -epm), dev.chip.element_power_w,
         "static draw of the Clements mesh (" + dev.chip.name + ")"},
        {"Control electronics (FPGA/DAC)", ComponentGroup::ClassicalProcessing,
         CountRule::ceil_ratio("N_q", 0.0, 4.0, 16.0), 15.0,
         "16 control channels per FPGA"},
        {"Classical computer", ComponentGroup::ClassicalProcessing,
         CountRule::constant(1), 150.0, "orchestration workstation"},
    };
    return inv;
}

double photonic_power(const PhotonicDevice& dev) {
    return total_power(photonic_inventory(dev));
}

PhotonicPoint evaluate_photonic(const PhotonicDevice& dev, std::int64_t n_samples) {
    if (n_samples < 1) {
        throw DomainError("number of samples must be >= 1");
    }
    PhotonicPoint p;
    p.n_qubits = dev.n_qubits;
    p.modes = dev.modes();
    p.eta = transmission(dev, p.modes);
    const SampleTime t = sample_time(dev);
    p.sample_time_s = t.seconds;
    p.overflow = t.overflow;
    p.power_w = photonic_power(dev);
    p.ee_per_j = p.overflow ? 0.0
                            : 1.0 / (static_cast<double>(n_samples) * p.sample_time_s * p.power_w);
    return p;
}

double photonic_ee(const PhotonicDevice& dev, std::int64_t n_samples) {
    return evaluate_photonic(dev, n_samples).ee_per_j;
}

} // namespace qj
