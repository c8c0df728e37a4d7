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
#include <string>

#include "qjoule/errors.hpp"
#include "qjoule/inventory.hpp"

namespace qj {

// Single-photon-source photonic platform: a quantum-dot source feeds an
// m-mode Clements interferometer mesh (optical depth m) read out by SNSPDs.
// Two optical modes encode one qubit, so m = 2*N_q.

/// End-to-end component efficiencies outside the chip, each in (0, 1].
struct PhotonicEfficiencies {
    double source = 0.712;     // at the fiber output
    double detector = 0.98;    // SNSPD
    double demux = 0.83;       // active demultiplexer
};

/// Loss/power parameters of one mesh technology.
struct ChipTechnology {
    std::string name;
    double coupling_loss_db = 0.0;        // per facet; two facets per chip
    double mzi_loss_db = 0.0;             // per mesh layer traversed
    double propagation_loss_db_per_cm = 0.0;   // off the default loss path
    double element_power_w = 0.0;         // static draw per phase shifter
    double reconfig_time_s = 0.0;         // kept for duty-cycle modeling
};

ChipTechnology glass_mesh_chip();      // thermo-optic glass mesh, 75 mW/element
ChipTechnology eo_ln_chip();           // lithium niobate electro-optic
ChipTechnology eo_bto_chip();          // barium titanate electro-optic
ChipTechnology chip_from_name(const std::string& name);   // glass | eo-ln | eo-bto

struct PhotonicDevice {
    int n_qubits = 1;
    int n_sources = 1;
    double source_rate_hz = 1e9;
    PhotonicEfficiencies efficiencies;
    ChipTechnology chip = glass_mesh_chip();
    /// Phase shifters per MZI; a Clements mesh has m(m-1)/2 MZIs, so the
    /// default of 2 yields m(m-1) powered elements.
    double elements_per_mzi = 2.0;
    /// Optional waveguide length; 0 keeps propagation loss out of the model.
    double chip_length_cm = 0.0;

    int modes() const { return 2 * n_qubits; }
};

void validate(const PhotonicDevice& dev);

/// End-to-end transmission probability for one photon through m mesh layers.
double transmission(const PhotonicDevice& dev, int modes);

/// Average time to produce one sample where all N_q photons survive. When
/// eta(2*N_q)^N_q falls below 1e-300 the result saturates to +infinity with
/// `overflow` set instead of dividing by a denormal.
struct SampleTime {
    double seconds = 0.0;
    bool overflow = false;
};

SampleTime sample_time(const PhotonicDevice& dev);

/// Qubit-count-driven component counts.
struct PhotonicCounts {
    std::int64_t cryostats = 0;        // ceil(2*N_q / 25): 1 source + 25 SNSPDs each
    std::int64_t demultiplexers = 0;   // ceil(N_q / 12): DMX-12 units
    std::int64_t fpga_units = 0;       // ceil((2*N_q)^2 / 16): 16 channels per FPGA
    std::int64_t mesh_elements = 0;    // powered phase shifters in the mesh
};

PhotonicCounts component_counts(int n_qubits, double elements_per_mzi = 2.0);

/// The device's component table in platform-inventory form, with counts as
/// rules over the N_q parameter so qubit sweeps re-evaluate them.
PlatformInventory photonic_inventory(const PhotonicDevice& dev);

/// Total power draw, aggregated through the generated inventory.
double photonic_power(const PhotonicDevice& dev);

/// One fully evaluated photonic operating point.
struct PhotonicPoint {
    int n_qubits = 0;
    int modes = 0;
    double eta = 0.0;
    double sample_time_s = 0.0;
    double power_w = 0.0;
    double ee_per_j = 0.0;
    bool overflow = false;
};

PhotonicPoint evaluate_photonic(const PhotonicDevice& dev, std::int64_t n_samples);

/// EE = 1 / (N_samples * t_sample * P); zero with overflow upstream.
double photonic_ee(const PhotonicDevice& dev, std::int64_t n_samples);

} // namespace qj
