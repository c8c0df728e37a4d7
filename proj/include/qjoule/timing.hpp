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

#include "qjoule/errors.hpp"

namespace qj {

// Circuit execution time models. All times are seconds; depth D counts
// circuit layers after compilation.

/// Superconducting / spin-qubit timing: t = t_reset + D*t_clock + t_meas.
struct SolidStateTiming {
    double t_reset_s = 0.0;
    double t_clock_s = 0.0;
    double t_meas_s = 0.0;
};

double solid_state_circuit_time(const SolidStateTiming& t, std::int64_t depth);

/// Clock time of a multi-zone trapped-ion device with zones laid out in a
/// line: populating the farthest zone dominates, so the clock is
/// hop_time * (zones - 1); a single-zone device is gate-time limited.
double multizone_clock(int zones, double base_gate_time_s = 170e-6, double hop_time_s = 250e-6);

/// Atom-based timing (trapped ions): solid-state terms plus transport,
/// t = t_reset + D*t_clock + t_meas + beta*D*t_trans.
struct AtomTiming {
    double t_reset_s = 0.0;
    double t_clock_s = 0.0;
    double t_meas_s = 0.0;
    double t_trans_s = 0.0;
    double beta_trans = 0.0;   // fraction of layers needing transport, in [0, 1]
};

double atom_circuit_time(const AtomTiming& t, std::int64_t depth);

enum class ReloadMode {
    PeriodicReload,     // register refilled every reload_period_layers layers
    ContinuousReload,   // register refilled during computation
};

/// Neutral-atom timing: atom-based terms plus the amortized register reload,
/// t_reload * D / reload_period_layers. In continuous-reload mode the reset
/// and reload terms vanish.
struct NeutralAtomTiming {
    AtomTiming atom;
    double t_reload_s = 0.0;
    std::int64_t reload_period_layers = 2400;
    ReloadMode mode = ReloadMode::PeriodicReload;
};

double neutral_circuit_time(const NeutralAtomTiming& t, std::int64_t depth);

/// Contribution of each term to one circuit execution; used by the CLI
/// per-term breakdown.
struct CircuitTimeBreakdown {
    double reset_s = 0.0;
    double clock_s = 0.0;
    double meas_s = 0.0;
    double transport_s = 0.0;
    double reload_s = 0.0;
    double total_s = 0.0;
};

CircuitTimeBreakdown solid_state_breakdown(const SolidStateTiming& t, std::int64_t depth);
CircuitTimeBreakdown atom_breakdown(const AtomTiming& t, std::int64_t depth);
CircuitTimeBreakdown neutral_breakdown(const NeutralAtomTiming& t, std::int64_t depth);

/// A compiled circuit plus its shot count.
struct AlgorithmSpec {
    std::int64_t depth = 1;
    std::int64_t n_samples = 1;
};

/// Total algorithm time: t_circuit * N_samples.
double algorithm_time(double circuit_time_s, std::int64_t n_samples);

} // namespace qj
