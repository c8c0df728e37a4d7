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

#include "qjoule/timing.hpp"

namespace qj {

namespace {

void check_depth(std::int64_t depth) {
    if (depth < 0) {
        throw DomainError("circuit depth must be >= 0");
    }
}

} // namespace

double solid_state_circuit_time(const SolidStateTiming& t, std::int64_t depth) {
    return solid_state_breakdown(t, depth).total_s;
}

CircuitTimeBreakdown solid_state_breakdown(const SolidStateTiming& t, std::int64_t depth) {
    check_depth(depth);
    CircuitTimeBreakdown b;
    b.reset_s = t.t_reset_s;
    b.clock_s = static_cast<double>(depth) * t.t_clock_s;
    b.meas_s = t.t_meas_s;
    b.total_s = b.reset_s + b.clock_s + b.meas_s;
    return b;
}

double multizone_clock(int zones, double base_gate_time_s, double hop_time_s) {
    if (zones < 1) {
        throw DomainError("gate zone count must be >= 1");
    }
    if (zones == 1) {
        return base_gate_time_s;
    }
    return hop_time_s * static_cast<double>(zones - 1);
}

double atom_circuit_time(const AtomTiming& t, std::int64_t depth) {
    return atom_breakdown(t, depth).total_s;
}

CircuitTimeBreakdown atom_breakdown(const AtomTiming& t, std::int64_t depth) {
    check_depth(depth);
    CircuitTimeBreakdown b;
    b.reset_s = t.t_reset_s;
    b.clock_s = static_cast<double>(depth) * t.t_clock_s;
    b.meas_s = t.t_meas_s;
    b.transport_s = t.beta_trans * static_cast<double>(depth) * t.t_trans_s;
    b.total_s = b.reset_s + b.clock_s + b.meas_s + b.transport_s;
    return b;
}

double neutral_circuit_time(const NeutralAtomTiming& t, std::int64_t depth) {
    return neutral_breakdown(t, depth).total_s;
}

CircuitTimeBreakdown neutral_breakdown(const NeutralAtomTiming& t, std::int64_t depth) {
    check_depth(depth);
    if (t.reload_period_layers < 1) {
        throw DomainError("reload period must be >= 1 layer");
    }
    CircuitTimeBreakdown b;
    b.clock_s = static_cast<double>(depth) * t.atom.t_clock_s;
    b.meas_s = t.atom.t_meas_s;
    b.transport_s = t.atom.beta_trans * static_cast<double>(depth) * t.atom.t_trans_s;
    if (t.mode == ReloadMode::PeriodicReload) {
        b.reset_s = t.atom.t_reset_s;
        b.reload_s = t.t_reload_s * static_cast<double>(depth) / static_cast<double>(t.reload_period_layers);
    }
    b.total_s = b.reset_s + b.clock_s + b.meas_s + b.transport_s + b.reload_s;
    return b;
}

double algorithm_time(double circuit_time_s, std::int64_t n_samples) {
    if (n_samples < 1) {
        throw DomainError("number of samples must be >= 1");
    }
    return circuit_time_s * static_cast<double>(n_samples);
}

} // namespace qj
