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

#include "qjoule/efficiency.hpp"

#include "qjoule/timing.hpp"

#include <cmath>

namespace qj {

double energy_efficiency(double t_alg_s, double power_w) {
    if (!(t_alg_s > 0.0)) {
        throw DomainError("algorithm time must be > 0");
    }
    if (!(power_w > 0.0)) {
        throw DomainError("power must be > 0");
    }
    return 1.0 / (t_alg_s * power_w);
}

double n_algorithms(double t_window_s, double t_alg_s, bool floor_mode) {
    if (!(t_alg_s > 0.0)) {
        throw DomainError("algorithm time must be > 0");
    }
    if (t_window_s < 0.0 || std::isnan(t_window_s)) {
        throw DomainError("time window must be >= 0");
    }
    const double n = t_window_s / t_alg_s;
    return floor_mode ? std::floor(n) : n;
}

EfficiencyResult make_efficiency_result(std::string platform_name, std::int64_t depth,
                                        std::int64_t n_samples, double t_circuit_s, double power_w) {
    EfficiencyResult r;
    r.platform_name = std::move(platform_name);
    r.depth = depth;
    r.n_samples = n_samples;
    r.t_circuit_s = t_circuit_s;
    r.t_alg_s = algorithm_time(t_circuit_s, n_samples);
    r.power_w = power_w;
    r.ee_per_j = energy_efficiency(r.t_alg_s, power_w);
    return r;
}

double ee_ratio(const EfficiencyResult& a, const EfficiencyResult& b) {
    return a.ee_per_j / b.ee_per_j;
}

} // namespace qj
