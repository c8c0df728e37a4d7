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

namespace qj {

inline constexpr double kSecondsPerDay = 86400.0;

/// Headline metric: algorithms per joule, EE = 1 / (t_alg * P).
/// Both inputs must be positive.
double energy_efficiency(double t_alg_s, double power_w);

/// Algorithm executions that fit in a time window: t / t_alg. Partial
/// executions count by default; floor_mode rounds them away.
double n_algorithms(double t_window_s, double t_alg_s, bool floor_mode = false);

/// One platform/circuit operating point with its derived metrics.
struct EfficiencyResult {
    std::string platform_name;
    std::int64_t depth = 0;
    std::int64_t n_samples = 1;
    double t_circuit_s = 0.0;
    double t_alg_s = 0.0;
    double power_w = 0.0;
    double ee_per_j = 0.0;

    double n_in_window(double t_window_s) const { return n_algorithms(t_window_s, t_alg_s); }
};

EfficiencyResult make_efficiency_result(std::string platform_name, std::int64_t depth,
                                        std::int64_t n_samples, double t_circuit_s, double power_w);

/// a.ee / b.ee, i.e. (t_b * P_b) / (t_a * P_a).
double ee_ratio(const EfficiencyResult& a, const EfficiencyResult& b);

} // namespace qj
