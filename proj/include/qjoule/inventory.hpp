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

#include <map>
#include <string>
#include <optional>
#include <vector>

#include "qjoule/errors.hpp"

namespace qj {

/// Purpose group of a hardware component, used for power breakdowns.
enum class ComponentGroup {
    Cooling,
    EnvironmentalConditions,
    QubitControl,
    ClassicalProcessing,
};

std::string to_string(ComponentGroup g);
ComponentGroup component_group_from_string(const std::string& s);

/// Named non-negative platform parameters (N_q, N_R, N_zones, N_control, ...).
struct PlatformParams {
    std::map<std::string, double> values;

    double get(const std::string& name, const std::string& where) const;
    bool has(const std::string& name) const { return values.count(name) > 0; }
    void set(const std::string& name, double v) { values[name] = v; }
};

/// Closed-form count of a hardware component as a function of one platform
/// parameter. The supported shapes cover every component table in the preset
/// catalog:
///
///   constant     k
///   linear       a*p + b
///   linear_sqrt  a*p + b*sqrt(p) + c
///   quadratic    a2*p^2 + a1*p + a0
///   ceil_ratio   ceil((num_linear*p + num_quadratic*p^2) / denom)
///   ceil_sqrt    a*ceil(sqrt(scale*p)) + b
///
/// Ceiling forms always evaluate to integers; every form must evaluate to a
/// non-negative number for the parameters it is used with.
struct CountRule {
    enum class Kind { Constant, Linear, LinearSqrt, Quadratic, CeilRatio, CeilSqrt };

    Kind kind = Kind::Constant;
    std::string param;       // unused for Kind::Constant
    double a = 0.0;          // k / a / a / a2 / num_linear / a
    double b = 0.0;          //     b / b / a1 / num_quadratic / b
    double c = 0.0;          //         c / a0
    double denom = 1.0;      // ceil_ratio only
    double scale = 1.0;      // ceil_sqrt only

    static CountRule constant(double k);
    static CountRule linear(std::string param, double a, double b = 0.0);
    static CountRule linear_sqrt(std::string param, double a, double b, double c = 0.0);
    static CountRule quadratic(std::string param, double a2, double a1, double a0 = 0.0);
    static CountRule ceil_ratio(std::string param, double num_linear, double num_quadratic, double denom);
    static CountRule ceil_sqrt(std::string param, double scale, double a, double b = 0.0);

    /// Evaluates the rule. Throws ConfigError when the referenced parameter is
    /// absent and DomainError when the result is negative.
    double evaluate(const PlatformParams& params, const std::string& component_name) const;
};

/// One row of a hardware component table.
struct ComponentSpec {
    std::string name;
    ComponentGroup group = ComponentGroup::QubitControl;
    CountRule count;
    double unit_power_w = 0.0;
    std::string source_note;
};

/// A platform's full component list plus the parameters its count rules need.
struct PlatformInventory {
    std::string platform_name;
    std::vector<ComponentSpec> components;
    PlatformParams params;
};

/// A component table evaluated at concrete parameter values.
struct InstantiatedComponent {
    std::string name;
    ComponentGroup group;
    double count;
    double subtotal_w;
};

struct GroupShare {
    double watts = 0.0;
    std::optional<double> fraction;   // absent when total power is zero
};

/// Evaluates every count rule; preserves component order.
std::vector<InstantiatedComponent> instantiate(const PlatformInventory& inv);

/// Total power draw in watts: sum of count * unit_power over all components.
double total_power(const PlatformInventory& inv);

/// Per-group watts and fraction of the total.
std::map<ComponentGroup, GroupShare> breakdown_by_group(const PlatformInventory& inv);

/// Energy consumed by the platform over a time window: t * P. t must be >= 0.
double energy_in_window(const PlatformInventory& inv, double seconds);

/// Structural checks used by `validate`: unique non-empty component names,
/// non-negative unit powers and parameters, count rules that evaluate.
/// Throws ConfigError/DomainError on the first violation.
void validate_inventory(const PlatformInventory& inv);

} // namespace qj
