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

#include "qjoule/inventory.hpp"

#include <cmath>
#include <set>

namespace qj {

std::string to_string(ComponentGroup g) {
    switch (g) {
    case ComponentGroup::Cooling: return "cooling";
    case ComponentGroup::EnvironmentalConditions: return "environmental_conditions";
    case ComponentGroup::QubitControl: return "qubit_control";
    case ComponentGroup::ClassicalProcessing: return "classical_processing";
    }
    throw DomainError("unknown component group");
}

ComponentGroup component_group_from_string(const std::string& s) {
    if (s == "cooling") return ComponentGroup::Cooling;
    if (s == "environmental_conditions") return ComponentGroup::EnvironmentalConditions;
    if (s == "qubit_control") return ComponentGroup::QubitControl;
    if (s == "classical_processing") return ComponentGroup::ClassicalProcessing;
    throw ConfigError("unknown component group '" + s + "'");
}

double PlatformParams::get(const std::string& name, const std::string& where) const {
    auto it = values.find(name);
    if (it == values.end()) {
        throw missing_parameter(name, where);
    }
    return it->second;
}

CountRule CountRule::constant(double k) {
    CountRule r;
    r.kind = Kind::Constant;
    r.a = k;
    return r;
}

CountRule CountRule::linear(std::string param, double a, double b) {
    CountRule r;
    r.kind = Kind::Linear;
    r.param = std::move(param);
    r.a = a;
    r.b = b;
    return r;
}

CountRule CountRule::linear_sqrt(std::string param, double a, double b, double c) {
    CountRule r;
    r.kind = Kind::LinearSqrt;
    r.param = std::move(param);
    r.a = a;
    r.b = b;
    r.c = c;
    return r;
}

CountRule CountRule::quadratic(std::string param, double a2, double a1, double a0) {
    CountRule r;
    r.kind = Kind::Quadratic;
    r.param = std::move(param);
    r.a = a2;
    r.b = a1;
    r.c = a0;
    return r;
}

CountRule CountRule::ceil_ratio(std::string param, double num_linear, double num_quadratic, double denom) {
    CountRule r;
    r.kind = Kind::CeilRatio;
    r.param = std::move(param);
    r.a = num_linear;
    r.b = num_quadratic;
    r.denom = denom;
    return r;
}

CountRule CountRule::ceil_sqrt(std::string param, double scale, double a, double b) {
    CountRule r;
    r.kind = Kind::CeilSqrt;
    r.param = std::move(param);
    r.scale = scale;
    r.a = a;
    r.b = b;
    return r;
}

double CountRule::evaluate(const PlatformParams& params, const std::string& component_name) const {
    const std::string where = "count rule of component '" + component_name + "'";
    double value = 0.0;
    switch (kind) {
    case Kind::Constant:
        value = a;
        break;
    case Kind::Linear: {
        const double p = params.get(param, where);
        value = a * p + b;
        break;
    }
    case Kind::LinearSqrt: {
        const double p = params.get(param, where);
        value = a * p + b * std::sqrt(p) + c;
        break;
    }
    case Kind::Quadratic: {
        const double p = params.get(param, where);
        value = a * p * p + b * p + c;
        break;
    }
    case Kind::CeilRatio: {
        const double p = params.get(param, where);
        if (denom == 0.0) {
            throw DomainError(where + ": zero denominator");
        }
        value = std::ceil((a * p + b * p * p) / denom);
        break;
    }
    case Kind::CeilSqrt: {
        const double p = params.get(param, where);
        value = a * std::ceil(std::sqrt(scale * p)) + b;
        break;
    }
    }
    if (value < 0.0 || std::isnan(value)) {
        throw DomainError(where + " evaluated to a negative count");
    }
    return value;
}

std::vector<InstantiatedComponent> instantiate(const PlatformInventory& inv) {
    std::vector<InstantiatedComponent> rows;
    rows.reserve(inv.components.size());
    for (const auto& spec : inv.components) {
        const double count = spec.count.evaluate(inv.params, spec.name);
        rows.push_back({spec.name, spec.group, count, count * spec.unit_power_w});
    }
    return rows;
}

double total_power(const PlatformInventory& inv) {
    double total = 0.0;
    for (const auto& row : instantiate(inv)) {
        total += row.subtotal_w;
    }
    return total;
}

std::map<ComponentGroup, GroupShare> breakdown_by_group(const PlatformInventory& inv) {
    std::map<ComponentGroup, GroupShare> shares;
    double total = 0.0;
    for (const auto& row : instantiate(inv)) {
        shares[row.group].watts += row.subtotal_w;
        total += row.subtotal_w;
    }
    if (total > 0.0) {
        for (auto& [group, share] : shares) {
            share.fraction = share.watts / total;
        }
    }
    return shares;
}

double energy_in_window(const PlatformInventory& inv, double seconds) {
    if (seconds < 0.0 || std::isnan(seconds)) {
        throw DomainError("time window must be non-negative");
    }
    return seconds * total_power(inv);
}

void validate_inventory(const PlatformInventory& inv) {
    std::set<std::string> names;
    for (const auto& spec : inv.components) {
        if (spec.name.empty()) {
            throw ConfigError("inventory '" + inv.platform_name + "' has a component with an empty name");
        }
        if (!names.insert(spec.name).second) {
            throw ConfigError("inventory '" + inv.platform_name + "' has duplicate component '" + spec.name + "'");
        }
        if (spec.unit_power_w < 0.0 || std::isnan(spec.unit_power_w)) {
            throw ConfigError("component '" + spec.name + "' has a negative unit power");
        }
    }
    for (const auto& [name, value] : inv.params.values) {
        if (value < 0.0 || std::isnan(value)) {
            throw ConfigError("parameter '" + name + "' must be non-negative");
        }
        // count-like parameters are whole numbers
        static const std::set<std::string> integral = {"N_q", "N_R", "N_zones", "N_control", "N_lines"};
        if (integral.count(name) > 0 && value != std::floor(value)) {
            throw ConfigError("parameter '" + name + "' must be an integer");
        }
    }
    const double total = total_power(inv);   // also exercises every count rule
    if (!std::isfinite(total)) {
        throw DomainError("inventory '" + inv.platform_name + "' has a non-finite total power");
    }
}

} // namespace qj
