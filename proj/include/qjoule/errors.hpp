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

#include <stdexcept>
#include <string>

namespace qj {

/// Base class for all qjoule errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent configuration: unknown presets, schema
/// violations, missing parameters, invalid ranges. CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A value outside the mathematical domain of an operation
/// (negative time window, zero gate zones, non-positive power, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numeric overflow, e.g. photonic sampling time past the double range.
/// CLI exit code 3.
class OverflowError : public Error {
public:
    using Error::Error;
};

inline ConfigError missing_parameter(const std::string& param, const std::string& where) {
    return ConfigError("missing parameter '" + param + "' required by " + where);
}

} // namespace qj
