// Copyright 2026 The oplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Verification reports: a list of named checks, each with a measured value,
// a threshold and a verdict, plus free-form data. Numbers are rounded to 15
// significant digits when they enter the report, so the JSON rendering and
// its parse are exactly the in-memory values.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace oplab::cli {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rounds to 15 significant digits; non-finite values pass through.
double round15(double x);

enum class Comparison { at_most, at_least, equals };

struct Check {
    std::string name;
    std::string anchor;  // the identity or property being tested
    double measured = 0.0;
    double threshold = 0.0;
    Comparison comparison = Comparison::at_most;
    bool pass = false;

    bool operator==(const Check &) const = default;
};

struct ToleranceOverride {
    std::string name;
    double value;

    bool operator==(const ToleranceOverride &) const = default;
};

struct Report {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::vector<ToleranceOverride> tolerance_overrides;
    std::vector<Check> checks;
    OrderedJson data = OrderedJson::object();

    /// measured <= threshold.
    void at_most(const std::string &name, const std::string &anchor, double measured, double threshold);
    /// measured >= threshold.
    void at_least(const std::string &name, const std::string &anchor, double measured, double threshold);
    /// measured == expected, exactly (after rounding).
    void equals(const std::string &name, const std::string &anchor, double measured, double expected);
    /// Boolean verdict, recorded as 1 or 0 against 1.
    void holds(const std::string &name, const std::string &anchor, bool verdict);
    /// Stores a number in data after rounding.
    void put(const std::string &key, double value);
    /// Stores a JSON value in data after rounding every number inside it.
    void put_json(const std::string &key, const OrderedJson &value);

    bool passed() const;
    bool operator==(const Report &) const = default;
};

/// Recursively rounds every floating-point number in a JSON value.
OrderedJson rounded(const OrderedJson &j);

OrderedJson to_json(const Report &r);
/// Throws Error(Schema) on malformed input.
Report report_from_json(const OrderedJson &j);

std::string render_json(const Report &r);
std::string render_text(const Report &r);

}  // namespace oplab::cli
