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

#include "oplab/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "oplab/errors.hpp"

namespace oplab::cli {

double round15(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

namespace {

const char *comparison_name(Comparison c) {
    switch (c) {
    case Comparison::at_most:
        return "<=";
    case Comparison::at_least:
        return ">=";
    default:
        return "==";
    }
}

Comparison comparison_from(const std::string &s) {
    if (s == "<=") {
        return Comparison::at_most;
    }
    if (s == ">=") {
        return Comparison::at_least;
    }
    if (s == "==") {
        return Comparison::equals;
    }
    throw Error(ErrorKind::Schema, "field 'checks[].comparison': unknown operator " + s);
}

OrderedJson number(double x) {
    if (std::isfinite(x)) {
        return round15(x);
    }
    if (std::isnan(x)) {
        return "nan";
    }
    return x > 0 ? "inf" : "-inf";
}

double number_from(const OrderedJson &j, const char *field) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j == "inf") {
        return INFINITY;
    }
    if (j == "-inf") {
        return -INFINITY;
    }
    if (j == "nan") {
        return NAN;
    }
    throw Error(ErrorKind::Schema, std::string("field '") + field + "': expected a number");
}

const OrderedJson &get(const OrderedJson &j, const char *key, const char *field) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::Schema, std::string("field '") + field + "': missing");
    }
    return j.at(key);
}

}  // namespace

void Report::at_most(const std::string &name, const std::string &anchor, double measured, double threshold) {
    double m = round15(measured);
    double t = round15(threshold);
    checks.push_back({name, anchor, m, t, Comparison::at_most, m <= t});
}

void Report::at_least(const std::string &name, const std::string &anchor, double measured, double threshold) {
    double m = round15(measured);
    double t = round15(threshold);
    checks.push_back({name, anchor, m, t, Comparison::at_least, m >= t});
}

void Report::equals(const std::string &name, const std::string &anchor, double measured, double expected) {
    double m = round15(measured);
    double t = round15(expected);
    checks.push_back({name, anchor, m, t, Comparison::equals, m == t});
}

void Report::holds(const std::string &name, const std::string &anchor, bool verdict) {
    checks.push_back({name, anchor, verdict ? 1.0 : 0.0, 1.0, Comparison::equals, verdict});
}

void Report::put(const std::string &key, double value) {
    data[key] = number(value);
}

void Report::put_json(const std::string &key, const OrderedJson &value) {
    data[key] = rounded(value);
}

bool Report::passed() const {
    for (const auto &c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

OrderedJson rounded(const OrderedJson &j) {
    if (j.is_number_float()) {
        return number(j.get<double>());
    }
    if (j.is_array() || j.is_object()) {
        OrderedJson out = j;
        for (auto it = out.begin(); it != out.end(); ++it) {
            *it = rounded(*it);
        }
        return out;
    }
    return j;
}

OrderedJson to_json(const Report &r) {
    OrderedJson out;
    out["schema_version"] = kSchemaVersion;
    out["subcommand"] = r.subcommand;
    out["seed"] = r.seed;
    out["passed"] = r.passed();
    OrderedJson overrides = OrderedJson::array();
    for (const auto &o : r.tolerance_overrides) {
        overrides.push_back(OrderedJson{{"name", o.name}, {"value", number(o.value)}});
    }
    out["tolerance_overrides"] = overrides;
    OrderedJson checks = OrderedJson::array();
    for (const auto &c : r.checks) {
        OrderedJson e;
        e["name"] = c.name;
        e["anchor"] = c.anchor;
        e["measured"] = number(c.measured);
        e["comparison"] = comparison_name(c.comparison);
        e["threshold"] = number(c.threshold);
        e["pass"] = c.pass;
        checks.push_back(e);
    }
    out["checks"] = checks;
    out["data"] = rounded(r.data);
    return out;
}

Report report_from_json(const OrderedJson &j) {
    if (get(j, "schema_version", "schema_version") != kSchemaVersion) {
        throw Error(ErrorKind::Schema, "field 'schema_version': unsupported version");
    }
    Report r;
    r.subcommand = get(j, "subcommand", "subcommand").get<std::string>();
    r.seed = get(j, "seed", "seed").get<std::uint64_t>();
    for (const auto &o : get(j, "tolerance_overrides", "tolerance_overrides")) {
        r.tolerance_overrides.push_back({get(o, "name", "tolerance_overrides[].name").get<std::string>(),
                                         number_from(get(o, "value", "tolerance_overrides[].value"),
                                                     "tolerance_overrides[].value")});
    }
    for (const auto &e : get(j, "checks", "checks")) {
        Check c;
        c.name = get(e, "name", "checks[].name").get<std::string>();
        c.anchor = get(e, "anchor", "checks[].anchor").get<std::string>();
        c.measured = number_from(get(e, "measured", "checks[].measured"), "checks[].measured");
        c.comparison = comparison_from(get(e, "comparison", "checks[].comparison").get<std::string>());
        c.threshold = number_from(get(e, "threshold", "checks[].threshold"), "checks[].threshold");
        c.pass = get(e, "pass", "checks[].pass").get<bool>();
        r.checks.push_back(c);
    }
    r.data = get(j, "data", "data");
    return r;
}

std::string render_json(const Report &r) {
    return to_json(r).dump(2) + "\n";
}

std::string render_text(const Report &r) {
    std::ostringstream out;
    out << r.subcommand << " (seed " << r.seed << ")\n";
    for (const auto &o : r.tolerance_overrides) {
        out << "  tolerance " << o.name << " = " << o.value << "\n";
    }
    char line[512];
    for (const auto &c : r.checks) {
        std::snprintf(line, sizeof line, "  [%s] %-40s %.6g %s %.6g  (%s)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                      c.measured, comparison_name(c.comparison), c.threshold, c.anchor.c_str());
        out << line;
    }
    if (!r.data.empty()) {
        out << "  data: " << rounded(r.data).dump() << "\n";
    }
    out << (r.passed() ? "all checks passed\n" : "some checks failed\n");
    return out.str();
}

}  // namespace oplab::cli
