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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "oplab/cli/report.hpp"
#include "oplab/random.hpp"

namespace oplab::cli {

enum class Output { text, json };

struct RunConfig {
    std::string subcommand;  // spectra, gns, modular, bell, fock, net, selftest
    std::string input_path;  // empty: built-in default input
    Output output = Output::text;
    std::uint64_t seed = kDefaultSeed;
    /// NAME=VALUE strings, applied in order.
    std::vector<std::string> tolerance_overrides;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;

const std::vector<std::string> &subcommands();

/// Builds the report for a subcommand. Throws Error(Schema) and other input
/// errors; check failures are recorded in the report.
Report build_report(const RunConfig &cfg);

/// Runs a subcommand, writes the report to `out` and diagnostics to `err`,
/// and returns the exit code.
int run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

}  // namespace oplab::cli
