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

// The acceptance suite: twelve end-to-end criteria, each a group of checks
// over seeded random instances.

#include <cstdint>
#include <string>
#include <vector>

#include "oplab/cli/report.hpp"
#include "oplab/tolerances.hpp"

namespace oplab::cli {

inline constexpr int kCriteriaCount = 12;

struct CriterionResult {
    int id;
    std::string title;
    std::vector<Check> checks;
    double seconds;

    bool pass() const;
};

/// Runs criterion `id` (1-based). Throws InvalidArgument for an unknown id.
CriterionResult run_criterion(int id, std::uint64_t seed, const Tolerances &tol = default_tolerances());
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const Tolerances &tol = default_tolerances());

/// One line: "[PASS] 7 title (2 checks, 0.31 s)".
std::string summary_line(const CriterionResult &r);

}  // namespace oplab::cli
