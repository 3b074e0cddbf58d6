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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// A failing criterion also lists its failing checks. Exit status is 0 only
// when all criteria pass.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "oplab/cli/acceptance.hpp"
#include "oplab/random.hpp"

int main(int argc, char **argv) {
    std::uint64_t seed = oplab::kDefaultSeed;
    if (argc > 1) {
        seed = std::strtoull(argv[1], nullptr, 10);
    }
    int failed = 0;
    for (int id = 1; id <= oplab::cli::kCriteriaCount; ++id) {
        oplab::cli::CriterionResult r = oplab::cli::run_criterion(id, seed);
        std::printf("%s\n", oplab::cli::summary_line(r).c_str());
        if (!r.pass()) {
            ++failed;
            for (const auto &c : r.checks) {
                if (!c.pass) {
                    std::printf("       failing check: %s measured %.6g threshold %.6g\n", c.name.c_str(), c.measured,
                                c.threshold);
                }
            }
        }
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", oplab::cli::kCriteriaCount - failed, oplab::cli::kCriteriaCount);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
