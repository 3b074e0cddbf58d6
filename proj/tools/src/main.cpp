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

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "oplab/cli/cli.hpp"

int main(int argc, char **argv) {
    using namespace oplab::cli;
    CLI::App app{"oplab: finite-dimensional operator-algebra verification"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string output = "text";
    const std::map<std::string, std::string> help{
        {"spectra", "spectra, spectral mapping, radius formula and square roots of a matrix"},
        {"gns", "GNS representation of a state"},
        {"modular", "modular data of a faithful state in its purification"},
        {"bell", "CHSH values, bounds and optimization"},
        {"fock", "Fock space relations and Weyl operators"},
        {"net", "local net axioms on a causal site"},
        {"selftest", "run the full acceptance suite"},
    };
    for (const std::string &name : subcommands()) {
        CLI::App *sub = app.add_subcommand(name, help.at(name));
        sub->add_option("--input", cfg.input_path, "JSON input file (built-in example when omitted)");
        sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", cfg.seed, "seed for random instances");
        sub->add_option("--tol", cfg.tolerance_overrides, "override a named tolerance, NAME=VALUE (repeatable)");
        sub->callback([&cfg, name] { cfg.subcommand = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }
    cfg.output = output == "json" ? Output::json : Output::text;
    return run(cfg, std::cout, std::cerr);
}
