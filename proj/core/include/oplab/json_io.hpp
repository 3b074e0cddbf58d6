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

// JSON encodings of the library's inputs.
//
//   matrix     {"dim": n, "data": [[re, im], ...]}   n*n entries, row-major;
//              a bare number is accepted for a real entry
//   state      {"dim": n, "rho": matrix}
//   subalgebra {"ambient_dim": n, "generators": [matrix, ...]}
//   fock       {"d": int, "n_max": int, "statistics": "bose" | "fermi"}
//   quadruple  {"dim": n, "a1": matrix, "a2": matrix, "b1": matrix, "b2": matrix}
//   site       {"points": [[t, x], ...]}
//   region     [point index, ...]
//
// Decoders throw Error(Schema) with a message naming the offending field.

#include <string>

#include <nlohmann/json.hpp>

#include "oplab/bell.hpp"
#include "oplab/fock.hpp"
#include "oplab/matcore.hpp"
#include "oplab/net.hpp"
#include "oplab/state.hpp"

namespace oplab {

using Json = nlohmann::json;

Json matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const Json &j, const std::string &field);

Json state_to_json(const State &s);
/// Also throws InvalidState when rho is not a density matrix.
State state_from_json(const Json &j, const std::string &field);

struct SubalgebraSpec {
    Index ambient_dim;
    std::vector<CMatrix> generators;
};

SubalgebraSpec subalgebra_from_json(const Json &j, const std::string &field);

struct FockConfig {
    Index d;
    Index n_max;
    Statistics statistics;
};

Json fock_config_to_json(const FockConfig &c);
FockConfig fock_config_from_json(const Json &j, const std::string &field);

Json quadruple_to_json(const AdmissibleQuadruple &q);
AdmissibleQuadruple quadruple_from_json(const Json &j, const std::string &field);

Json site_to_json(const CausalSite &site);
CausalSite site_from_json(const Json &j, const std::string &field);
Region region_from_json(const CausalSite &site, const Json &j, const std::string &field);

/// Reads and parses a file. Throws Error(Schema) when it cannot.
Json read_json_file(const std::string &path);

}  // namespace oplab
