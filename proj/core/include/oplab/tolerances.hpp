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

#include <string>
#include <string_view>
#include <vector>

namespace oplab {

/// Named numerical thresholds shared by every module.
///
/// Defaults live in `default_tolerances()`. The command-line tool overrides
/// individual entries by name (`--tol NAME=VALUE`); the accepted names are
/// exactly those returned by `Tolerances::names()`.
struct Tolerances {
    /// ||a - a*|| <= hermiticity * max(1, ||a||).
    double hermiticity = 1e-12;
    /// min eigenvalue >= -positivity * ||a|| for a positive element.
    double positivity = 1e-12;
    /// Relative singular-value / eigenvalue cutoff for rank decisions.
    double rank = 1e-10;
    /// Gram-Schmidt acceptance threshold when growing algebra bases.
    double closure = 1e-10;
    /// Max distance between span projectors for two subalgebras to be equal.
    double span_equality = 1e-8;
    /// P = P* and P^2 = P within this.
    double projection = 1e-10;
    /// Relative gap for grouping eigenvalues into degenerate clusters.
    double eigen_cluster = 1e-9;
    /// d(E) must be this close to an integer.
    double integer_dimension = 1e-6;
    /// Density-matrix positivity and unit-trace slack.
    double state = 1e-10;
    /// Eigenvalue gap used to call a state pure (rank one).
    double purity_gap = 1e-10;
    /// Minimum eigenvalue for a faithful state.
    double faithful = 1e-12;
    /// ||u rho u* - rho|| allowed for an invariant state.
    double invariance = 1e-10;
    /// Frame condition number above which modular data is refused.
    double max_condition = 1e12;
    /// Power-series truncation: stop once a term's norm drops below this.
    double series_term = 1e-14;
    /// Hard cap on power-series terms.
    double series_max_terms = 1e4;
    /// Norm slack and commutator bound for admissible quadruples.
    double quadruple = 1e-10;

    /// Sets the tolerance called `name`. Throws Error(InvalidArgument) for
    /// unknown names or non-positive values.
    void set(std::string_view name, double value);
    double get(std::string_view name) const;
    static const std::vector<std::string> &names();
};

const Tolerances &default_tolerances();

}  // namespace oplab
