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

// CHSH machinery: admissible quadruples, the Bell operator
// C = A1 (B1 + B2) + A2 (B1 - B2), classical and quantum bounds, the
// spin-singlet example and the maximal-violation construction from a pair of
// noncommuting projections.

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "oplab/algebra.hpp"
#include "oplab/matcore.hpp"
#include "oplab/random.hpp"
#include "oplab/state.hpp"

namespace oplab {

struct AdmissibleQuadruple {
    CMatrix a1;
    CMatrix a2;
    CMatrix b1;
    CMatrix b2;

    Index dim() const {
        return a1.rows();
    }
};

struct QuadrupleReport {
    double hermiticity;  // max ||X - X*||
    double norm_excess;  // max(0, max ||X|| - 1)
    double commutation;  // max ||[A_i, B_j]||
    bool passed;
};

/// Never throws for square inputs of a common size; shape problems are
/// reported as a failure with infinite residuals.
QuadrupleReport validate(const AdmissibleQuadruple &q, const Tolerances &tol = default_tolerances());

struct BellOperator {
    CMatrix matrix;
    AdmissibleQuadruple source;
};

/// Throws InvalidQuadruple when validate fails.
BellOperator bell_operator(const AdmissibleQuadruple &q, const Tolerances &tol = default_tolerances());

/// ||C^2 - (4 - [A1, A2][B1, B2])||; meaningful when every entry squares to 1.
double square_identity_residual(const BellOperator &bo);
/// | ||C||^2 - 4 - ||[A1, A2][B1, B2]|| |
double norm_identity_residual(const BellOperator &bo);
/// max ||X^2 - 1|| over the four entries.
double involution_residual(const AdmissibleQuadruple &q);

/// Re Tr(rho C). Throws DimMismatch.
double chsh_value(const State &s, const BellOperator &bo);

/// cos(alpha) sigma_1 + sin(alpha) sigma_3.
CMatrix spin_observable(double alpha);

struct SingletExample {
    AdmissibleQuadruple quadruple;
    State state;
    double value;        // matrix-computed
    double closed_form;  // -cos(a1-b1) - cos(a1-b2) - cos(a2-b1) + cos(a2-b2)
    double total_spin;   // max_k ||(s_k + t_k) psi||
};

double singlet_closed_form(const std::array<double, 4> &angles);
/// Angles are (alpha1, alpha2, beta1, beta2).
SingletExample singlet_example(const std::array<double, 4> &angles);

struct ClassicalBound {
    int max;
    int min;
};

/// C0 = A1 B1 + A1 B2 + A2 B1 - A2 B2 for the sign assignment encoded by the
/// low four bits of k: bit 0 is A1, bit 1 is A2, bit 2 is B1, bit 3 is B2,
/// a clear bit meaning +1.
int deterministic_value(unsigned k);
ClassicalBound classical_bound_exhaustive();
/// Weighted value of a mixture of the 16 assignments. Throws BadWeights.
double classical_bound_mixture(const std::array<double, 16> &weights);

/// A1 and A2 built from noncommuting projections E, F on one factor. Throws
/// CommutingProjections when ||[E, F]|| <= 1e-8.
std::pair<CMatrix, CMatrix> summers_werner_pair(const Projection &e, const Projection &f,
                                                const Tolerances &tol = default_tolerances());
/// A-side from (e, f) placed as X (x) 1, B-side from (e2, f2) placed as 1 (x) X.
AdmissibleQuadruple summers_werner(const Projection &e, const Projection &f, const Projection &e2,
                                   const Projection &f2, const Tolerances &tol = default_tolerances());

struct MaxViolation {
    State state;
    double value;
};

/// Pure state on the eigenvector of C with the largest |eigenvalue|.
MaxViolation max_violation_state(const BellOperator &bo);

/// Quadruple with A_i, B_j Hermitian contractions on C^na and C^nb, placed
/// as A (x) 1 and 1 (x) B.
AdmissibleQuadruple random_admissible_quadruple(Index na, Index nb, Rng &rng);

using Objective = std::function<double(const std::vector<double> &)>;

struct OptimizerResult {
    std::vector<double> parameters;
    double value;
    /// Best value after each coordinate sweep, across all restarts.
    std::vector<double> trace;
};

/// Coordinate ascent on a product of circles: each coordinate is scanned on a
/// coarse 16-point grid and refined by golden-section search. The first run
/// starts from `initial`; `restarts` further runs start from seeded random
/// points. `budget` is the number of sweeps per run.
OptimizerResult maximize_on_torus(const Objective &objective, const std::vector<double> &initial, int budget,
                                  int restarts, std::uint64_t seed);

/// Maximizes the singlet closed form over (alpha1, alpha2, beta1, beta2).
OptimizerResult chsh_optimize(const std::array<double, 4> &initial, int budget = 20, int restarts = 8,
                              std::uint64_t seed = kDefaultSeed);

struct QuadrupleFamily {
    Index dim;
    int parameters;
    std::function<AdmissibleQuadruple(const std::vector<double> &)> make;
};

/// Spin observables cos(t) sigma_1 + sin(t) sigma_3 on each of two qubits.
QuadrupleFamily two_qubit_angle_family();

struct EbReport {
    double value;           // best 1/2 |omega(C)| found; a lower bound on the supremum
    std::vector<double> parameters;
    bool degenerate_wins;   // the trivial member A2 = 0, A1 = B1 = B2 = 1 was not beaten
    bool within_bounds;     // value in [1 - 1e-9, sqrt(2) + 1e-9]
};

/// Throws InvalidArgument when the family is empty or its dimension differs
/// from the state's.
EbReport eb_value(const State &s, const QuadrupleFamily &family, int budget = 20, int restarts = 8,
                  std::uint64_t seed = kDefaultSeed);

}  // namespace oplab
