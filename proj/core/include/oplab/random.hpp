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

// Seeded samplers for the random instances used by property checks, the
// acceptance suite and the benchmarks.

#include <cstdint>
#include <random>
#include <vector>

#include "oplab/matcore.hpp"

namespace oplab {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// Entries i.i.d. standard complex Gaussian (Ginibre ensemble).
CMatrix random_ginibre(Index rows, Index cols, Rng &rng);
CMatrix random_hermitian(Index n, Rng &rng);
/// Haar-distributed unitary.
CMatrix random_unitary(Index n, Rng &rng);
CVector random_unit_vector(Index n, Rng &rng);
/// Orthogonal projection onto a Haar-random subspace of the given rank.
CMatrix random_projection(Index n, Index rank, Rng &rng);
/// Density matrix of the given rank (rank in 1..n).
CMatrix random_density(Index n, Index rank, Rng &rng);
/// Full-rank density matrix with every eigenvalue >= floor / n.
CMatrix random_faithful_density(Index n, double floor, Rng &rng);
double random_uniform(double lo, double hi, Rng &rng);
/// Uniform integer in [lo, hi].
Index random_index(Index lo, Index hi, Rng &rng);
/// Two generic elements of U (sum_i Mat(k_i) (x) 1_{m_i}) U* for a random
/// block pattern with sum_i k_i m_i = n and a Haar-random unitary U.
std::vector<CMatrix> random_subalgebra_generators(Index n, Rng &rng);

}  // namespace oplab
