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

// Dense complex matrices and the handful of factorizations every other
// module builds on. All functions are pure; none retain references.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "oplab/tolerances.hpp"

namespace oplab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Largest ambient dimension accepted anywhere in the library.
inline constexpr Index kMaxDim = 4096;

/// Throws NonSquare, DimensionCapExceeded or NonFinite.
void require_square(const CMatrix &a, std::string_view what);
void require_same_dim(const CMatrix &a, const CMatrix &b, std::string_view what);

CMatrix identity(Index n);
CVector basis_vector(Index n, Index i);
CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix commutator(const CMatrix &a, const CMatrix &b);
CMatrix anticommutator(const CMatrix &a, const CMatrix &b);
/// |u><v|
CMatrix outer(const CVector &u, const CVector &v);

namespace pauli {
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

/// Largest singular value.
double operator_norm(const CMatrix &a);
RVector singular_values(const CMatrix &a);

/// ||a - a*|| in operator norm.
double hermiticity_residual(const CMatrix &a);
bool is_hermitian(const CMatrix &a, const Tolerances &tol = default_tolerances());
/// (a + a*) / 2. Never applied implicitly by other functions.
CMatrix symmetrize(const CMatrix &a);
bool is_unitary(const CMatrix &u, double tol);

struct HermEig {
    RVector values;   // ascending
    CMatrix vectors;  // columns; first component above 1e-10 in modulus is real positive
};

/// Eigendecomposition of a Hermitian matrix. Throws NotHermitian when
/// ||a - a*|| > hermiticity * max(1, ||a||).
HermEig herm_eig(const CMatrix &a, const Tolerances &tol = default_tolerances());

struct PolarParts {
    CMatrix isometry_part;  // partial isometry, zero on ker(a)
    CMatrix modulus;        // |a| = sqrt(a* a)
};

PolarParts polar(const CMatrix &a, const Tolerances &tol = default_tolerances());

/// Tr(a* b). Throws DimMismatch.
Complex hs_inner(const CMatrix &a, const CMatrix &b);
double hs_norm(const CMatrix &a);

Index numerical_rank(const CMatrix &a, const Tolerances &tol = default_tolerances());
/// Orthonormal columns spanning ran(a) (a may be rectangular).
CMatrix range_basis(const CMatrix &a, const Tolerances &tol = default_tolerances());
/// Orthonormal columns spanning ker(a) (a may be rectangular). Singular values
/// at or below tol.rank * max(sigma_max, scale_floor) count as zero.
CMatrix null_space(const CMatrix &a, const Tolerances &tol = default_tolerances(), double scale_floor = 0.0);
/// max sigma / min sigma over all singular values (infinity when singular).
double condition_number(const CMatrix &a);

/// Column-major vectorization; hs_inner(a, b) == vec(a).dot(vec(b)).
CVector vec(const CMatrix &a);
CMatrix unvec(const CVector &v, Index n);

}  // namespace oplab
