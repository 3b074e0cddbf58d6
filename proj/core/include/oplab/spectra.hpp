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

// Spectral theory at finite dimension: spectra, the Gelfand radius formula,
// pointwise functional calculus, positive square roots and the order on
// Hermitian matrices.
//
// For a matrix the resolvent set is the complement of the eigenvalues, so
// the spectrum is computed as the eigenvalue multiset even for non-normal
// input.

#include <functional>
#include <span>
#include <vector>

#include "oplab/matcore.hpp"

namespace oplab {

struct Spectrum {
    /// Eigenvalues with multiplicity, sorted by (real, imag).
    std::vector<Complex> values;
};

Spectrum spectrum(const CMatrix &a, const Tolerances &tol = default_tolerances());

/// Largest distance between matched elements of two equal-size multisets.
/// Matching is greedy nearest-neighbour after sorting; returns +inf when the
/// sizes differ.
double multiset_distance(const Spectrum &a, const Spectrum &b);

/// p(a) for coefficients in ascending degree order.
CMatrix matrix_polynomial(const CMatrix &a, std::span<const Complex> coefficients);
Complex scalar_polynomial(Complex x, std::span<const Complex> coefficients);

/// ||a^(2^k)||^(2^-k) for the largest k <= k_max, squaring a renormalized
/// power each step so that neither overflow nor underflow occurs. Returns 0
/// once a power vanishes exactly.
double spectral_radius_gelfand(const CMatrix &a, int k_max);

bool is_positive(const CMatrix &a, const Tolerances &tol = default_tolerances());

enum class SqrtMethod { eigen, series };

/// The unique positive square root. The series route expands
/// ||a||^(1/2) * sum_n c_n (1 - a/||a||)^n with c_0 = 1, c_1 = -1/2,
/// c_n = -(2n-3)!!/(2n)!!.
CMatrix sqrt_positive(const CMatrix &a, SqrtMethod method, const Tolerances &tol = default_tolerances());

struct PosNegParts {
    CMatrix plus;
    CMatrix minus;
};

PosNegParts pos_neg_parts(const CMatrix &a, const Tolerances &tol = default_tolerances());

using ScalarFunction = std::function<Complex(double)>;

/// U diag(f(lambda)) U*. Throws FunctionUndefinedOnSpectrum when f returns
/// a non-finite value at some eigenvalue.
CMatrix functional_calculus(const CMatrix &a, const ScalarFunction &f, const Tolerances &tol = default_tolerances());
/// Same, reusing a precomputed eigendecomposition.
CMatrix functional_calculus(const HermEig &eig, const ScalarFunction &f);

/// a <= b iff b - a is positive. Throws NotHermitian, DimMismatch.
bool order_leq(const CMatrix &a, const CMatrix &b, const Tolerances &tol = default_tolerances());

}  // namespace oplab
