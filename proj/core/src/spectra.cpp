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

#include "oplab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oplab/errors.hpp"

namespace oplab {

namespace {

bool lex_less(const Complex &a, const Complex &b) {
    if (a.real() != b.real()) {
        return a.real() < b.real();
    }
    return a.imag() < b.imag();
}

}  // namespace

Spectrum spectrum(const CMatrix &a, const Tolerances &tol) {
    require_square(a, "spectrum input");
    Spectrum out;
    if (is_hermitian(a, tol)) {
        RVector values = herm_eig(a, tol).values;
        for (Index i = 0; i < values.size(); ++i) {
            out.values.emplace_back(values(i), 0.0);
        }
        return out;
    }
    Eigen::ComplexEigenSolver<CMatrix> solver(a, false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::Internal, "complex eigensolver did not converge");
    }
    const CVector &values = solver.eigenvalues();
    out.values.assign(values.data(), values.data() + values.size());
    std::sort(out.values.begin(), out.values.end(), lex_less);
    return out;
}

double multiset_distance(const Spectrum &a, const Spectrum &b) {
    if (a.values.size() != b.values.size()) {
        return std::numeric_limits<double>::infinity();
    }
    std::vector<Complex> left = a.values;
    std::vector<Complex> right = b.values;
    std::sort(left.begin(), left.end(), lex_less);
    std::vector<bool> used(right.size(), false);
    double worst = 0.0;
    for (const Complex &x : left) {
        std::size_t best = right.size();
        double best_distance = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (!used[j] && std::abs(x - right[j]) < best_distance) {
                best_distance = std::abs(x - right[j]);
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_distance);
    }
    return worst;
}

CMatrix matrix_polynomial(const CMatrix &a, std::span<const Complex> coefficients) {
    require_square(a, "polynomial argument");
    // Horner.
    CMatrix result = CMatrix::Zero(a.rows(), a.cols());
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        result = result * a;
        result.diagonal().array() += *it;
    }
    return result;
}

Complex scalar_polynomial(Complex x, std::span<const Complex> coefficients) {
    Complex result = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        result = result * x + *it;
    }
    return result;
}

double spectral_radius_gelfand(const CMatrix &a, int k_max) {
    require_square(a, "spectral radius input");
    if (k_max < 1) {
        throw Error(ErrorKind::InvalidArgument, "k_max must be >= 1");
    }
    double norm = operator_norm(a);
    if (norm == 0.0) {
        return 0.0;
    }
    // power = exp(2^k * log_radius) * unit, with ||unit|| = 1.
    CMatrix unit = a / norm;
    double log_radius = std::log(norm);
    double weight = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        CMatrix squared = unit * unit;
        double s = operator_norm(squared);
        if (s == 0.0) {
            return 0.0;
        }
        if (!std::isfinite(s) || s < std::numeric_limits<double>::min()) {
            break;
        }
        weight *= 0.5;
        log_radius += weight * std::log(s);
        unit = squared / s;
    }
    return std::exp(log_radius);
}

bool is_positive(const CMatrix &a, const Tolerances &tol) {
    require_square(a, "positivity input");
    if (!is_hermitian(a, tol)) {
        return false;
    }
    double norm = operator_norm(a);
    RVector values = herm_eig(a, tol).values;
    return values(0) >= -tol.positivity * norm;
}

CMatrix functional_calculus(const HermEig &eig, const ScalarFunction &f) {
    CVector mapped(eig.values.size());
    for (Index i = 0; i < eig.values.size(); ++i) {
        Complex value = f(eig.values(i));
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
            throw Error(ErrorKind::FunctionUndefinedOnSpectrum,
                        "function is not finite at eigenvalue " + std::to_string(eig.values(i)));
        }
        mapped(i) = value;
    }
    return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

CMatrix functional_calculus(const CMatrix &a, const ScalarFunction &f, const Tolerances &tol) {
    return functional_calculus(herm_eig(a, tol), f);
}

CMatrix sqrt_positive(const CMatrix &a, SqrtMethod method, const Tolerances &tol) {
    if (!is_positive(a, tol)) {
        throw Error(ErrorKind::NotPositive, "square root requires a positive matrix");
    }
    Index n = a.rows();
    if (method == SqrtMethod::eigen) {
        CMatrix root = functional_calculus(a, [](double x) { return Complex(std::sqrt(std::max(x, 0.0)), 0.0); }, tol);
        return symmetrize(root);
    }

    double norm = operator_norm(a);
    if (norm == 0.0) {
        return CMatrix::Zero(n, n);
    }
    CMatrix remainder = identity(n) - a / norm;
    if (operator_norm(remainder) > 1.0 + 1e-12) {
        throw Error(ErrorKind::SeriesPreconditionFailed, "||1 - a/||a|||| exceeds 1");
    }
    CMatrix sum = identity(n);
    CMatrix power = identity(n);
    double coefficient = 1.0;
    const long max_terms = static_cast<long>(tol.series_max_terms);
    bool converged = false;
    for (long k = 1; k <= max_terms; ++k) {
        coefficient = (k == 1) ? -0.5 : coefficient * static_cast<double>(2 * k - 3) / static_cast<double>(2 * k);
        power = power * remainder;
        CMatrix term = coefficient * power;
        sum += term;
        // Frobenius norm bounds the operator norm, so this is the stricter test.
        if (term.norm() < tol.series_term) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw Error(ErrorKind::SeriesNoConvergence,
                    "square-root series did not converge in " + std::to_string(max_terms) + " terms");
    }
    return symmetrize(std::sqrt(norm) * sum);
}

PosNegParts pos_neg_parts(const CMatrix &a, const Tolerances &tol) {
    HermEig eig = herm_eig(a, tol);
    return {
        functional_calculus(eig, [](double x) { return Complex(0.5 * (std::abs(x) + x), 0.0); }),
        functional_calculus(eig, [](double x) { return Complex(0.5 * (std::abs(x) - x), 0.0); }),
    };
}

bool order_leq(const CMatrix &a, const CMatrix &b, const Tolerances &tol) {
    require_square(a, "order_leq lhs");
    require_square(b, "order_leq rhs");
    require_same_dim(a, b, "order_leq");
    if (!is_hermitian(a, tol) || !is_hermitian(b, tol)) {
        throw Error(ErrorKind::NotHermitian, "order_leq requires Hermitian arguments");
    }
    return is_positive(b - a, tol);
}

}  // namespace oplab
