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

#include "oplab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "oplab/errors.hpp"

namespace oplab {

namespace {

Eigen::JacobiSVD<CMatrix> svd(const CMatrix &a, unsigned options) {
    return Eigen::JacobiSVD<CMatrix>(a, options);
}

double rank_cutoff(const RVector &sigma, const Tolerances &tol) {
    double top = sigma.size() > 0 ? sigma(0) : 0.0;
    return tol.rank * std::max(top, std::numeric_limits<double>::min());
}

}  // namespace

void require_square(const CMatrix &a, std::string_view what) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NonSquare, std::string(what) + " is " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()));
    }
    if (a.rows() == 0) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " is empty");
    }
    if (a.rows() > kMaxDim) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    std::string(what) + " exceeds dimension cap " + std::to_string(kMaxDim));
    }
    if (!a.allFinite()) {
        throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
    }
}

void require_same_dim(const CMatrix &a, const CMatrix &b, std::string_view what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimMismatch, std::string(what) + ": " + std::to_string(a.rows()) + " vs " +
                                                std::to_string(b.rows()));
    }
}

CMatrix identity(Index n) {
    return CMatrix::Identity(n, n);
}

CVector basis_vector(Index n, Index i) {
    CVector v = CVector::Zero(n);
    v(i) = 1.0;
    return v;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix commutator(const CMatrix &a, const CMatrix &b) {
    return a * b - b * a;
}

CMatrix anticommutator(const CMatrix &a, const CMatrix &b) {
    return a * b + b * a;
}

CMatrix outer(const CVector &u, const CVector &v) {
    return u * v.adjoint();
}

namespace pauli {
CMatrix x() {
    CMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}
CMatrix y() {
    CMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}
CMatrix z() {
    CMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}
}  // namespace pauli

RVector singular_values(const CMatrix &a) {
    if (a.size() == 0) {
        return RVector();
    }
    return svd(a, 0).singularValues();
}

double operator_norm(const CMatrix &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    if (a.rows() == 1 || a.cols() == 1) {
        return a.norm();
    }
    return singular_values(a)(0);
}

double hermiticity_residual(const CMatrix &a) {
    return operator_norm(a - a.adjoint());
}

bool is_hermitian(const CMatrix &a, const Tolerances &tol) {
    if (a.rows() != a.cols()) {
        return false;
    }
    // Cheap screen first: the Frobenius norm bounds the operator norm from above.
    CMatrix skew = a - a.adjoint();
    double scale = std::max(1.0, operator_norm(a));
    double bound = tol.hermiticity * scale;
    if (skew.norm() <= bound) {
        return true;
    }
    return operator_norm(skew) <= bound;
}

CMatrix symmetrize(const CMatrix &a) {
    return 0.5 * (a + a.adjoint());
}

bool is_unitary(const CMatrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    return operator_norm(u.adjoint() * u - identity(u.rows())) <= tol;
}

HermEig herm_eig(const CMatrix &a, const Tolerances &tol) {
    require_square(a, "herm_eig input");
    if (!is_hermitian(a, tol)) {
        throw Error(ErrorKind::NotHermitian,
                    "herm_eig input has ||a - a*|| = " + std::to_string(hermiticity_residual(a)));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::Internal, "Hermitian eigensolver did not converge");
    }
    HermEig out{solver.eigenvalues(), solver.eigenvectors()};
    for (Index j = 0; j < out.vectors.cols(); ++j) {
        for (Index i = 0; i < out.vectors.rows(); ++i) {
            Complex c = out.vectors(i, j);
            if (std::abs(c) > 1e-10) {
                out.vectors.col(j) *= std::conj(c) / std::abs(c);
                out.vectors(i, j) = std::abs(out.vectors(i, j));
                break;
            }
        }
    }
    return out;
}

PolarParts polar(const CMatrix &a, const Tolerances &tol) {
    require_square(a, "polar input");
    auto decomposition = svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RVector &sigma = decomposition.singularValues();
    const CMatrix &u = decomposition.matrixU();
    const CMatrix &v = decomposition.matrixV();
    double cutoff = rank_cutoff(sigma, tol);
    Index n = a.rows();
    PolarParts out{CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
    for (Index k = 0; k < sigma.size(); ++k) {
        out.modulus += sigma(k) * v.col(k) * v.col(k).adjoint();
        if (sigma(k) > cutoff) {
            out.isometry_part += u.col(k) * v.col(k).adjoint();
        }
    }
    return out;
}

Complex hs_inner(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a, b, "hs_inner");
    return (a.array().conjugate() * b.array()).sum();
}

double hs_norm(const CMatrix &a) {
    return a.norm();
}

Index numerical_rank(const CMatrix &a, const Tolerances &tol) {
    RVector sigma = singular_values(a);
    double cutoff = rank_cutoff(sigma, tol);
    Index r = 0;
    for (Index k = 0; k < sigma.size(); ++k) {
        if (sigma(k) > cutoff && sigma(k) > 0.0) {
            ++r;
        }
    }
    return r;
}

CMatrix range_basis(const CMatrix &a, const Tolerances &tol) {
    if (a.cols() == 0) {
        return CMatrix(a.rows(), 0);
    }
    auto decomposition = svd(a, Eigen::ComputeThinU);
    const RVector &sigma = decomposition.singularValues();
    double cutoff = rank_cutoff(sigma, tol);
    Index r = 0;
    while (r < sigma.size() && sigma(r) > cutoff && sigma(r) > 0.0) {
        ++r;
    }
    return decomposition.matrixU().leftCols(r);
}

CMatrix null_space(const CMatrix &a, const Tolerances &tol, double scale_floor) {
    if (a.rows() == 0) {
        return identity(a.cols());
    }
    auto decomposition = svd(a, Eigen::ComputeFullV);
    const RVector &sigma = decomposition.singularValues();
    double cutoff = std::max(rank_cutoff(sigma, tol), tol.rank * scale_floor);
    Index r = 0;
    while (r < sigma.size() && sigma(r) > cutoff && sigma(r) > 0.0) {
        ++r;
    }
    return decomposition.matrixV().rightCols(a.cols() - r);
}

double condition_number(const CMatrix &a) {
    RVector sigma = singular_values(a);
    if (sigma.size() == 0) {
        return 1.0;
    }
    double smallest = sigma(sigma.size() - 1);
    if (smallest <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return sigma(0) / smallest;
}

CVector vec(const CMatrix &a) {
    return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix unvec(const CVector &v, Index n) {
    return Eigen::Map<const CMatrix>(v.data(), n, n);
}

}  // namespace oplab
