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

#include "oplab/modular.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oplab/errors.hpp"

namespace oplab {

CMatrix compose(const AntiLinear &a, const AntiLinear &b) {
    return a.matrix() * b.matrix().conjugate();
}

AntiLinear compose(const AntiLinear &a, const CMatrix &linear) {
    return AntiLinear(a.matrix() * linear.conjugate());
}

AntiLinear compose(const CMatrix &linear, const AntiLinear &a) {
    return AntiLinear(linear * a.matrix());
}

namespace {

CMatrix frame(const Subalgebra &m, const CVector &omega) {
    if (omega.size() != m.ambient_dim()) {
        throw Error(ErrorKind::DimMismatch, "vector does not live in the ambient space");
    }
    if (omega.norm() == 0.0) {
        throw Error(ErrorKind::ZeroVector, "cyclic/separating tests need a nonzero vector");
    }
    const auto &basis = m.basis();
    CMatrix f(omega.size(), static_cast<Index>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        f.col(static_cast<Index>(i)) = basis[i] * omega;
    }
    return f;
}

}  // namespace

bool is_cyclic(const Subalgebra &m, const CVector &omega, const Tolerances &tol) {
    return numerical_rank(frame(m, omega), tol) == m.ambient_dim();
}

bool is_separating(const Subalgebra &m, const CVector &omega, const Tolerances &tol) {
    return numerical_rank(frame(m, omega), tol) == m.dim();
}

CVector purification(const State &s) {
    const Index n = s.dim();
    CMatrix root = sqrt_positive(symmetrize(s.rho()), SqrtMethod::eigen);
    CVector out(n * n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            out(i * n + j) = root(i, j);
        }
    }
    return out;
}

ModularData tomita(const Subalgebra &m, const CVector &omega, const Tolerances &tol) {
    CMatrix f = frame(m, omega);
    Index rank = numerical_rank(f, tol);
    if (rank != m.ambient_dim()) {
        throw Error(ErrorKind::NotCyclic, "frame spans " + std::to_string(rank) + " of " +
                                              std::to_string(m.ambient_dim()) + " dimensions");
    }
    if (rank != m.dim()) {
        throw Error(ErrorKind::NotSeparating, "an element of the algebra annihilates the vector");
    }
    double condition = condition_number(f);
    if (!(condition <= tol.max_condition)) {
        throw Error(ErrorKind::IllConditioned, "frame condition number " + std::to_string(condition));
    }

    const auto &basis = m.basis();
    CMatrix images(f.rows(), f.cols());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        images.col(static_cast<Index>(i)) = basis[i].adjoint() * omega;
    }
    // S conj(f) = images, i.e. conj(f)^T S^T = images^T.
    CMatrix lhs = f.conjugate().transpose();
    CMatrix rhs = images.transpose();
    CMatrix s_matrix = lhs.colPivHouseholderQr().solve(rhs).transpose();

    AntiLinear s_op(s_matrix);
    CMatrix delta = symmetrize(compose(s_op.adjoint(), s_op));
    HermEig eig = herm_eig(delta, tol);
    if (!(eig.values(0) > 0.0)) {
        throw Error(ErrorKind::IllConditioned, "modular operator is not strictly positive");
    }
    CMatrix inv_sqrt = functional_calculus(eig, [](double x) { return Complex(1.0 / std::sqrt(x), 0.0); });
    AntiLinear j_op = compose(s_op, inv_sqrt);
    return ModularData{m, omega, s_op, delta, eig, j_op, condition};
}

CMatrix delta_power(const ModularData &d, Complex exponent) {
    return functional_calculus(d.delta_eig, [exponent](double x) { return std::exp(exponent * std::log(x)); });
}

CMatrix modular_flow(const ModularData &d, double t, const CMatrix &a) {
    require_same_dim(a, d.delta, "modular flow argument");
    CMatrix forward = delta_power(d, Complex(0.0, t));
    return forward * a * forward.adjoint();
}

double kms_check(const ModularData &d, const CMatrix &a, const CMatrix &b, double beta) {
    require_same_dim(a, d.delta, "KMS argument");
    require_same_dim(b, d.delta, "KMS argument");
    CMatrix continued = delta_power(d, Complex(-beta, 0.0)) * a * delta_power(d, Complex(beta, 0.0));
    Complex lhs = d.omega.dot(continued * b * d.omega);
    Complex rhs = d.omega.dot(b * a * d.omega);
    return std::abs(lhs - rhs);
}

TomitaTakesakiReport verify_tomita_takesaki(const ModularData &d, const std::vector<double> &times, double threshold,
                                            const Tolerances &tol) {
    const Index n = d.delta.rows();
    const CMatrix &u = d.conjugation.matrix();
    TomitaTakesakiReport r{};
    r.j_omega = (d.conjugation.apply(d.omega) - d.omega).norm();
    r.delta_omega = (d.delta * d.omega - d.omega).norm();
    r.j_involution = operator_norm(compose(d.conjugation, d.conjugation) - identity(n));
    r.j_selfadjoint = operator_norm(u - u.transpose());
    r.delta_inverse = operator_norm(delta_power(d, -1.0) - compose(d.tomita, d.tomita.adjoint()));
    CMatrix half = delta_power(d, 0.5);
    CMatrix conjugated = compose(compose(d.conjugation, half), d.conjugation);
    r.delta_sqrt_relation = operator_norm(delta_power(d, -0.5) - conjugated);

    std::vector<CMatrix> reflected;
    for (const CMatrix &b : d.algebra.basis()) {
        reflected.push_back(compose(compose(d.conjugation, b), d.conjugation));
    }
    Subalgebra jmj = span_subalgebra(reflected, n, tol);
    r.jmj_commutant = span_distance(jmj, commutant(d.algebra, tol));

    for (double t : times) {
        CMatrix forward = delta_power(d, Complex(0.0, t));
        for (const CMatrix &b : d.algebra.basis()) {
            CMatrix moved = forward * b * forward.adjoint();
            r.flow_invariance = std::max(r.flow_invariance, d.algebra.membership_residual(moved));
        }
    }
    r.max_residual = std::max({r.j_omega, r.delta_omega, r.j_involution, r.j_selfadjoint, r.delta_inverse,
                               r.delta_sqrt_relation, r.jmj_commutant, r.flow_invariance});
    r.holds = r.max_residual <= threshold;
    return r;
}

}  // namespace oplab
