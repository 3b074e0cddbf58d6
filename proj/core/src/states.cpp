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

#include "oplab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "oplab/errors.hpp"
#include "oplab/spectra.hpp"

namespace oplab {

State::State(CMatrix rho, const Tolerances &tol) : rho_(std::move(rho)) {
    require_square(rho_, "density matrix");
    double scale = std::max(1.0, operator_norm(rho_));
    if (operator_norm(rho_ - rho_.adjoint()) > tol.state * scale) {
        throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
    }
    double trace = rho_.trace().real();
    if (std::abs(trace - 1.0) > tol.state) {
        throw Error(ErrorKind::InvalidState, "density matrix has trace " + std::to_string(trace));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrize(rho_), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues()(0) < -tol.state) {
        throw Error(ErrorKind::InvalidState,
                    "density matrix has eigenvalue " + std::to_string(solver.eigenvalues()(0)));
    }
}

State State::from_vector(const CVector &psi) {
    double norm = psi.norm();
    if (norm == 0.0 || !std::isfinite(norm)) {
        throw Error(ErrorKind::ZeroVector, "cannot build a state from a zero vector");
    }
    CVector unit = psi / norm;
    return State(unit * unit.adjoint());
}

State State::maximally_mixed(Index n) {
    return State(identity(n) / static_cast<double>(n));
}

Complex eval(const State &s, const CMatrix &a) {
    require_same_dim(s.rho(), a, "state evaluation");
    // Tr(rho A) = sum_ij rho_ij A_ji
    return (s.rho().array() * a.transpose().array()).sum();
}

Index state_rank(const State &s, const Tolerances &tol) {
    RVector values = herm_eig(symmetrize(s.rho()), tol).values;
    double top = values(values.size() - 1);
    Index r = 0;
    for (Index i = 0; i < values.size(); ++i) {
        if (values(i) > tol.purity_gap * top) {
            ++r;
        }
    }
    return r;
}

bool is_pure(const State &s, const Tolerances &tol) {
    return state_rank(s, tol) == 1;
}

bool is_faithful(const State &s, const Tolerances &tol) {
    RVector values = herm_eig(symmetrize(s.rho()), tol).values;
    return values(0) > tol.faithful;
}

State mix(std::span<const State> states, std::span<const double> weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw Error(ErrorKind::BadWeights, "need one weight per state");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw Error(ErrorKind::BadWeights, "weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw Error(ErrorKind::BadWeights, "weights sum to " + std::to_string(total));
    }
    CMatrix rho = CMatrix::Zero(states[0].dim(), states[0].dim());
    for (std::size_t i = 0; i < states.size(); ++i) {
        require_same_dim(rho, states[i].rho(), "mix");
        rho += weights[i] * states[i].rho();
    }
    return State(std::move(rho));
}

CauchySchwarzReport cauchy_schwarz_check(const State &s, const CMatrix &a, const CMatrix &b) {
    Complex ab = eval(s, a.adjoint() * b);
    Complex ba = eval(s, b.adjoint() * a);
    double aa = eval(s, a.adjoint() * a).real();
    double bb = eval(s, b.adjoint() * b).real();
    return {aa * bb - std::norm(ab), std::abs(ab - std::conj(ba))};
}

State norming_state(const CMatrix &a, const Tolerances &tol) {
    require_square(a, "norming_state input");
    if (operator_norm(a) == 0.0) {
        throw Error(ErrorKind::ZeroMatrix, "the zero matrix has no norming state");
    }
    HermEig eig = herm_eig(symmetrize(a.adjoint() * a), tol);
    return State::from_vector(eig.vectors.col(eig.vectors.cols() - 1));
}

State product_state(const State &s1, const State &s2) {
    return State(kron(s1.rho(), s2.rho()));
}

CMatrix partial_trace_second(const CMatrix &x, Index n1, Index n2) {
    CMatrix out = CMatrix::Zero(n1, n1);
    for (Index i = 0; i < n1; ++i) {
        for (Index j = 0; j < n1; ++j) {
            for (Index a = 0; a < n2; ++a) {
                out(i, j) += x(i * n2 + a, j * n2 + a);
            }
        }
    }
    return out;
}

CMatrix partial_trace_first(const CMatrix &x, Index n1, Index n2) {
    CMatrix out = CMatrix::Zero(n2, n2);
    for (Index i = 0; i < n1; ++i) {
        out += x.block(i * n2, i * n2, n2, n2);
    }
    return out;
}

Complex GnsTriple::inner(const CMatrix &x, const CMatrix &y) const {
    // Tr(rho X* Y) = Tr((X rho)* Y)
    CMatrix xr = x * rho_;
    return (xr.conjugate().array() * y.array()).sum();
}

CMatrix GnsTriple::rep(const CMatrix &a) const {
    require_same_dim(a, rho_, "GNS representation argument");
    Index m = rep_dim();
    CMatrix out(m, m);
    for (Index j = 0; j < m; ++j) {
        CMatrix image = a * carrier_basis_[static_cast<std::size_t>(j)];
        for (Index i = 0; i < m; ++i) {
            out(i, j) = inner(carrier_basis_[static_cast<std::size_t>(i)], image);
        }
    }
    return out;
}

CVector GnsTriple::coordinates(const CMatrix &x) const {
    CVector out(rep_dim());
    for (Index i = 0; i < rep_dim(); ++i) {
        out(i) = inner(carrier_basis_[static_cast<std::size_t>(i)], x);
    }
    return out;
}

GnsTriple gns(const State &s, std::span<const Index> seed_order, const Tolerances &tol) {
    const CMatrix &rho = s.rho();
    const Index n = rho.rows();
    HermEig eig = herm_eig(symmetrize(rho), tol);
    double top = eig.values(n - 1);
    Index r = 0;
    for (Index i = 0; i < n; ++i) {
        if (eig.values(i) > tol.purity_gap * top) {
            ++r;
        }
    }
    CMatrix v = eig.vectors.rightCols(r);

    GnsTriple t;
    t.rho_ = rho;
    t.support_ = v * v.adjoint();
    t.rank_ = r;

    std::vector<Index> order(seed_order.begin(), seed_order.end());
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(n * n));
        std::iota(order.begin(), order.end(), Index{0});
    }
    if (static_cast<Index>(order.size()) != n * n) {
        throw Error(ErrorKind::InvalidArgument, "seed order must list all n^2 matrix units");
    }

    std::vector<CMatrix> residuals;
    residuals.reserve(order.size());
    for (Index flat : order) {
        Index i = flat / n;
        Index j = flat % n;
        CMatrix x = CMatrix::Zero(n, n);
        x.row(i) = t.support_.row(j);
        residuals.push_back(std::move(x));
    }

    // Pivoted Gram-Schmidt: always take the candidate with the largest
    // remaining rho-norm, earliest in seed order on ties.
    const Index target = n * r;
    std::vector<bool> taken(residuals.size(), false);
    for (Index step = 0; step < target; ++step) {
        std::size_t best = residuals.size();
        double best_norm = 0.0;
        for (std::size_t c = 0; c < residuals.size(); ++c) {
            if (taken[c]) {
                continue;
            }
            double norm = std::sqrt(std::max(0.0, t.inner(residuals[c], residuals[c]).real()));
            if (best == residuals.size() || norm > best_norm * (1.0 + 1e-12)) {
                best = c;
                best_norm = norm;
            }
        }
        if (best == residuals.size() || best_norm <= 0.0) {
            throw Error(ErrorKind::Internal, "GNS carrier has fewer than n * rank(rho) directions");
        }
        taken[best] = true;
        CMatrix b = residuals[best] / best_norm;
        for (int pass = 0; pass < 2; ++pass) {
            for (const CMatrix &prev : t.carrier_basis_) {
                b -= t.inner(prev, b) * prev;
            }
            b /= std::sqrt(t.inner(b, b).real());
        }
        for (std::size_t c = 0; c < residuals.size(); ++c) {
            if (!taken[c]) {
                residuals[c] -= t.inner(b, residuals[c]) * b;
            }
        }
        t.carrier_basis_.push_back(std::move(b));
    }
    t.omega_ = t.coordinates(t.support_);
    return t;
}

namespace {

CMatrix unit_matrix(Index n, Index i, Index j) {
    CMatrix e = CMatrix::Zero(n, n);
    e(i, j) = 1.0;
    return e;
}

}  // namespace

GnsReport gns_verify(const GnsTriple &t, const Tolerances &tol) {
    const Index n = t.algebra_dim();
    const CMatrix &rho = t.rho();
    std::vector<CMatrix> units;
    std::vector<CMatrix> reps;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            units.push_back(unit_matrix(n, i, j));
            reps.push_back(t.rep(units.back()));
        }
    }
    GnsReport report{};
    report.rep_dim = t.rep_dim();
    CMatrix images(t.rep_dim(), static_cast<Index>(units.size()));
    CMatrix rep_columns(t.rep_dim() * t.rep_dim(), static_cast<Index>(units.size()));
    for (std::size_t a = 0; a < units.size(); ++a) {
        Index i = static_cast<Index>(a) / n;
        Index j = static_cast<Index>(a) % n;
        // E_ij E_kl = delta_jk E_il
        for (Index l = 0; l < n; ++l) {
            for (Index k = 0; k < n; ++k) {
                CMatrix product = reps[a] * reps[static_cast<std::size_t>(k * n + l)];
                CMatrix expected = (j == k) ? reps[static_cast<std::size_t>(i * n + l)]
                                            : CMatrix::Zero(t.rep_dim(), t.rep_dim());
                report.homomorphism_residual =
                    std::max(report.homomorphism_residual, operator_norm(product - expected));
            }
        }
        const CMatrix &adj = reps[static_cast<std::size_t>(j * n + i)];
        report.star_residual = std::max(report.star_residual, operator_norm(adj - reps[a].adjoint()));
        Complex expectation = t.omega().dot(reps[a] * t.omega());
        report.expectation_residual = std::max(report.expectation_residual, std::abs(expectation - rho(j, i)));
        images.col(static_cast<Index>(a)) = reps[a] * t.omega();
        rep_columns.col(static_cast<Index>(a)) = vec(reps[a]);
    }
    report.cyclic_span_dim = numerical_rank(images, tol);
    report.faithful_rep = numerical_rank(rep_columns, tol) == n * n;
    return report;
}

Subalgebra gns_commutant(const GnsTriple &t, const Tolerances &tol) {
    const Index n = t.algebra_dim();
    CMatrix shift = CMatrix::Zero(n, n);
    CMatrix clock = CMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        shift((i + 1) % n, i) = 1.0;
        clock(i, i) = static_cast<double>(i);
    }
    std::vector<CMatrix> gens{t.rep(shift), t.rep(clock)};
    Index m = t.rep_dim();
    Subalgebra image = Subalgebra::structured(
        m, gens, n * n, [gens, m, tol] { return generate(gens, m, tol).basis(); }, nullptr);
    return commutant(image, tol);
}

bool gns_irreducible(const GnsTriple &t, const Tolerances &tol) {
    return gns_commutant(t, tol).dim() == 1;
}

CMatrix gns_intertwiner(const GnsTriple &from, const GnsTriple &to) {
    if (from.rep_dim() != to.rep_dim()) {
        throw Error(ErrorKind::DimMismatch, "GNS triples have different dimensions");
    }
    Index m = from.rep_dim();
    CMatrix w(m, m);
    for (Index j = 0; j < m; ++j) {
        w.col(j) = to.coordinates(from.carrier_basis()[static_cast<std::size_t>(j)]);
    }
    return w;
}

CMatrix implement_automorphism(const GnsTriple &t, const CMatrix &u, const Tolerances &tol) {
    require_same_dim(u, t.rho(), "automorphism unitary");
    if (!is_unitary(u, 1e-10)) {
        throw Error(ErrorKind::InvalidArgument, "automorphism must be implemented by a unitary");
    }
    if (operator_norm(u * t.rho() * u.adjoint() - t.rho()) > tol.invariance) {
        throw Error(ErrorKind::NotInvariant, "state is not invariant under the automorphism");
    }
    Index m = t.rep_dim();
    CMatrix out(m, m);
    for (Index j = 0; j < m; ++j) {
        out.col(j) = t.coordinates(u * t.carrier_basis()[static_cast<std::size_t>(j)] * u.adjoint());
    }
    return out;
}

}  // namespace oplab
