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

#include "oplab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "oplab/errors.hpp"
#include "oplab/random.hpp"
#include "oplab/spectra.hpp"

namespace oplab {

struct Subalgebra::Data {
    Index n = 0;
    std::vector<CMatrix> generators;
    Index dim = 0;
    BasisFactory factory;
    Projector projector;

    mutable std::once_flag once;
    mutable std::vector<CMatrix> basis;
    mutable CMatrix columns;  // n^2 x dim, vec of each basis element

    void materialize() const {
        std::call_once(once, [this] {
            basis = factory();
            if (static_cast<Index>(basis.size()) != dim) {
                throw Error(ErrorKind::Internal, "basis factory returned " + std::to_string(basis.size()) +
                                                     " elements, expected " + std::to_string(dim));
            }
            columns.resize(n * n, dim);
            for (Index j = 0; j < dim; ++j) {
                columns.col(j) = vec(basis[static_cast<std::size_t>(j)]);
            }
        });
    }
};

Subalgebra::Subalgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {
}

Subalgebra Subalgebra::from_orthonormal_basis(Index n, std::vector<CMatrix> basis, std::vector<CMatrix> generators) {
    auto data = std::make_shared<Data>();
    data->n = n;
    data->generators = std::move(generators);
    data->dim = static_cast<Index>(basis.size());
    data->factory = [b = std::move(basis)] { return b; };
    data->materialize();
    data->factory = nullptr;
    return Subalgebra(std::move(data));
}

Subalgebra Subalgebra::structured(Index n, std::vector<CMatrix> generators, Index dim, BasisFactory basis,
                                  Projector projector) {
    auto data = std::make_shared<Data>();
    data->n = n;
    data->generators = std::move(generators);
    data->dim = dim;
    data->factory = std::move(basis);
    data->projector = std::move(projector);
    return Subalgebra(std::move(data));
}

Index Subalgebra::ambient_dim() const {
    return data_->n;
}

Index Subalgebra::dim() const {
    return data_->dim;
}

const std::vector<CMatrix> &Subalgebra::generators() const {
    return data_->generators;
}

const std::vector<CMatrix> &Subalgebra::basis() const {
    data_->materialize();
    return data_->basis;
}

CMatrix Subalgebra::project(const CMatrix &x) const {
    if (x.rows() != data_->n || x.cols() != data_->n) {
        throw Error(ErrorKind::DimMismatch, "element does not live in the ambient algebra");
    }
    if (data_->projector) {
        return data_->projector(x);
    }
    data_->materialize();
    CVector coefficients = data_->columns.adjoint() * vec(x);
    return unvec(data_->columns * coefficients, data_->n);
}

double Subalgebra::membership_residual(const CMatrix &x) const {
    return hs_norm(x - project(x));
}

bool Subalgebra::contains(const CMatrix &x, double tol) const {
    return membership_residual(x) <= tol * std::max(1.0, hs_norm(x));
}

CMatrix Subalgebra::span_projector() const {
    data_->materialize();
    return data_->columns * data_->columns.adjoint();
}

namespace {

/// Grows an HS-orthonormal basis one candidate at a time.
class BasisBuilder {
  public:
    BasisBuilder(Index n, double threshold) : n_(n), threshold_(threshold), columns_(n * n, 0) {
    }

    bool add(const CMatrix &x) {
        double scale = hs_norm(x);
        if (scale < 1e-300) {
            return false;
        }
        CVector v = vec(x);
        for (int pass = 0; pass < 2; ++pass) {
            if (columns_.cols() > 0) {
                v -= columns_ * (columns_.adjoint() * v);
            }
        }
        double residual = v.norm();
        if (residual <= threshold_ * scale) {
            return false;
        }
        v /= residual;
        columns_.conservativeResize(Eigen::NoChange, columns_.cols() + 1);
        columns_.col(columns_.cols() - 1) = v;
        basis_.push_back(unvec(v, n_));
        return true;
    }

    std::size_t size() const {
        return basis_.size();
    }
    const CMatrix &element(std::size_t i) const {
        return basis_[i];
    }
    std::vector<CMatrix> take() {
        return std::move(basis_);
    }

  private:
    Index n_;
    double threshold_;
    CMatrix columns_;
    std::vector<CMatrix> basis_;
};

CMatrix matrix_unit(Index n, Index i, Index j) {
    CMatrix e = CMatrix::Zero(n, n);
    e(i, j) = 1.0;
    return e;
}

/// Cyclic shift and diag(0, 1, ..., k-1); together they generate Mat(k).
std::vector<CMatrix> full_matrix_generators(Index k) {
    CMatrix shift = CMatrix::Zero(k, k);
    CMatrix clock = CMatrix::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
        shift((i + 1) % k, i) = 1.0;
        clock(i, i) = static_cast<double>(i);
    }
    return {shift, clock};
}

/// Parts at or below `relative` times the element's norm are rounding noise.
std::vector<CMatrix> hermitian_parts(const std::vector<CMatrix> &elements, double relative) {
    std::vector<CMatrix> out;
    for (const CMatrix &g : elements) {
        CMatrix re = 0.5 * (g + g.adjoint());
        CMatrix im = Complex(0.0, -0.5) * (g - g.adjoint());
        double scale = hs_norm(g);
        if (hs_norm(re) > relative * scale) {
            out.push_back(re);
        }
        if (hs_norm(im) > relative * scale) {
            out.push_back(im);
        }
    }
    return out;
}

/// Orthonormal basis of the intersection of two column spans.
CMatrix span_intersection(const CMatrix &qa, const CMatrix &qb, double tol) {
    if (qa.cols() == 0 || qb.cols() == 0) {
        return CMatrix(qa.rows(), 0);
    }
    Eigen::JacobiSVD<CMatrix> svd(qa.adjoint() * qb, Eigen::ComputeFullU);
    const RVector &sigma = svd.singularValues();
    Index k = 0;
    while (k < sigma.size() && sigma(k) >= 1.0 - tol) {
        ++k;
    }
    return qa * svd.matrixU().leftCols(k);
}

CMatrix basis_columns(const Subalgebra &s) {
    const auto &basis = s.basis();
    Index n = s.ambient_dim();
    CMatrix q(n * n, static_cast<Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        q.col(static_cast<Index>(j)) = vec(basis[j]);
    }
    return q;
}

}  // namespace

Subalgebra generate(const std::vector<CMatrix> &generators, Index n, const Tolerances &tol) {
    if (n < 1 || n > kMaxDim) {
        throw Error(ErrorKind::InvalidArgument, "ambient dimension out of range");
    }
    for (const CMatrix &g : generators) {
        if (g.rows() != n || g.cols() != n) {
            throw Error(ErrorKind::DimMismatch, "generator is not " + std::to_string(n) + "x" + std::to_string(n));
        }
        require_square(g, "generator");
    }
    BasisBuilder builder(n, tol.closure);
    builder.add(identity(n));
    for (const CMatrix &g : generators) {
        builder.add(g);
        builder.add(g.adjoint());
    }
    const std::size_t cap = static_cast<std::size_t>(n * n);
    std::size_t frontier = 0;
    while (builder.size() < cap) {
        std::size_t size = builder.size();
        bool grew = false;
        for (std::size_t i = 0; i < size && builder.size() < cap; ++i) {
            for (std::size_t j = 0; j < size && builder.size() < cap; ++j) {
                if (std::max(i, j) < frontier) {
                    continue;
                }
                grew |= builder.add(builder.element(i) * builder.element(j));
            }
        }
        frontier = size;
        if (!grew) {
            break;
        }
    }
    if (builder.size() > cap) {
        throw Error(ErrorKind::Internal, "generated span exceeded n^2");
    }
    return Subalgebra::from_orthonormal_basis(n, builder.take(), generators);
}

Subalgebra span_subalgebra(const std::vector<CMatrix> &elements, Index n, const Tolerances &tol) {
    CMatrix columns(n * n, static_cast<Index>(elements.size()));
    for (std::size_t j = 0; j < elements.size(); ++j) {
        if (elements[j].rows() != n || elements[j].cols() != n) {
            throw Error(ErrorKind::DimMismatch, "span element has the wrong size");
        }
        columns.col(static_cast<Index>(j)) = vec(elements[j]);
    }
    CMatrix q = range_basis(columns, tol);
    std::vector<CMatrix> basis;
    for (Index j = 0; j < q.cols(); ++j) {
        basis.push_back(unvec(q.col(j), n));
    }
    return Subalgebra::from_orthonormal_basis(n, std::move(basis), elements);
}

Subalgebra left_factor_algebra(Index k, Index m) {
    Index n = k * m;
    std::vector<CMatrix> gens;
    for (const CMatrix &g : full_matrix_generators(k)) {
        gens.push_back(kron(g, identity(m)));
    }
    auto basis = [k, m] {
        std::vector<CMatrix> out;
        double scale = 1.0 / std::sqrt(static_cast<double>(m));
        for (Index i = 0; i < k; ++i) {
            for (Index j = 0; j < k; ++j) {
                out.push_back(scale * kron(matrix_unit(k, i, j), identity(m)));
            }
        }
        return out;
    };
    auto projector = [k, m](const CMatrix &x) {
        CMatrix reduced = CMatrix::Zero(k, k);
        for (Index i = 0; i < k; ++i) {
            for (Index j = 0; j < k; ++j) {
                for (Index a = 0; a < m; ++a) {
                    reduced(i, j) += x(i * m + a, j * m + a);
                }
            }
        }
        return CMatrix(kron(reduced / static_cast<double>(m), identity(m)));
    };
    return Subalgebra::structured(n, std::move(gens), k * k, basis, projector);
}

Subalgebra right_factor_algebra(Index k, Index m) {
    Index n = k * m;
    std::vector<CMatrix> gens;
    for (const CMatrix &g : full_matrix_generators(m)) {
        gens.push_back(kron(identity(k), g));
    }
    auto basis = [k, m] {
        std::vector<CMatrix> out;
        double scale = 1.0 / std::sqrt(static_cast<double>(k));
        for (Index i = 0; i < m; ++i) {
            for (Index j = 0; j < m; ++j) {
                out.push_back(scale * kron(identity(k), matrix_unit(m, i, j)));
            }
        }
        return out;
    };
    auto projector = [k, m](const CMatrix &x) {
        CMatrix reduced = CMatrix::Zero(m, m);
        for (Index a = 0; a < k; ++a) {
            reduced += x.block(a * m, a * m, m, m);
        }
        return CMatrix(kron(identity(k), reduced / static_cast<double>(k)));
    };
    return Subalgebra::structured(n, std::move(gens), m * m, basis, projector);
}

Subalgebra scalar_algebra(Index n) {
    return Subalgebra::from_orthonormal_basis(n, {identity(n) / std::sqrt(static_cast<double>(n))}, {});
}

Subalgebra full_algebra(Index n) {
    auto basis = [n] {
        std::vector<CMatrix> out;
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                out.push_back(matrix_unit(n, i, j));
            }
        }
        return out;
    };
    return Subalgebra::structured(n, full_matrix_generators(n), n * n, basis, [](const CMatrix &x) { return x; });
}

Subalgebra commutant(const Subalgebra &s, const Tolerances &tol) {
    const Index n = s.ambient_dim();
    std::vector<CMatrix> gens = hermitian_parts(s.generators(), tol.rank);
    if (gens.empty()) {
        return full_algebra(n);
    }

    // M' is contained in {H}' for any H in M. A generic real combination of the
    // Hermitian generators has the coarsest eigenspace structure M allows, so
    // {H}' (block diagonal in H's eigenbasis) is a small search space.
    Rng rng(0x6f706c6162ULL);
    CMatrix h = CMatrix::Zero(n, n);
    for (const CMatrix &g : gens) {
        h += random_uniform(0.5, 1.5, rng) * g / std::max(1.0, operator_norm(g));
    }
    h = symmetrize(h);
    HermEig eig = herm_eig(h, tol);
    const CMatrix &u = eig.vectors;

    double spread = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    std::vector<Index> cluster(static_cast<std::size_t>(n), 0);
    for (Index i = 1; i < n; ++i) {
        bool split = eig.values(i) - eig.values(i - 1) > tol.eigen_cluster * spread;
        cluster[static_cast<std::size_t>(i)] = cluster[static_cast<std::size_t>(i - 1)] + (split ? 1 : 0);
    }
    std::vector<std::pair<Index, Index>> units;
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (cluster[static_cast<std::size_t>(a)] == cluster[static_cast<std::size_t>(b)]) {
                units.emplace_back(a, b);
            }
        }
    }
    const Index d = static_cast<Index>(units.size());

    // Stack the commutator constraints generator by generator, compressing to
    // the triangular QR factor so the working matrix never exceeds (d + n^2) x d.
    CMatrix r(0, d);
    for (const CMatrix &g : gens) {
        double scale = operator_norm(g);
        if (scale == 0.0) {
            continue;
        }
        CMatrix rotated = u.adjoint() * g * u / scale;
        CMatrix block(n * n, d);
        for (Index c = 0; c < d; ++c) {
            auto [a, b] = units[static_cast<std::size_t>(c)];
            CMatrix comm = CMatrix::Zero(n, n);
            comm.row(a) += rotated.row(b);
            comm.col(b) -= rotated.col(a);
            block.col(c) = vec(comm);
        }
        CMatrix stacked(r.rows() + block.rows(), d);
        stacked << r, block;
        Eigen::HouseholderQR<CMatrix> qr(stacked);
        Index keep = std::min(stacked.rows(), d);
        r = qr.matrixQR().topRows(keep).triangularView<Eigen::Upper>();
    }

    Tolerances null_tol = tol;
    null_tol.rank = std::max(tol.rank, 1e-9);
    CMatrix kernel = null_space(r, null_tol, 1.0);

    std::vector<CMatrix> basis;
    basis.reserve(static_cast<std::size_t>(kernel.cols()));
    for (Index j = 0; j < kernel.cols(); ++j) {
        CMatrix x = CMatrix::Zero(n, n);
        for (Index c = 0; c < d; ++c) {
            auto [a, b] = units[static_cast<std::size_t>(c)];
            x(a, b) = kernel(c, j);
        }
        basis.push_back(u * x * u.adjoint());
    }
    std::vector<CMatrix> generators = basis;
    return Subalgebra::from_orthonormal_basis(n, std::move(basis), std::move(generators));
}

double span_distance(const Subalgebra &a, const Subalgebra &b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error(ErrorKind::DimMismatch, "subalgebras live in different ambient algebras");
    }
    return operator_norm(a.span_projector() - b.span_projector());
}

double inclusion_residual(const Subalgebra &outer, const Subalgebra &inner) {
    if (outer.ambient_dim() != inner.ambient_dim()) {
        throw Error(ErrorKind::DimMismatch, "subalgebras live in different ambient algebras");
    }
    double worst = 0.0;
    for (const CMatrix &b : inner.basis()) {
        worst = std::max(worst, outer.membership_residual(b));
    }
    return worst;
}

BicommutantReport bicommutant_check(const Subalgebra &s, const Tolerances &tol) {
    Subalgebra first = commutant(s, tol);
    Subalgebra second = commutant(first, tol);
    Subalgebra third = commutant(second, tol);
    BicommutantReport report{};
    report.bicommutant_distance = span_distance(second, s);
    report.tricommutant_distance = span_distance(third, first);
    report.holds =
        report.bicommutant_distance <= tol.span_equality && report.tricommutant_distance <= tol.span_equality;
    return report;
}

CenterResult center(const Subalgebra &s, const Tolerances &tol) {
    Subalgebra prime = commutant(s, tol);
    CMatrix common = span_intersection(basis_columns(s), basis_columns(prime), tol.span_equality);
    Index n = s.ambient_dim();
    std::vector<CMatrix> basis;
    for (Index j = 0; j < common.cols(); ++j) {
        basis.push_back(unvec(common.col(j), n));
    }
    bool factor = basis.size() == 1;
    std::vector<CMatrix> generators = basis;
    return {Subalgebra::from_orthonormal_basis(n, std::move(basis), std::move(generators)), factor};
}

Projection::Projection(CMatrix matrix, const Tolerances &tol) : matrix_(std::move(matrix)) {
    require_square(matrix_, "projection");
    double herm = operator_norm(matrix_ - matrix_.adjoint());
    double idem = operator_norm(matrix_ * matrix_ - matrix_);
    if (herm > tol.projection || idem > tol.projection) {
        throw Error(ErrorKind::NotProjection, "||P - P*|| = " + std::to_string(herm) +
                                                  ", ||P^2 - P|| = " + std::to_string(idem));
    }
}

Index Projection::rank() const {
    return static_cast<Index>(std::llround(matrix_.trace().real()));
}

CMatrix Projection::range() const {
    HermEig eig = herm_eig(symmetrize(matrix_));
    Index r = rank();
    return eig.vectors.rightCols(r);
}

namespace {

Projection projector_onto(const CMatrix &columns, Index n, const Tolerances &tol) {
    if (columns.cols() == 0) {
        return Projection(CMatrix::Zero(n, n), tol);
    }
    return Projection(symmetrize(columns * columns.adjoint()), tol);
}

void require_same_ambient(const Projection &e, const Projection &f) {
    if (e.ambient_dim() != f.ambient_dim()) {
        throw Error(ErrorKind::DimMismatch, "projections live in different ambient spaces");
    }
}

}  // namespace

Projection proj_meet(const Projection &e, const Projection &f, const Tolerances &tol) {
    require_same_ambient(e, f);
    CMatrix common = span_intersection(e.range(), f.range(), 1e-8);
    return projector_onto(common, e.ambient_dim(), tol);
}

Projection proj_join(const Projection &e, const Projection &f, const Tolerances &tol) {
    require_same_ambient(e, f);
    CMatrix ranges(e.ambient_dim(), e.rank() + f.rank());
    ranges << e.range(), f.range();
    return projector_onto(range_basis(ranges, tol), e.ambient_dim(), tol);
}

bool is_subprojection(const Projection &e, const Projection &f, const Tolerances &tol) {
    require_same_ambient(e, f);
    const CMatrix &em = e.matrix();
    const CMatrix &fm = f.matrix();
    Index n = e.ambient_dim();
    double eps = 1e-8;

    bool range_inclusion = e.rank() == 0 || operator_norm((identity(n) - fm) * e.range()) <= eps;
    bool fe_is_e = operator_norm(fm * em - em) <= eps;
    bool ef_is_e = operator_norm(em * fm - em) <= eps;

    bool norms_dominated = true;
    Rng rng(0x73756270ULL);
    std::vector<CVector> frame;
    for (Index i = 0; i < n; ++i) {
        frame.push_back(basis_vector(n, i));
    }
    for (int k = 0; k < 8; ++k) {
        frame.push_back(random_unit_vector(n, rng));
    }
    // Frame vectors biased toward ran(E) make a violation visible when it exists.
    CMatrix er = e.range();
    for (Index j = 0; j < er.cols(); ++j) {
        frame.push_back(er.col(j));
    }
    for (const CVector &x : frame) {
        if ((em * x).norm() > (fm * x).norm() + eps) {
            norms_dominated = false;
        }
    }
    bool ordered = herm_eig(symmetrize(fm - em), tol).values(0) >= -eps;

    bool verdict = range_inclusion;
    if (fe_is_e != verdict || ef_is_e != verdict || norms_dominated != verdict || ordered != verdict) {
        throw Error(ErrorKind::InconsistentCriteria,
                    std::string("subprojection criteria disagree: range=") + (range_inclusion ? "1" : "0") +
                        " FE=" + (fe_is_e ? "1" : "0") + " EF=" + (ef_is_e ? "1" : "0") +
                        " norms=" + (norms_dominated ? "1" : "0") + " order=" + (ordered ? "1" : "0"));
    }
    return verdict;
}

std::optional<CMatrix> mvn_equivalent(const Projection &e, const Projection &f, const Tolerances &) {
    require_same_ambient(e, f);
    if (e.rank() != f.rank()) {
        return std::nullopt;
    }
    return f.range() * e.range().adjoint();
}

Index dimension_function(const Projection &e, const Subalgebra &m, const Tolerances &tol) {
    if (e.ambient_dim() != m.ambient_dim()) {
        throw Error(ErrorKind::DimMismatch, "projection and algebra live in different ambient spaces");
    }
    if (!center(m, tol).is_factor) {
        throw Error(ErrorKind::NotFactor, "dimension function requires a factor");
    }
    double residual = m.membership_residual(e.matrix());
    if (residual > 1e-8 * std::max(1.0, hs_norm(e.matrix()))) {
        throw Error(ErrorKind::NotInAlgebra, "projection lies outside the algebra (residual " +
                                                 std::to_string(residual) + ")");
    }
    double n = static_cast<double>(m.ambient_dim());
    double value = static_cast<double>(e.rank()) * std::sqrt(static_cast<double>(m.dim())) / n;
    double rounded = std::round(value);
    if (std::abs(value - rounded) > tol.integer_dimension) {
        throw Error(ErrorKind::NonIntegerDimension, "d(E) = " + std::to_string(value));
    }
    return static_cast<Index>(rounded);
}

State tracial_state(const Subalgebra &m) {
    return State::maximally_mixed(m.ambient_dim());
}

}  // namespace oplab
