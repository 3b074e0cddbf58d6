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

#include "oplab/net.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "oplab/errors.hpp"
#include "oplab/states.hpp"

namespace oplab {

CausalSite::CausalSite(std::vector<SpacetimePoint> points) : points_(std::move(points)) {
    if (static_cast<Index>(points_.size()) > kMaxSitePoints) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "site has " + std::to_string(points_.size()) + " points, at most 12 are supported");
    }
}

CausalSite CausalSite::lattice(int rows, int cols) {
    if (rows < 0 || cols < 0) {
        throw Error(ErrorKind::InvalidArgument, "lattice extents must be nonnegative");
    }
    std::vector<SpacetimePoint> pts;
    for (int t = 0; t < rows; ++t) {
        for (int x = 0; x < cols; ++x) {
            pts.push_back({t, x});
        }
    }
    return CausalSite(std::move(pts));
}

bool CausalSite::disjoint(Index p, Index q) const {
    const auto &a = points_.at(static_cast<std::size_t>(p));
    const auto &b = points_.at(static_cast<std::size_t>(q));
    return std::abs(a.x - b.x) > std::abs(a.t - b.t);
}

std::optional<Index> CausalSite::find(SpacetimePoint p) const {
    auto it = std::find(points_.begin(), points_.end(), p);
    if (it == points_.end()) {
        return std::nullopt;
    }
    return static_cast<Index>(it - points_.begin());
}

Region make_region(const CausalSite &site, std::vector<Index> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (Index p : points) {
        if (p < 0 || p >= site.size()) {
            throw Error(ErrorKind::InvalidArgument, "region point " + std::to_string(p) + " is not on the site");
        }
    }
    return Region{std::move(points)};
}

bool regions_disjoint(const CausalSite &site, const Region &a, const Region &b) {
    for (Index p : a.points) {
        for (Index q : b.points) {
            if (!site.disjoint(p, q)) {
                return false;
            }
        }
    }
    return true;
}

Region causal_diamond(const CausalSite &site, SpacetimePoint center, int radius) {
    std::vector<Index> pts;
    for (Index p = 0; p < site.size(); ++p) {
        const auto &q = site.points()[static_cast<std::size_t>(p)];
        if (std::abs(q.t - center.t) + std::abs(q.x - center.x) <= radius) {
            pts.push_back(p);
        }
    }
    return Region{pts};
}

namespace {

CMatrix pauli_by_index(int k) {
    switch (k) {
    case 1:
        return pauli::x();
    case 2:
        return pauli::y();
    default:
        return pauli::z();
    }
}

Index bit_of(Index qubit, Index qubits) {
    return qubits - 1 - qubit;
}

struct LegLayout {
    std::vector<Index> source_index;  // source basis index carried by each target basis index
    Index image_mask;                 // target bits that belong to image legs
};

LegLayout layout(const LegEmbedding &alpha) {
    const Index m = alpha.target_qubits();
    const Index k = alpha.source_qubits();
    LegLayout out{std::vector<Index>(static_cast<std::size_t>(alpha.target_dim()), 0), 0};
    for (Index leg : alpha.legs()) {
        out.image_mask |= Index{1} << bit_of(leg, m);
    }
    for (Index big = 0; big < alpha.target_dim(); ++big) {
        Index s = 0;
        for (Index i = 0; i < k; ++i) {
            if ((big >> bit_of(alpha.legs()[static_cast<std::size_t>(i)], m)) & 1) {
                s |= Index{1} << bit_of(i, k);
            }
        }
        out.source_index[static_cast<std::size_t>(big)] = s;
    }
    return out;
}

// r(s, t) = sum of x(I, J) over target indices with matching complement legs
// that carry source indices s and t; equivalently r(s, t) = Tr(x^T alpha(E_st)).
CMatrix reduce(const LegEmbedding &alpha, const CMatrix &x) {
    const LegLayout lay = layout(alpha);
    const Index dim = alpha.target_dim();
    CMatrix out = CMatrix::Zero(alpha.source_dim(), alpha.source_dim());
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            if ((i & ~lay.image_mask) == (j & ~lay.image_mask)) {
                out(lay.source_index[static_cast<std::size_t>(i)], lay.source_index[static_cast<std::size_t>(j)]) +=
                    x(i, j);
            }
        }
    }
    return out;
}

double trace_product(const CMatrix &rho, const CMatrix &x) {
    return (rho.transpose().cwiseProduct(x)).sum().real();
}

}  // namespace

std::vector<CMatrix> point_paulis(const CausalSite &site, Index p) {
    if (p < 0 || p >= site.size()) {
        throw Error(ErrorKind::InvalidArgument, "point " + std::to_string(p) + " is not on the site");
    }
    LegEmbedding at(1, site.size(), {p});
    return {at.apply(pauli::x()), at.apply(pauli::y()), at.apply(pauli::z())};
}

Subalgebra algebra_of(const CausalSite &site, const Region &r) {
    const Index n = site.hilbert_dim();
    std::vector<CMatrix> gens;
    for (Index p : r.points) {
        auto ps = point_paulis(site, p);
        gens.push_back(ps[0]);
        gens.push_back(ps[2]);
    }
    LegEmbedding inclusion = region_inclusion(site, r);
    const Index k = static_cast<Index>(r.points.size());
    const Index dim = Index{1} << (2 * k);
    auto basis = [inclusion, k, n, dim] {
        std::vector<CMatrix> out;
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (Index code = 0; code < dim; ++code) {
            CMatrix string = CMatrix::Identity(1, 1);
            for (Index i = 0; i < k; ++i) {
                int letter = static_cast<int>((code >> (2 * (k - 1 - i))) & 3);
                string = kron(string, letter == 0 ? identity(2) : pauli_by_index(letter));
            }
            out.push_back(scale * inclusion.apply(string));
        }
        return out;
    };
    auto projector = [inclusion, n](const CMatrix &x) {
        double comp = static_cast<double>(n / inclusion.source_dim());
        return CMatrix(inclusion.apply(reduce(inclusion, x) / comp));
    };
    return Subalgebra::structured(n, std::move(gens), dim, basis, projector);
}

IsotonyReport check_isotony(const CausalSite &site, const std::vector<std::pair<Region, Region>> &nested,
                            double threshold) {
    IsotonyReport report{{}, true};
    for (const auto &[inner, outer] : nested) {
        if (!std::includes(outer.points.begin(), outer.points.end(), inner.points.begin(), inner.points.end())) {
            throw Error(ErrorKind::InvalidArgument, describe(inner) + " is not inside " + describe(outer));
        }
        Subalgebra small = algebra_of(site, inner);
        Subalgebra big = algebra_of(site, outer);
        double residual = big.membership_residual(identity(site.hilbert_dim())) /
                          std::sqrt(static_cast<double>(site.hilbert_dim()));
        for (const CMatrix &g : small.generators()) {
            residual = std::max(residual, big.membership_residual(g) / g.norm());
        }
        bool holds = residual <= threshold;
        report.entries.push_back({inner, outer, residual, holds});
        report.holds = report.holds && holds;
    }
    return report;
}

CausalityReport check_causality(const CausalSite &site, const std::vector<std::pair<Region, Region>> &pairs,
                                double threshold) {
    CausalityReport report{{}, true};
    for (const auto &[a, b] : pairs) {
        CausalityEntry entry{a, b, regions_disjoint(site, a, b), 0.0, std::nullopt};
        for (Index p : a.points) {
            auto pa = point_paulis(site, p);
            for (Index q : b.points) {
                auto pb = point_paulis(site, q);
                for (int i = 0; i < 3; ++i) {
                    for (int j = 0; j < 3; ++j) {
                        CMatrix c = commutator(pa[static_cast<std::size_t>(i)], pb[static_cast<std::size_t>(j)]);
                        if (c.norm() == 0.0) {
                            continue;
                        }
                        double norm = operator_norm(c);
                        if (norm > entry.max_commutator) {
                            entry.max_commutator = norm;
                            entry.witness = Witness{p, i + 1, q, j + 1, norm};
                        }
                    }
                }
            }
        }
        if (entry.disjoint && entry.max_commutator > threshold) {
            report.holds = false;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

QuasilocalReport check_quasilocal(const CausalSite &site, const Tolerances &tol) {
    const Index n = site.hilbert_dim();
    std::vector<CMatrix> gens;
    for (Index p = 0; p < site.size(); ++p) {
        for (const CMatrix &g : point_paulis(site, p)) {
            gens.push_back(g);
        }
    }
    Subalgebra local = Subalgebra::structured(
        n, gens, n * n, [] { return std::vector<CMatrix>{}; }, [](const CMatrix &x) { return x; });
    Subalgebra prime = commutant(local, tol);
    return QuasilocalReport{prime.dim(), prime.dim() == 1};
}

SiteEmbedding::SiteEmbedding(CausalSite source, CausalSite target, std::vector<Index> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (static_cast<Index>(map_.size()) != source_.size()) {
        throw Error(ErrorKind::NotAnEmbedding, "point map has the wrong length");
    }
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (map_[i] < 0 || map_[i] >= target_.size()) {
            throw Error(ErrorKind::NotAnEmbedding, "point " + std::to_string(i) + " maps outside the target");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (map_[i] == map_[j]) {
                throw Error(ErrorKind::NotAnEmbedding, "points " + std::to_string(j) + " and " + std::to_string(i) +
                                                           " share an image");
            }
            if (source_.disjoint(static_cast<Index>(i), static_cast<Index>(j)) != target_.disjoint(map_[i], map_[j])) {
                throw Error(ErrorKind::NotAnEmbedding, "points " + std::to_string(j) + " and " + std::to_string(i) +
                                                           " change causal relation");
            }
        }
    }
}

SiteEmbedding SiteEmbedding::identity(const CausalSite &site) {
    std::vector<Index> map(static_cast<std::size_t>(site.size()));
    for (Index p = 0; p < site.size(); ++p) {
        map[static_cast<std::size_t>(p)] = p;
    }
    return SiteEmbedding(site, site, std::move(map));
}

SiteEmbedding SiteEmbedding::translation(const CausalSite &source, const CausalSite &target, int dt, int dx) {
    std::vector<Index> map;
    for (const auto &p : source.points()) {
        auto image = target.find({p.t + dt, p.x + dx});
        if (!image) {
            throw Error(ErrorKind::NotAnEmbedding, "translated point (" + std::to_string(p.t + dt) + ", " +
                                                       std::to_string(p.x + dx) + ") is not on the target");
        }
        map.push_back(*image);
    }
    return SiteEmbedding(source, target, std::move(map));
}

SiteEmbedding compose(const SiteEmbedding &outer, const SiteEmbedding &inner) {
    if (!(inner.target() == outer.source())) {
        throw Error(ErrorKind::NotAnEmbedding, "embeddings are not composable");
    }
    std::vector<Index> map;
    for (Index p : inner.map()) {
        map.push_back(outer.map()[static_cast<std::size_t>(p)]);
    }
    return SiteEmbedding(inner.source(), outer.target(), std::move(map));
}

LegEmbedding::LegEmbedding(Index source_qubits, Index target_qubits, std::vector<Index> legs)
    : source_qubits_(source_qubits), target_qubits_(target_qubits), legs_(std::move(legs)) {
    if (static_cast<Index>(legs_.size()) != source_qubits_ || target_qubits_ > kMaxSitePoints) {
        throw Error(ErrorKind::NotAnEmbedding, "leg list does not match the qubit counts");
    }
    std::vector<bool> seen(static_cast<std::size_t>(target_qubits_), false);
    for (Index leg : legs_) {
        if (leg < 0 || leg >= target_qubits_ || seen[static_cast<std::size_t>(leg)]) {
            throw Error(ErrorKind::NotAnEmbedding, "legs must be distinct target qubits");
        }
        seen[static_cast<std::size_t>(leg)] = true;
    }
}

CMatrix LegEmbedding::apply(const CMatrix &a) const {
    if (a.rows() != source_dim() || a.cols() != source_dim()) {
        throw Error(ErrorKind::DimMismatch, "operator does not act on the source qubits");
    }
    const LegLayout lay = layout(*this);
    const Index dim = target_dim();
    CMatrix out = CMatrix::Zero(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            if ((i & ~lay.image_mask) == (j & ~lay.image_mask)) {
                out(i, j) = a(lay.source_index[static_cast<std::size_t>(i)], lay.source_index[static_cast<std::size_t>(j)]);
            }
        }
    }
    return out;
}

LegEmbedding embed(const SiteEmbedding &e) {
    return LegEmbedding(e.source().size(), e.target().size(), e.map());
}

LegEmbedding compose(const LegEmbedding &outer, const LegEmbedding &inner) {
    if (inner.target_qubits() != outer.source_qubits()) {
        throw Error(ErrorKind::DimMismatch, "leg embeddings are not composable");
    }
    std::vector<Index> legs;
    for (Index leg : inner.legs()) {
        legs.push_back(outer.legs()[static_cast<std::size_t>(leg)]);
    }
    return LegEmbedding(inner.source_qubits(), outer.target_qubits(), std::move(legs));
}

LegEmbedding region_inclusion(const CausalSite &site, const Region &r) {
    return LegEmbedding(static_cast<Index>(r.points.size()), site.size(), r.points);
}

FunctorReport check_functor_laws(const SiteEmbedding &e1, const SiteEmbedding &e2, double threshold) {
    SiteEmbedding both = compose(e2, e1);
    LegEmbedding a1 = embed(e1);
    LegEmbedding a2 = embed(e2);
    LegEmbedding a21 = embed(both);
    LegEmbedding id = embed(SiteEmbedding::identity(e1.source()));
    FunctorReport r{};
    const double scale = static_cast<double>(a21.target_dim() / a21.source_dim());
    for (Index p = 0; p < e1.source().size(); ++p) {
        for (const CMatrix &g : point_paulis(e1.source(), p)) {
            r.identity_law = std::max(r.identity_law, operator_norm(id.apply(g) - g));
            CMatrix direct = a21.apply(g);
            r.composition_law = std::max(r.composition_law, operator_norm(direct - a2.apply(a1.apply(g))));
            r.injectivity = std::max(r.injectivity, std::abs(direct.squaredNorm() / scale - g.squaredNorm()));
        }
    }
    r.holds = r.identity_law <= threshold && r.composition_law <= threshold && r.injectivity <= threshold;
    return r;
}

State pullback(const LegEmbedding &alpha, const State &target_state) {
    if (target_state.dim() != alpha.target_dim()) {
        throw Error(ErrorKind::DimMismatch, "state does not live on the target algebra");
    }
    // sigma_ji = Tr(rho' alpha(E_ij)) pairs the state with the matrix-unit basis,
    // whose HS dual is the transposed unit.
    CMatrix sigma = reduce(alpha, target_state.rho().transpose()).transpose();
    return State(symmetrize(sigma));
}

State extend_state(const LegEmbedding &alpha, const State &source_state) {
    if (source_state.dim() != alpha.source_dim()) {
        throw Error(ErrorKind::DimMismatch, "state does not live on the source algebra");
    }
    double comp = static_cast<double>(alpha.target_dim() / alpha.source_dim());
    return State(alpha.apply(source_state.rho()) / comp);
}

TransportValues chsh_transport(const AdmissibleQuadruple &q, const LegEmbedding &alpha, const State &target_state) {
    BellOperator original = bell_operator(q);
    if (q.dim() != alpha.source_dim() || target_state.dim() != alpha.target_dim()) {
        throw Error(ErrorKind::DimMismatch, "quadruple, embedding and state dimensions disagree");
    }
    AdmissibleQuadruple moved{alpha.apply(q.a1), alpha.apply(q.a2), alpha.apply(q.b1), alpha.apply(q.b2)};
    BellOperator embedded = bell_operator(moved);
    return TransportValues{trace_product(target_state.rho(), embedded.matrix),
                           chsh_value(pullback(alpha, target_state), original)};
}

State independence_product(const CausalSite &site, const Region &r1, const Region &r2, const State &s1,
                           const State &s2) {
    if (!regions_disjoint(site, r1, r2)) {
        throw Error(ErrorKind::RegionsNotDisjoint, describe(r1) + " and " + describe(r2) + " are not causally disjoint");
    }
    std::vector<Index> legs = r1.points;
    legs.insert(legs.end(), r2.points.begin(), r2.points.end());
    LegEmbedding alpha(static_cast<Index>(legs.size()), site.size(), legs);
    if (s1.dim() != (Index{1} << r1.points.size()) || s2.dim() != (Index{1} << r2.points.size())) {
        throw Error(ErrorKind::DimMismatch, "region states have the wrong dimension");
    }
    return extend_state(alpha, product_state(s1, s2));
}

std::string describe(const Region &r) {
    std::string out = "{";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        out += (i ? "," : "") + std::to_string(r.points[i]);
    }
    return out + "}";
}

}  // namespace oplab
