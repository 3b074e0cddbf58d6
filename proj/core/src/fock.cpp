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

#include "oplab/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "oplab/errors.hpp"

namespace oplab {

const char *to_string(Statistics s) {
    return s == Statistics::bose ? "bose" : "fermi";
}

namespace {

void compositions(int remaining, int slot, std::vector<int> &current, std::vector<std::vector<int>> &out) {
    if (slot + 1 == static_cast<int>(current.size())) {
        current[slot] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current[slot] = k;
        compositions(remaining - k, slot + 1, current, out);
    }
}

double binomial(double n, double k) {
    double r = 1.0;
    for (int i = 1; i <= static_cast<int>(k); ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void require_dim(const FockSpace &space, const CVector &f) {
    if (f.size() != space.one_particle_dim()) {
        throw Error(ErrorKind::DimMismatch, "one-particle vector has dimension " + std::to_string(f.size()) +
                                                ", expected " + std::to_string(space.one_particle_dim()));
    }
}

void require_bose(const FockSpace &space, const char *what) {
    if (space.statistics() != Statistics::bose) {
        throw Error(ErrorKind::WrongStatistics, std::string(what) + " needs a bosonic Fock space");
    }
}

void require_fermi(const FockSpace &space, const char *what) {
    if (space.statistics() != Statistics::fermi) {
        throw Error(ErrorKind::WrongStatistics, std::string(what) + " needs a fermionic Fock space");
    }
}

double factorial(Index n) {
    return std::tgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

FockSpace::FockSpace(Index d, Index n_max, Statistics statistics)
    : d_(d), n_max_(statistics == Statistics::fermi ? d : n_max), statistics_(statistics) {
    if (d < 1 || n_max < 0) {
        throw Error(ErrorKind::InvalidArgument, "Fock space needs d >= 1 and n_max >= 0");
    }
    double total = statistics == Statistics::bose ? binomial(static_cast<double>(d + n_max_), static_cast<double>(d))
                                                  : std::ldexp(1.0, static_cast<int>(std::min<Index>(d, 62)));
    if (total > static_cast<double>(kMaxDim)) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "Fock space dimension " + std::to_string(static_cast<long long>(total)) + " exceeds the cap");
    }
    for (Index n = 0; n <= n_max_; ++n) {
        offsets_.push_back(static_cast<Index>(occupations_.size()));
        if (statistics == Statistics::bose) {
            std::vector<int> current(static_cast<std::size_t>(d), 0);
            compositions(static_cast<int>(n), 0, current, occupations_);
        } else {
            for (unsigned mask = 0; mask < (1u << d); ++mask) {
                if (std::popcount(mask) != n) {
                    continue;
                }
                std::vector<int> occ(static_cast<std::size_t>(d), 0);
                for (Index i = 0; i < d; ++i) {
                    occ[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
                }
                occupations_.push_back(std::move(occ));
            }
        }
        sector_dims_.push_back(static_cast<Index>(occupations_.size()) - offsets_.back());
    }
    for (std::size_t k = 0; k < occupations_.size(); ++k) {
        lookup_.emplace(occupations_[k], static_cast<Index>(k));
    }
}

Index FockSpace::sector_offset(Index n) const {
    if (n < 0 || n > n_max_) {
        throw Error(ErrorKind::SectorOverflow, "sector " + std::to_string(n) + " is outside the Fock space");
    }
    return offsets_[static_cast<std::size_t>(n)];
}

Index FockSpace::particle_number(Index k) const {
    const auto &occ = occupation(k);
    return std::accumulate(occ.begin(), occ.end(), Index{0});
}

Index FockSpace::index_of(const std::vector<int> &occupation) const {
    if (static_cast<Index>(occupation.size()) != d_) {
        return -1;
    }
    Index n = std::accumulate(occupation.begin(), occupation.end(), Index{0});
    if (n > n_max_ || std::any_of(occupation.begin(), occupation.end(), [](int m) { return m < 0; })) {
        return -1;
    }
    auto it = lookup_.find(occupation);
    return it == lookup_.end() ? -1 : it->second;
}

CVector FockSpace::vacuum() const {
    return basis_vector(total_dim(), 0);
}

CMatrix FockSpace::sector_projector(Index lo, Index hi) const {
    CMatrix p = CMatrix::Zero(total_dim(), total_dim());
    for (Index k = 0; k < total_dim(); ++k) {
        Index n = particle_number(k);
        if (n >= lo && n <= hi) {
            p(k, k) = 1.0;
        }
    }
    return p;
}

CVector FockVector::sector(Index n) const {
    return amplitudes.segment(space.sector_offset(n), space.sector_dims()[static_cast<std::size_t>(n)]);
}

CMatrix symmetrizer(Index n, Index d, Statistics parity) {
    if (n < 1 || d < 1) {
        throw Error(ErrorKind::InvalidArgument, "symmetrizer needs n >= 1 and d >= 1");
    }
    if (std::pow(static_cast<double>(d), static_cast<double>(n)) > static_cast<double>(kMaxDim)) {
        throw Error(ErrorKind::DimensionCapExceeded, "d^n exceeds the dimension cap");
    }
    Index dim = 1;
    for (Index i = 0; i < n; ++i) {
        dim *= d;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Index> digits(static_cast<std::size_t>(n));
    CMatrix p = CMatrix::Zero(dim, dim);
    const double weight = 1.0 / factorial(n);
    do {
        int inversions = 0;
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
            }
        }
        double sign = (parity == Statistics::fermi && inversions % 2) ? -1.0 : 1.0;
        for (Index col = 0; col < dim; ++col) {
            Index rest = col;
            for (Index i = n - 1; i >= 0; --i) {
                digits[static_cast<std::size_t>(i)] = rest % d;
                rest /= d;
            }
            Index row = 0;
            for (Index i = 0; i < n; ++i) {
                row = row * d + digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            }
            p(row, col) += sign * weight;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return p;
}

CMatrix sector_embedding(const FockSpace &space, Index n) {
    const Index d = space.one_particle_dim();
    const Index offset = space.sector_offset(n);
    const Index count = space.sector_dims()[static_cast<std::size_t>(n)];
    if (n == 0) {
        return CMatrix::Ones(1, 1);
    }
    CMatrix p = symmetrizer(n, d, space.statistics());
    CMatrix out(p.rows(), count);
    for (Index c = 0; c < count; ++c) {
        const auto &occ = space.occupation(offset + c);
        Index seed = 0;
        double norm = factorial(n);
        for (Index mode = 0; mode < d; ++mode) {
            for (int k = 0; k < occ[static_cast<std::size_t>(mode)]; ++k) {
                seed = seed * d + mode;
            }
            norm /= factorial(occ[static_cast<std::size_t>(mode)]);
        }
        out.col(c) = p.col(seed) * std::sqrt(norm);
    }
    return out;
}

CMatrix create(const FockSpace &space, const CVector &f) {
    require_dim(space, f);
    const Index dim = space.total_dim();
    const Index d = space.one_particle_dim();
    CMatrix a = CMatrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) {
        if (space.particle_number(k) >= space.max_particles()) {
            continue;
        }
        std::vector<int> occ = space.occupation(k);
        int below = 0;
        for (Index mode = 0; mode < d; ++mode) {
            int m = occ[static_cast<std::size_t>(mode)];
            if (space.statistics() == Statistics::fermi && m == 1) {
                ++below;
                continue;
            }
            occ[static_cast<std::size_t>(mode)] = m + 1;
            Index target = space.index_of(occ);
            occ[static_cast<std::size_t>(mode)] = m;
            double amp = space.statistics() == Statistics::bose ? std::sqrt(static_cast<double>(m + 1))
                                                                 : ((below % 2) ? -1.0 : 1.0);
            a(target, k) += f(mode) * amp;
        }
    }
    return a;
}

CMatrix annihilate(const FockSpace &space, const CVector &f) {
    return create(space, f).adjoint();
}

CMatrix number_operator(const FockSpace &space) {
    CMatrix n = CMatrix::Zero(space.total_dim(), space.total_dim());
    for (Index k = 0; k < space.total_dim(); ++k) {
        n(k, k) = static_cast<double>(space.particle_number(k));
    }
    return n;
}

double ccr_residual(const FockSpace &space, const CVector &f, const CVector &g) {
    require_bose(space, "ccr_residual");
    require_dim(space, f);
    require_dim(space, g);
    if (space.max_particles() == 0) {
        return 0.0;
    }
    CMatrix guard = space.sector_projector(0, space.max_particles() - 1);
    CMatrix c = commutator(annihilate(space, f), create(space, g)) - f.dot(g) * identity(space.total_dim());
    return operator_norm(c * guard);
}

CarReport car_check(const FockSpace &space, const CVector &f, const CVector &g) {
    require_fermi(space, "car_check");
    require_dim(space, f);
    require_dim(space, g);
    CMatrix af = annihilate(space, f);
    CMatrix ag = annihilate(space, g);
    CMatrix cf = create(space, f);
    CMatrix cg = create(space, g);
    CarReport r{};
    r.anticommutator = operator_norm(anticommutator(af, cg) - f.dot(g) * identity(space.total_dim()));
    r.annihilators = operator_norm(anticommutator(af, ag));
    r.creators = operator_norm(anticommutator(cf, cg));
    r.nilpotency = operator_norm(cf * cf);
    if (space.one_particle_dim() * space.one_particle_dim() <= kMaxDim) {
        CVector ff = kron(f, f);
        r.repeated_argument = (symmetrizer(2, space.one_particle_dim(), Statistics::fermi) * ff).norm();
    }
    r.max_residual = std::max({r.anticommutator, r.annihilators, r.creators, r.nilpotency, r.repeated_argument});
    return r;
}

CMatrix field(const FockSpace &space, const CVector &f) {
    require_bose(space, "field");
    CMatrix c = create(space, f);
    return (c + c.adjoint()) / std::sqrt(2.0);
}

CMatrix conjugate_field(const FockSpace &space, const CVector &f) {
    return field(space, Complex(0.0, 1.0) * f);
}

double field_commutator_residual(const FockSpace &space, const CVector &f, const CVector &g) {
    CMatrix pf = field(space, f);
    CMatrix pg = field(space, g);
    if (space.max_particles() < 2) {
        return 0.0;
    }
    CMatrix guard = space.sector_projector(0, space.max_particles() - 2);
    Complex expected(0.0, f.dot(g).imag());
    return operator_norm((commutator(pf, pg) - expected * identity(space.total_dim())) * guard);
}

CMatrix weyl(const FockSpace &space, const CVector &f) {
    HermEig eig = herm_eig(field(space, f));
    CVector phases = eig.values.unaryExpr([](double x) { return std::exp(Complex(0.0, x)); });
    return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Complex vacuum_weyl(const FockSpace &space, const CVector &f) {
    HermEig eig = herm_eig(field(space, f));
    Complex sum = 0.0;
    for (Index k = 0; k < eig.values.size(); ++k) {
        sum += std::norm(eig.vectors(0, k)) * std::exp(Complex(0.0, eig.values(k)));
    }
    return sum;
}

double weyl_distance_from_identity(const FockSpace &space, const CVector &f) {
    HermEig eig = herm_eig(field(space, f));
    double best = 0.0;
    for (Index k = 0; k < eig.values.size(); ++k) {
        best = std::max(best, std::abs(std::exp(Complex(0.0, eig.values(k))) - 1.0));
    }
    return best;
}

double weyl_relation_residual(const FockSpace &space, const CVector &f, const CVector &g, Index probe_sectors) {
    require_bose(space, "weyl_relation_residual");
    require_dim(space, f);
    require_dim(space, g);
    Complex phase = std::exp(Complex(0.0, -f.dot(g).imag() / 2.0));
    CMatrix diff = weyl(space, f) * weyl(space, g) - phase * weyl(space, f + g);
    Index hi = std::min(probe_sectors, space.max_particles());
    Index cols = space.sector_offset(hi) + space.sector_dims()[static_cast<std::size_t>(hi)];
    return operator_norm(diff.leftCols(cols));
}

FockVector multiparticle(const FockSpace &space, const std::vector<CVector> &fs) {
    const Index n = static_cast<Index>(fs.size());
    if (n > space.max_particles()) {
        throw Error(ErrorKind::SectorOverflow, std::to_string(n) + " particles exceed the cap of " +
                                                   std::to_string(space.max_particles()));
    }
    CVector v = space.vacuum();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        v = create(space, *it) * v;
    }
    return FockVector{space, v / std::sqrt(factorial(n))};
}

BogoliubovReport bogoliubov_check(const FockSpace &space, double theta, const CVector &f, const CVector &g) {
    require_bose(space, "bogoliubov_check");
    require_dim(space, f);
    require_dim(space, g);
    const Complex rotation = std::exp(Complex(0.0, theta));
    CVector tf = rotation * f;
    CVector tg = rotation * g;
    BogoliubovReport r{};
    r.symplectic = std::abs(tf.dot(tg).imag() - f.dot(g).imag());
    CVector gamma(space.total_dim());
    for (Index k = 0; k < space.total_dim(); ++k) {
        gamma(k) = std::exp(Complex(0.0, theta * static_cast<double>(space.particle_number(k))));
    }
    CMatrix moved = gamma.asDiagonal() * weyl(space, f) * gamma.conjugate().asDiagonal();
    r.weyl = operator_norm(moved - weyl(space, tf));
    return r;
}

std::vector<SweepPoint> vacuum_weyl_sweep(const CVector &f, const std::vector<Index> &n_maxes) {
    std::vector<SweepPoint> out;
    const double target = std::exp(-f.squaredNorm() / 4.0);
    for (Index n : n_maxes) {
        FockSpace space = FockSpace::bosonic(f.size(), n);
        out.push_back({n, std::abs(vacuum_weyl(space, f) - target)});
    }
    return out;
}

std::vector<SweepPoint> weyl_relation_sweep(const CVector &f, const CVector &g, const std::vector<Index> &n_maxes,
                                            Index probe_sectors) {
    std::vector<SweepPoint> out;
    for (Index n : n_maxes) {
        FockSpace space = FockSpace::bosonic(f.size(), n);
        out.push_back({n, weyl_relation_residual(space, f, g, probe_sectors)});
    }
    return out;
}

std::vector<SweepPoint> weyl_identity_distance_sweep(const CVector &f, const std::vector<Index> &n_maxes) {
    std::vector<SweepPoint> out;
    for (Index n : n_maxes) {
        FockSpace space = FockSpace::bosonic(f.size(), n);
        out.push_back({n, weyl_distance_from_identity(space, f)});
    }
    return out;
}

}  // namespace oplab
