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

// A finite net of observables over a causal lattice. Each point carries a
// qubit; the algebra of a region is Mat(2) at its points tensored with the
// identity elsewhere. Point 0 is the most significant qubit of the ambient
// basis index.

#include <optional>
#include <string>
#include <vector>

#include "oplab/algebra.hpp"
#include "oplab/bell.hpp"
#include "oplab/matcore.hpp"
#include "oplab/state.hpp"

namespace oplab {

struct SpacetimePoint {
    int t;
    int x;

    bool operator==(const SpacetimePoint &) const = default;
};

inline constexpr Index kMaxSitePoints = 12;

class CausalSite {
  public:
    /// Throws DimensionCapExceeded beyond kMaxSitePoints points.
    explicit CausalSite(std::vector<SpacetimePoint> points);

    /// rows x cols grid with t = 0..rows-1 and x = 0..cols-1, listed row by row.
    static CausalSite lattice(int rows, int cols);

    Index size() const {
        return static_cast<Index>(points_.size());
    }
    Index hilbert_dim() const {
        return Index{1} << size();
    }
    const std::vector<SpacetimePoint> &points() const {
        return points_;
    }
    /// |x_p - x_q| > |t_p - t_q|
    bool disjoint(Index p, Index q) const;
    /// Index of a point, or nullopt.
    std::optional<Index> find(SpacetimePoint p) const;

    bool operator==(const CausalSite &) const = default;

  private:
    std::vector<SpacetimePoint> points_;
};

struct Region {
    std::vector<Index> points;  // sorted, unique
};

/// Sorts and deduplicates. Throws InvalidArgument for indices outside the site.
Region make_region(const CausalSite &site, std::vector<Index> points);
/// Every point of a is disjoint from every point of b (so a and b share no point).
bool regions_disjoint(const CausalSite &site, const Region &a, const Region &b);
/// {p : |t_p - t0| + |x_p - x0| <= radius}.
Region causal_diamond(const CausalSite &site, SpacetimePoint center, int radius);

/// sigma_x, sigma_y, sigma_z at point p, identity elsewhere.
std::vector<CMatrix> point_paulis(const CausalSite &site, Index p);

/// Algebra of a region, with span dimension 4^|r|.
Subalgebra algebra_of(const CausalSite &site, const Region &r);

struct IsotonyEntry {
    Region inner;
    Region outer;
    double residual;  // largest membership residual of inner's generators in outer's algebra
    bool holds;
};

struct IsotonyReport {
    std::vector<IsotonyEntry> entries;
    bool holds;
};

/// Throws InvalidArgument when a pair is not nested.
IsotonyReport check_isotony(const CausalSite &site, const std::vector<std::pair<Region, Region>> &nested,
                            double threshold = 1e-10);

struct Witness {
    Index point_a;
    int pauli_a;  // 1, 2, 3 for x, y, z
    Index point_b;
    int pauli_b;
    double commutator_norm;
};

struct CausalityEntry {
    Region a;
    Region b;
    bool disjoint;
    double max_commutator;
    std::optional<Witness> witness;  // a non-commuting generator pair, when one exists
};

struct CausalityReport {
    std::vector<CausalityEntry> entries;
    bool holds;  // every disjoint pair commutes within the threshold
};

CausalityReport check_causality(const CausalSite &site, const std::vector<std::pair<Region, Region>> &pairs,
                                double threshold = 1e-12);

struct QuasilocalReport {
    Index commutant_dim;  // of the algebra generated by all single-point algebras
    bool holds;           // commutant is the scalars, so the bicommutant is everything
};

QuasilocalReport check_quasilocal(const CausalSite &site, const Tolerances &tol = default_tolerances());

class SiteEmbedding {
  public:
    /// Throws NotAnEmbedding unless the map is injective and preserves and
    /// reflects disjointness.
    SiteEmbedding(CausalSite source, CausalSite target, std::vector<Index> map);

    static SiteEmbedding identity(const CausalSite &site);
    /// p -> p + (dt, dx). Throws NotAnEmbedding when a translate is missing.
    static SiteEmbedding translation(const CausalSite &source, const CausalSite &target, int dt, int dx);

    const CausalSite &source() const {
        return source_;
    }
    const CausalSite &target() const {
        return target_;
    }
    const std::vector<Index> &map() const {
        return map_;
    }

  private:
    CausalSite source_;
    CausalSite target_;
    std::vector<Index> map_;
};

/// outer after inner. Throws NotAnEmbedding when inner's target is not outer's source.
SiteEmbedding compose(const SiteEmbedding &outer, const SiteEmbedding &inner);

/// Unital *-monomorphism Mat(2)^{(x) k} -> Mat(2)^{(x) m} placing source
/// qubit i on target qubit legs[i] and padding with identities.
class LegEmbedding {
  public:
    /// Throws NotAnEmbedding for repeated or out-of-range legs.
    LegEmbedding(Index source_qubits, Index target_qubits, std::vector<Index> legs);

    Index source_qubits() const {
        return source_qubits_;
    }
    Index target_qubits() const {
        return target_qubits_;
    }
    const std::vector<Index> &legs() const {
        return legs_;
    }
    Index source_dim() const {
        return Index{1} << source_qubits_;
    }
    Index target_dim() const {
        return Index{1} << target_qubits_;
    }

    /// Throws DimMismatch.
    CMatrix apply(const CMatrix &a) const;

  private:
    Index source_qubits_;
    Index target_qubits_;
    std::vector<Index> legs_;
};

LegEmbedding embed(const SiteEmbedding &e);
/// outer after inner. Throws DimMismatch.
LegEmbedding compose(const LegEmbedding &outer, const LegEmbedding &inner);
/// Inclusion of a region's own qubits into the site.
LegEmbedding region_inclusion(const CausalSite &site, const Region &r);

struct FunctorReport {
    double identity_law;     // max ||alpha_id(G) - G|| over point generators
    double composition_law;  // max ||alpha_{e2 e1}(G) - alpha_e2(alpha_e1(G))||
    double injectivity;      // max | ||alpha(G)||_HS^2 / 2^(m-k) - ||G||_HS^2 |
    bool holds;
};

/// Throws NotAnEmbedding when e2 cannot follow e1.
FunctorReport check_functor_laws(const SiteEmbedding &e1, const SiteEmbedding &e2, double threshold = 1e-12);

/// The state A -> Tr(rho' alpha(A)) written as a density matrix through the
/// matrix-unit basis and its HS dual. Throws DimMismatch.
State pullback(const LegEmbedding &alpha, const State &target_state);
/// rho placed on the image legs, maximally mixed on the rest.
State extend_state(const LegEmbedding &alpha, const State &source_state);

struct TransportValues {
    double direct;    // target state on the embedded Bell operator
    double pullback;  // pulled-back state on the original Bell operator
};

/// Throws InvalidQuadruple, DimMismatch.
TransportValues chsh_transport(const AdmissibleQuadruple &q, const LegEmbedding &alpha, const State &target_state);

/// Product of s1 on r1 and s2 on r2, maximally mixed elsewhere. Throws
/// RegionsNotDisjoint, DimMismatch.
State independence_product(const CausalSite &site, const Region &r1, const Region &r2, const State &s1,
                           const State &s2);

std::string describe(const Region &r);

}  // namespace oplab
