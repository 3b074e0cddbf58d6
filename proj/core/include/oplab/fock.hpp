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

// Bosonic and fermionic Fock spaces over C^d.
//
// Basis layout: sectors are stored contiguously in increasing particle
// number. Inside a bosonic sector the occupation tuples (m_1, ..., m_d) are
// listed in decreasing lexicographic order, so (n, 0, ..., 0) comes first.
// Fermionic sectors list occupation bitmasks (bit i = mode i) in increasing
// numeric order.
//
// Bosonic spaces are truncated at N_max particles; a*(f) drops whatever would
// leave sector N_max and a(f) is its exact adjoint. Fermionic spaces are
// exact (N_max = d).

#include <map>
#include <utility>
#include <vector>

#include "oplab/matcore.hpp"

namespace oplab {

enum class Statistics { bose, fermi };

const char *to_string(Statistics s);

class FockSpace {
  public:
    /// Throws InvalidArgument for d < 1 or n_max < 0, DimensionCapExceeded
    /// when the total dimension exceeds kMaxDim. For fermions n_max is
    /// ignored and the space is the full exterior algebra.
    FockSpace(Index d, Index n_max, Statistics statistics);

    static FockSpace bosonic(Index d, Index n_max) {
        return FockSpace(d, n_max, Statistics::bose);
    }
    static FockSpace fermionic(Index d) {
        return FockSpace(d, d, Statistics::fermi);
    }

    Index one_particle_dim() const {
        return d_;
    }
    Index max_particles() const {
        return n_max_;
    }
    Statistics statistics() const {
        return statistics_;
    }
    const std::vector<Index> &sector_dims() const {
        return sector_dims_;
    }
    Index total_dim() const {
        return static_cast<Index>(occupations_.size());
    }
    /// First basis index of sector n.
    Index sector_offset(Index n) const;
    /// Occupation numbers of basis state k.
    const std::vector<int> &occupation(Index k) const {
        return occupations_.at(static_cast<std::size_t>(k));
    }
    Index particle_number(Index k) const;
    /// Basis index of an occupation tuple, or -1 when absent.
    Index index_of(const std::vector<int> &occupation) const;

    CVector vacuum() const;
    /// Orthogonal projector onto sectors lo..hi.
    CMatrix sector_projector(Index lo, Index hi) const;

  private:
    Index d_;
    Index n_max_;
    Statistics statistics_;
    std::vector<Index> sector_dims_;
    std::vector<Index> offsets_;
    std::vector<std::vector<int>> occupations_;
    std::map<std::vector<int>, Index> lookup_;
};

struct FockVector {
    FockSpace space;
    CVector amplitudes;

    /// Amplitudes of sector n.
    CVector sector(Index n) const;
    double norm() const {
        return amplitudes.norm();
    }
};

/// (1/n!) sum over permutations of (sign) * permutation, on (C^d)^{(x) n}
/// with the first tensor factor most significant. Throws
/// DimensionCapExceeded when d^n > kMaxDim.
CMatrix symmetrizer(Index n, Index d, Statistics parity);

/// Isometry from sector n of the Fock basis into (C^d)^{(x) n}; its range is
/// the (anti)symmetric subspace.
CMatrix sector_embedding(const FockSpace &space, Index n);

/// a*(f) = sum_i f_i a_i*. Throws DimMismatch.
CMatrix create(const FockSpace &space, const CVector &f);
/// a(f) = a*(f)*, antilinear in f.
CMatrix annihilate(const FockSpace &space, const CVector &f);
CMatrix number_operator(const FockSpace &space);

/// ||([a(f), a*(g)] - <f,g> 1) P|| with P the projector onto sectors
/// 0..N_max-1. Throws WrongStatistics.
double ccr_residual(const FockSpace &space, const CVector &f, const CVector &g);

struct CarReport {
    double anticommutator;           // ||{a(f), a*(g)} - <f,g> 1||
    double annihilators;             // ||{a(f), a(g)}||
    double creators;                 // ||{a*(f), a*(g)}||
    double nilpotency;               // ||a*(f)^2||
    double repeated_argument;        // ||P_-(f (x) f)||
    double max_residual;
};

/// Throws WrongStatistics.
CarReport car_check(const FockSpace &space, const CVector &f, const CVector &g);

/// (a(f) + a*(f)) / sqrt(2). Throws WrongStatistics.
CMatrix field(const FockSpace &space, const CVector &f);
/// field(i f).
CMatrix conjugate_field(const FockSpace &space, const CVector &f);
/// ||([Phi(f), Phi(g)] - i Im<f,g> 1) P|| with P onto sectors 0..N_max-2.
double field_commutator_residual(const FockSpace &space, const CVector &f, const CVector &g);

/// exp(i Phi(f)) through the eigendecomposition of Phi(f).
CMatrix weyl(const FockSpace &space, const CVector &f);
/// <Omega, W(f) Omega>.
Complex vacuum_weyl(const FockSpace &space, const CVector &f);
/// Largest |e^{i lambda} - 1| over the eigenvalues lambda of Phi(f), which is
/// ||W(f) - 1||.
double weyl_distance_from_identity(const FockSpace &space, const CVector &f);

/// ||(W(f) W(g) - e^{-i Im<f,g>/2} W(f+g)) P|| with P onto sectors
/// 0..probe_sectors. The full truncated space always carries an O(1) edge
/// error, so convergence is measured on low sectors.
double weyl_relation_residual(const FockSpace &space, const CVector &f, const CVector &g, Index probe_sectors = 0);

/// (1/sqrt(n!)) a*(f_1) ... a*(f_n) Omega. Throws SectorOverflow when n
/// exceeds the particle cap.
FockVector multiparticle(const FockSpace &space, const std::vector<CVector> &fs);

struct BogoliubovReport {
    double symplectic;  // |Im<Tf,Tg> - Im<f,g>|
    double weyl;        // ||Gamma W(f) Gamma* - W(e^{i theta} f)||, Gamma = exp(i theta N)
};

/// Throws WrongStatistics.
BogoliubovReport bogoliubov_check(const FockSpace &space, double theta, const CVector &f, const CVector &g);

struct SweepPoint {
    Index n_max;
    double value;
};

/// |<Omega, W(f) Omega> - exp(-||f||^2/4)| for each truncation.
std::vector<SweepPoint> vacuum_weyl_sweep(const CVector &f, const std::vector<Index> &n_maxes);
std::vector<SweepPoint> weyl_relation_sweep(const CVector &f, const CVector &g, const std::vector<Index> &n_maxes,
                                            Index probe_sectors = 0);
std::vector<SweepPoint> weyl_identity_distance_sweep(const CVector &f, const std::vector<Index> &n_maxes);

}  // namespace oplab
