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

// States on Mat(n) as density matrices, and the GNS construction.

#include <span>
#include <vector>

#include "oplab/algebra.hpp"
#include "oplab/matcore.hpp"
#include "oplab/state.hpp"

namespace oplab {

/// Tr(rho A). Throws DimMismatch.
Complex eval(const State &s, const CMatrix &a);

/// Rank of rho with eigenvalues below purity_gap * max eigenvalue treated as zero.
Index state_rank(const State &s, const Tolerances &tol = default_tolerances());
bool is_pure(const State &s, const Tolerances &tol = default_tolerances());
bool is_faithful(const State &s, const Tolerances &tol = default_tolerances());

/// sum_i w_i rho_i. Weights must be nonnegative and sum to 1 within 1e-12;
/// they are never renormalized. Throws BadWeights, DimMismatch.
State mix(std::span<const State> states, std::span<const double> weights);

struct CauchySchwarzReport {
    /// w(a*a) w(b*b) - |w(a*b)|^2; nonnegative up to rounding.
    double slack;
    /// |w(a*b) - conj(w(b*a))|
    double conjugate_symmetry;
};

CauchySchwarzReport cauchy_schwarz_check(const State &s, const CMatrix &a, const CMatrix &b);

/// Pure state vv* with v a top eigenvector of a*a, so that w(a*a) = ||a||^2.
/// Throws ZeroMatrix.
State norming_state(const CMatrix &a, const Tolerances &tol = default_tolerances());

/// rho1 (x) rho2 on Mat(n1 n2).
State product_state(const State &s1, const State &s2);

/// Tr over the second tensor factor of an (n1 n2)-dimensional matrix.
CMatrix partial_trace_second(const CMatrix &x, Index n1, Index n2);
/// Tr over the first tensor factor.
CMatrix partial_trace_first(const CMatrix &x, Index n1, Index n2);

/// GNS representation of a state on Mat(n), realized on the carrier
/// {A P : A in Mat(n)} where P projects onto ran(rho), with inner product
/// <X, Y>_rho = Tr(rho X* Y).
class GnsTriple {
  public:
    Index algebra_dim() const {
        return rho_.rows();
    }
    Index rep_dim() const {
        return static_cast<Index>(carrier_basis_.size());
    }
    Index state_rank() const {
        return rank_;
    }
    /// rho-orthonormal basis of the carrier, as n x n matrices.
    const std::vector<CMatrix> &carrier_basis() const {
        return carrier_basis_;
    }
    const CMatrix &support() const {
        return support_;
    }
    /// Coordinates of the cyclic vector, the class of P.
    const CVector &omega() const {
        return omega_;
    }
    /// Matrix of left multiplication by a in the carrier basis.
    CMatrix rep(const CMatrix &a) const;
    /// Coordinates of the carrier element X (assumed to be of the form A P).
    CVector coordinates(const CMatrix &x) const;
    /// <X, Y>_rho
    Complex inner(const CMatrix &x, const CMatrix &y) const;
    const CMatrix &rho() const {
        return rho_;
    }

  private:
    friend GnsTriple gns(const State &, std::span<const Index>, const Tolerances &);
    CMatrix rho_;
    CMatrix support_;
    Index rank_ = 0;
    std::vector<CMatrix> carrier_basis_;
    CVector omega_;
};

/// Builds the GNS triple. Seed vectors are the matrix units E_ij P in the
/// given order of flat indices i*n + j (lexicographic when empty); a pivoted
/// Gram-Schmidt in the rho inner product keeps n * rank(rho) of them.
GnsTriple gns(const State &s, std::span<const Index> seed_order = {}, const Tolerances &tol = default_tolerances());

struct GnsReport {
    Index rep_dim;
    double homomorphism_residual;   // max ||rep(AB) - rep(A)rep(B)|| over matrix units
    double star_residual;           // max ||rep(A*) - rep(A)*||
    double expectation_residual;    // max |<Omega, rep(A) Omega> - Tr(rho A)|
    Index cyclic_span_dim;          // dim span{rep(A) Omega}
    bool faithful_rep;              // rep injective on Mat(n)
};

GnsReport gns_verify(const GnsTriple &t, const Tolerances &tol = default_tolerances());

/// The commutant of rep(Mat(n)) inside Mat(rep_dim).
Subalgebra gns_commutant(const GnsTriple &t, const Tolerances &tol = default_tolerances());
/// True iff gns_commutant has dimension 1.
bool gns_irreducible(const GnsTriple &t, const Tolerances &tol = default_tolerances());

/// The unitary W between two GNS triples of the same state with
/// W rep1(A) = rep2(A) W and W Omega1 = Omega2.
CMatrix gns_intertwiner(const GnsTriple &from, const GnsTriple &to);

/// The unitary U on the GNS carrier implementing A -> u A u*, with
/// U rep(A) U^-1 = rep(u A u*) and U Omega = Omega. Throws NotInvariant when
/// ||u rho u* - rho|| > tol.invariance.
CMatrix implement_automorphism(const GnsTriple &t, const CMatrix &u, const Tolerances &tol = default_tolerances());

}  // namespace oplab
