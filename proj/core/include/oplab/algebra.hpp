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

// Unital *-subalgebras of Mat(n), their commutants and centres, and the
// lattice of orthogonal projections.
//
// Two subalgebras are compared through the Hilbert-Schmidt orthogonal
// projectors onto their spans, never through their bases.

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "oplab/matcore.hpp"
#include "oplab/state.hpp"

namespace oplab {

class Subalgebra {
  public:
    using Projector = std::function<CMatrix(const CMatrix &)>;
    using BasisFactory = std::function<std::vector<CMatrix>()>;

    /// Wraps an HS-orthonormal basis whose span is already a unital *-algebra.
    static Subalgebra from_orthonormal_basis(Index n, std::vector<CMatrix> basis, std::vector<CMatrix> generators);

    /// An algebra whose span projector is known in closed form. The basis is
    /// materialized on first use only; dim must equal the factory's output size.
    static Subalgebra structured(Index n, std::vector<CMatrix> generators, Index dim, BasisFactory basis,
                                 Projector projector);

    Index ambient_dim() const;
    /// Dimension of the span.
    Index dim() const;
    const std::vector<CMatrix> &generators() const;
    /// HS-orthonormal basis. Thread-safe lazy materialization.
    const std::vector<CMatrix> &basis() const;

    /// HS-orthogonal projection onto the span.
    CMatrix project(const CMatrix &x) const;
    /// ||x - project(x)||_HS
    double membership_residual(const CMatrix &x) const;
    bool contains(const CMatrix &x, double tol) const;
    /// n^2 x n^2 projector onto the vectorized span.
    CMatrix span_projector() const;

  private:
    struct Data;
    explicit Subalgebra(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

/// Smallest unital *-subalgebra containing the generators: alternate adjoint
/// closure and pairwise products with HS Gram-Schmidt until the dimension
/// stops growing. Throws DimMismatch.
Subalgebra generate(const std::vector<CMatrix> &generators, Index n, const Tolerances &tol = default_tolerances());

/// Orthonormalizes the span of `elements`, which must already be a unital
/// *-algebra (for instance the image of one under a *-isomorphism).
Subalgebra span_subalgebra(const std::vector<CMatrix> &elements, Index n, const Tolerances &tol = default_tolerances());

/// Mat(k) (x) 1_m inside Mat(k m).
Subalgebra left_factor_algebra(Index k, Index m);
/// 1_k (x) Mat(m) inside Mat(k m).
Subalgebra right_factor_algebra(Index k, Index m);
/// The scalars C.1 in Mat(n).
Subalgebra scalar_algebra(Index n);
/// All of Mat(n).
Subalgebra full_algebra(Index n);

/// {X : [X, G] = 0 for every generator G}.
Subalgebra commutant(const Subalgebra &s, const Tolerances &tol = default_tolerances());

/// Operator-norm distance between span projectors.
double span_distance(const Subalgebra &a, const Subalgebra &b);
/// Largest membership residual of b's basis in a (0 when span(b) is inside span(a)).
double inclusion_residual(const Subalgebra &outer, const Subalgebra &inner);

struct BicommutantReport {
    double bicommutant_distance;  // span(S'') vs span(S)
    double tricommutant_distance; // span(S''') vs span(S')
    bool holds;
};

BicommutantReport bicommutant_check(const Subalgebra &s, const Tolerances &tol = default_tolerances());

struct CenterResult {
    Subalgebra center;
    bool is_factor;
};

CenterResult center(const Subalgebra &s, const Tolerances &tol = default_tolerances());

/// An orthogonal projection P = P* = P^2.
class Projection {
  public:
    /// Throws NotProjection.
    explicit Projection(CMatrix matrix, const Tolerances &tol = default_tolerances());

    const CMatrix &matrix() const {
        return matrix_;
    }
    Index ambient_dim() const {
        return matrix_.rows();
    }
    Index rank() const;
    /// Orthonormal columns spanning the range.
    CMatrix range() const;

  private:
    CMatrix matrix_;
};

/// Projector onto ran(E) intersected with ran(F).
Projection proj_meet(const Projection &e, const Projection &f, const Tolerances &tol = default_tolerances());
/// Projector onto ran(E) + ran(F).
Projection proj_join(const Projection &e, const Projection &f, const Tolerances &tol = default_tolerances());

/// E <= F, decided by five equivalent criteria (range inclusion, FE = E,
/// EF = E, ||Ex|| <= ||Fx|| on a sampled frame, F - E positive). Throws
/// InconsistentCriteria if they disagree.
bool is_subprojection(const Projection &e, const Projection &f, const Tolerances &tol = default_tolerances());

/// A partial isometry V with V*V = E and VV* = F, relative to Mat(n), or
/// nullopt when the ranks differ.
std::optional<CMatrix> mvn_equivalent(const Projection &e, const Projection &f,
                                      const Tolerances &tol = default_tolerances());

/// d(E) = rank(E) sqrt(dim M) / n for E in a factor M of Mat(n). Throws
/// NotFactor, NotInAlgebra, NonIntegerDimension.
Index dimension_function(const Projection &e, const Subalgebra &m, const Tolerances &tol = default_tolerances());

/// The normalized trace, a faithful tracial state on any subalgebra.
State tracial_state(const Subalgebra &m);

}  // namespace oplab
