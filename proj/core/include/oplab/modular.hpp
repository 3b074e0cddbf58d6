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

// Tomita-Takesaki modular theory for a subalgebra M of Mat(N) with a cyclic
// and separating vector Omega.
//
// Antilinear maps are stored as a matrix U acting as v -> U conj(v) in the
// canonical basis of C^N. Composition rules:
//   (U K)(V K) = U conj(V)        (linear)
//   (U K) L    = (U conj(L)) K
//   L (U K)    = (L U) K
//   (U K)*     = U^T K

#include <vector>

#include "oplab/algebra.hpp"
#include "oplab/matcore.hpp"
#include "oplab/spectra.hpp"
#include "oplab/state.hpp"

namespace oplab {

class AntiLinear {
  public:
    explicit AntiLinear(CMatrix matrix) : matrix_(std::move(matrix)) {
    }

    const CMatrix &matrix() const {
        return matrix_;
    }
    CVector apply(const CVector &v) const {
        return matrix_ * v.conjugate();
    }
    /// The antilinear adjoint: <x, A* y> = conj(<A x, y>).
    AntiLinear adjoint() const {
        return AntiLinear(matrix_.transpose());
    }

  private:
    CMatrix matrix_;
};

CMatrix compose(const AntiLinear &a, const AntiLinear &b);
AntiLinear compose(const AntiLinear &a, const CMatrix &linear);
AntiLinear compose(const CMatrix &linear, const AntiLinear &a);

/// dim span{B Omega : B in M} equals N. Throws ZeroVector.
bool is_cyclic(const Subalgebra &m, const CVector &omega, const Tolerances &tol = default_tolerances());
/// B -> B Omega is injective on M. Throws ZeroVector.
bool is_separating(const Subalgebra &m, const CVector &omega, const Tolerances &tol = default_tolerances());

/// Vector representative of a state on Mat(n) in C^n (x) C^n: the entries of
/// sqrt(rho) at index i*n + j. Cyclic and separating for Mat(n) (x) 1 iff rho
/// is faithful.
CVector purification(const State &s);

struct ModularData {
    Subalgebra algebra;
    CVector omega;
    /// S: B Omega -> B* Omega
    AntiLinear tomita;
    /// Delta = S* S
    CMatrix delta;
    HermEig delta_eig;
    /// J = S Delta^(-1/2)
    AntiLinear conjugation;
    /// Condition number of the frame {B_i Omega}.
    double frame_condition;
};

/// Solves S from S(B_i Omega) = B_i* Omega by least squares on the frame and
/// takes its polar decomposition. Throws NotCyclic, NotSeparating,
/// IllConditioned.
ModularData tomita(const Subalgebra &m, const CVector &omega, const Tolerances &tol = default_tolerances());

/// Delta^z through the eigendecomposition of Delta.
CMatrix delta_power(const ModularData &d, Complex exponent);

/// Delta^(it) A Delta^(-it)
CMatrix modular_flow(const ModularData &d, double t, const CMatrix &a);

/// |<Omega, (Delta^-beta A Delta^beta) B Omega> - <Omega, B A Omega>|. At
/// beta = 1 this is the modular (KMS) condition; Delta^-beta A Delta^beta is
/// the continuation of the flow to t = i beta.
double kms_check(const ModularData &d, const CMatrix &a, const CMatrix &b, double beta = 1.0);

struct TomitaTakesakiReport {
    double j_omega;             // ||J Omega - Omega||
    double delta_omega;         // ||Delta Omega - Omega||
    double j_involution;        // ||J^2 - 1||
    double j_selfadjoint;       // ||J - J*||
    double delta_inverse;       // ||Delta^-1 - S S*||
    double delta_sqrt_relation; // ||Delta^-1/2 - J Delta^1/2 J||
    double jmj_commutant;       // span(J M J) vs span(M')
    double flow_invariance;     // max over t, B of the membership residual of sigma_t(B)
    double max_residual;
    bool holds;                 // every residual <= threshold
};

TomitaTakesakiReport verify_tomita_takesaki(const ModularData &d,
                                            const std::vector<double> &times = {0.1, -0.1, 1.0, -1.0, 3.141592653589793,
                                                                                -3.141592653589793},
                                            double threshold = 1e-7, const Tolerances &tol = default_tolerances());

}  // namespace oplab
