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

#include "oplab/matcore.hpp"

namespace oplab {

/// A normal state on Mat(n): the functional A -> Tr(rho A) for a density
/// matrix rho. Construction validates positivity and unit trace.
class State {
  public:
    /// Throws InvalidState when rho is not Hermitian, has an eigenvalue below
    /// -tol.state, or |Tr(rho) - 1| > tol.state.
    explicit State(CMatrix rho, const Tolerances &tol = default_tolerances());

    /// Pure state |psi><psi| / <psi, psi>. Throws ZeroVector.
    static State from_vector(const CVector &psi);
    static State maximally_mixed(Index n);

    const CMatrix &rho() const {
        return rho_;
    }
    Index dim() const {
        return rho_.rows();
    }

  private:
    CMatrix rho_;
};

}  // namespace oplab
