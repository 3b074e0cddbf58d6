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

#include "oplab/random.hpp"

#include <cmath>

#include "oplab/errors.hpp"

namespace oplab {

CMatrix random_ginibre(Index rows, Index cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            double re = normal(rng);
            double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

CMatrix random_hermitian(Index n, Rng &rng) {
    CMatrix g = random_ginibre(n, n, rng);
    return 0.5 * (g + g.adjoint());
}

CMatrix random_unitary(Index n, Rng &rng) {
    CMatrix g = random_ginibre(n, n, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        Complex d = r(j, j);
        if (std::abs(d) > 0.0) {
            q.col(j) *= d / std::abs(d);
        }
    }
    return q;
}

CVector random_unit_vector(Index n, Rng &rng) {
    CVector v = random_ginibre(n, 1, rng).col(0);
    return v / v.norm();
}

CMatrix random_projection(Index n, Index rank, Rng &rng) {
    if (rank < 0 || rank > n) {
        throw Error(ErrorKind::InvalidArgument, "projection rank out of range");
    }
    CMatrix u = random_unitary(n, rng).leftCols(rank);
    return u * u.adjoint();
}

CMatrix random_density(Index n, Index rank, Rng &rng) {
    if (rank < 1 || rank > n) {
        throw Error(ErrorKind::InvalidArgument, "density rank out of range");
    }
    CMatrix g = random_ginibre(n, rank, rng);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint());
}

CMatrix random_faithful_density(Index n, double floor, Rng &rng) {
    CMatrix rho = random_density(n, n, rng);
    rho = (1.0 - floor) * rho + (floor / static_cast<double>(n)) * identity(n);
    return 0.5 * (rho + rho.adjoint());
}

double random_uniform(double lo, double hi, Rng &rng) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Index random_index(Index lo, Index hi, Rng &rng) {
    return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

std::vector<CMatrix> random_subalgebra_generators(Index n, Rng &rng) {
    std::vector<std::pair<Index, Index>> blocks;  // (k, m)
    for (Index remaining = n; remaining > 0;) {
        Index m = random_index(1, remaining, rng);
        Index k = random_index(1, remaining / m, rng);
        blocks.emplace_back(k, m);
        remaining -= k * m;
    }
    CMatrix u = random_unitary(n, rng);
    std::vector<CMatrix> out;
    for (int g = 0; g < 2; ++g) {
        CMatrix x = CMatrix::Zero(n, n);
        Index offset = 0;
        for (auto [k, m] : blocks) {
            x.block(offset, offset, k * m, k * m) = kron(random_ginibre(k, k, rng), identity(m));
            offset += k * m;
        }
        out.push_back(u * x * u.adjoint());
    }
    return out;
}

}  // namespace oplab
