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

#include <gtest/gtest.h>

#include <cmath>

#include "oplab/errors.hpp"
#include "oplab/matcore.hpp"
#include "oplab/random.hpp"
#include "oplab/tolerances.hpp"
#include "support/oracles.hpp"

namespace {

using namespace oplab;

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

TEST(HermEig, PauliZ) {
    HermEig e = herm_eig(pauli::z());
    EXPECT_NEAR(e.values(0), -1.0, 1e-15);
    EXPECT_NEAR(e.values(1), 1.0, 1e-15);
}

TEST(HermEig, Identity) {
    HermEig e = herm_eig(identity(3));
    for (Index i = 0; i < 3; ++i) {
        EXPECT_NEAR(e.values(i), 1.0, 1e-15);
    }
}

TEST(HermEig, RandomReconstructionAndPhase) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        CMatrix a = random_hermitian(8, rng);
        HermEig e = herm_eig(a);
        CMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
        EXPECT_LE(oracle::norm(a - rebuilt), 1e-12 * std::max(1.0, oracle::norm(a)));
        EXPECT_LE(oracle::norm(e.vectors.adjoint() * e.vectors - identity(8)), 1e-12);
        for (Index i = 1; i < 8; ++i) {
            EXPECT_LE(e.values(i - 1), e.values(i));
        }
        for (Index k = 0; k < 8; ++k) {
            for (Index i = 0; i < 8; ++i) {
                if (std::abs(e.vectors(i, k)) > 1e-10) {
                    EXPECT_NEAR(e.vectors(i, k).imag(), 0.0, 1e-12);
                    EXPECT_GT(e.vectors(i, k).real(), 0.0);
                    break;
                }
            }
        }
    }
}

TEST(HermEig, RejectsNonHermitian) {
    CMatrix a = mat2(0, 1, 0, 0);
    try {
        herm_eig(a);
        FAIL() << "expected NotHermitian";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
}

TEST(HermEig, ReconstructionUpToDimension64) {
    Rng rng(12);
    CMatrix a = random_hermitian(64, rng);
    HermEig e = herm_eig(a);
    CMatrix rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE(oracle::norm(a - rebuilt), 1e-12 * oracle::norm(a));
}

TEST(OperatorNorm, Examples) {
    EXPECT_NEAR(operator_norm(pauli::x()), 1.0, 1e-15);
    EXPECT_NEAR(operator_norm(mat2(0, 2, 0, 0)), 2.0, 1e-15);
}

TEST(OperatorNorm, CStarPropertyAndAdjointInvariance) {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = random_index(1, 8, rng);
        CMatrix a = random_ginibre(n, n, rng);
        double na = operator_norm(a);
        EXPECT_NEAR(na, oracle::norm(a), 1e-12 * na);
        EXPECT_LE(std::abs(operator_norm(a.adjoint() * a) - na * na), 1e-10 * na * na);
        EXPECT_LE(std::abs(operator_norm(a.adjoint()) - na), 1e-10 * na);
    }
}

TEST(Polar, Unitary) {
    Rng rng(14);
    CMatrix u = random_unitary(4, rng);
    PolarParts p = polar(u);
    EXPECT_LE(oracle::norm(p.isometry_part - u), 1e-12);
    EXPECT_LE(oracle::norm(p.modulus - identity(4)), 1e-12);
}

TEST(Polar, NilpotentShift) {
    CMatrix a = mat2(0, 1, 0, 0);
    PolarParts p = polar(a);
    EXPECT_LE(oracle::norm(p.isometry_part - a), 1e-12);
    EXPECT_LE(oracle::norm(p.modulus - mat2(0, 0, 0, 1)), 1e-12);
    EXPECT_LE(oracle::norm(p.isometry_part * p.modulus - a), 1e-12);
    EXPECT_LE(oracle::norm(p.isometry_part.adjoint() * p.isometry_part - mat2(0, 0, 0, 1)), 1e-12);
}

TEST(Polar, PositiveInput) {
    Rng rng(15);
    CMatrix p = random_projection(5, 2, rng);
    PolarParts parts = polar(p);
    EXPECT_LE(oracle::norm(parts.modulus - p), 1e-12);
    EXPECT_LE(oracle::norm(parts.isometry_part - p), 1e-10);
}

TEST(Polar, RandomInvariants) {
    Rng rng(16);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = random_index(1, 7, rng);
        Index r = random_index(1, n, rng);
        CMatrix a = random_ginibre(n, r, rng) * random_ginibre(r, n, rng);
        PolarParts p = polar(a);
        double na = oracle::norm(a);
        EXPECT_LE(oracle::norm(p.isometry_part * p.modulus - a), 1e-10 * na);
        const CMatrix &v = p.isometry_part;
        EXPECT_LE(oracle::norm(v.adjoint() * v * v.adjoint() - v.adjoint()), 1e-10);
        CMatrix modulus_oracle = oracle::hermitian_function(a.adjoint() * a, [](double x) {
            return std::sqrt(std::max(0.0, x));
        });
        EXPECT_LE(oracle::norm(p.modulus - modulus_oracle), 1e-7 * std::max(1.0, na));
        CMatrix support = oracle::column_projector(p.modulus, 1e-8);
        EXPECT_LE(oracle::norm(v.adjoint() * v - support), 1e-8);
    }
}

TEST(HsInner, Examples) {
    EXPECT_NEAR(std::abs(hs_inner(identity(2), identity(2)) - Complex(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(hs_inner(pauli::x(), pauli::y())), 0.0, 1e-15);
}

TEST(HsInner, SingularValueOracleAndSymmetry) {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = random_index(1, 6, rng);
        CMatrix a = random_ginibre(n, n, rng);
        CMatrix b = random_ginibre(n, n, rng);
        Eigen::JacobiSVD<CMatrix> svd(a);
        double sum_sq = svd.singularValues().squaredNorm();
        Complex aa = hs_inner(a, a);
        EXPECT_NEAR(aa.real(), sum_sq, 1e-12 * sum_sq);
        EXPECT_NEAR(aa.imag(), 0.0, 1e-12 * sum_sq);
        EXPECT_LE(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))), 1e-12);
        EXPECT_LE(std::abs(hs_inner(a, b) - (a.adjoint() * b).trace()), 1e-12);
    }
    EXPECT_EQ(hs_inner(CMatrix::Zero(3, 3), CMatrix::Zero(3, 3)), Complex(0.0));
}

TEST(HsInner, DimMismatch) {
    try {
        hs_inner(identity(2), identity(3));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimMismatch);
    }
}

TEST(Rank, NullAndRangeSpaces) {
    Rng rng(18);
    CMatrix a = random_ginibre(6, 3, rng) * random_ginibre(3, 6, rng);
    EXPECT_EQ(numerical_rank(a), 3);
    CMatrix k = null_space(a);
    EXPECT_EQ(k.cols(), 3);
    EXPECT_LE(oracle::norm(a * k), 1e-10 * oracle::norm(a));
    CMatrix r = range_basis(a);
    EXPECT_EQ(r.cols(), 3);
    EXPECT_LE(oracle::norm(r * r.adjoint() * a - a), 1e-10 * oracle::norm(a));
}

TEST(Rank, ScaleFloorTreatsRoundoffAsZero) {
    CMatrix tiny = CMatrix::Identity(3, 3) * 1e-17;
    EXPECT_EQ(null_space(tiny).cols(), 0);
    EXPECT_EQ(null_space(tiny, default_tolerances(), 1.0).cols(), 3);
}

TEST(Vec, RoundTripAndHsInner) {
    Rng rng(19);
    CMatrix a = random_ginibre(4, 4, rng);
    CMatrix b = random_ginibre(4, 4, rng);
    EXPECT_LE(oracle::norm(unvec(vec(a), 4) - a), 0.0);
    EXPECT_LE(std::abs(vec(a).dot(vec(b)) - hs_inner(a, b)), 1e-12);
}

TEST(Tolerances, SetAndGet) {
    Tolerances t;
    t.set("rank", 1e-6);
    EXPECT_EQ(t.get("rank"), 1e-6);
    EXPECT_THROW(t.set("nope", 1.0), Error);
    EXPECT_THROW(t.set("rank", -1.0), Error);
    for (const auto &name : Tolerances::names()) {
        EXPECT_GT(default_tolerances().get(name), 0.0) << name;
    }
}

TEST(Random, GeneratorsAreSeedDeterministic) {
    Rng a(5);
    Rng b(5);
    EXPECT_EQ(random_hermitian(4, a), random_hermitian(4, b));
    Rng c(6);
    CMatrix rho = random_density(5, 2, c);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_EQ(numerical_rank(rho), 2);
}

}  // namespace
