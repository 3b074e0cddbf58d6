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

#include "oplab/algebra.hpp"
#include "oplab/errors.hpp"
#include "oplab/random.hpp"
#include "oplab/states.hpp"
#include "support/oracles.hpp"

namespace {

using namespace oplab;

CMatrix diag(std::initializer_list<double> values) {
    CMatrix m = CMatrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
    Index i = 0;
    for (double v : values) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

CMatrix rank_one(const CVector &v) {
    CVector u = v.normalized();
    return u * u.adjoint();
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

// Span projector of a list of matrices, built independently of the library.
CMatrix span_projector_oracle(const std::vector<CMatrix> &elements, Index n) {
    CMatrix cols(n * n, static_cast<Index>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        cols.col(static_cast<Index>(i)) = Eigen::Map<const CVector>(elements[i].data(), n * n);
    }
    return oracle::column_projector(cols);
}

void expect_orthonormal_basis(const Subalgebra &s) {
    const auto &b = s.basis();
    ASSERT_EQ(static_cast<Index>(b.size()), s.dim());
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            Complex ip = (b[i].adjoint() * b[j]).trace();
            EXPECT_LE(std::abs(ip - Complex(i == j ? 1.0 : 0.0)), 1e-10);
        }
    }
}

void expect_star_algebra(const Subalgebra &s) {
    const Index n = s.ambient_dim();
    EXPECT_LE(s.membership_residual(identity(n)), 1e-8);
    for (const CMatrix &x : s.basis()) {
        EXPECT_LE(s.membership_residual(x.adjoint()), 1e-8);
        for (const CMatrix &y : s.basis()) {
            EXPECT_LE(s.membership_residual(x * y), 1e-8);
        }
    }
}

TEST(Generate, Examples) {
    EXPECT_EQ(generate({}, 3).dim(), 1);
    Subalgebra z = generate({pauli::z()}, 2);
    EXPECT_EQ(z.dim(), 2);
    EXPECT_LE(z.membership_residual(diag({1, 0})), 1e-12);
    EXPECT_EQ(generate({pauli::x(), pauli::z()}, 2).dim(), 4);
    EXPECT_EQ(kind_of([] { generate({pauli::x()}, 3); }), ErrorKind::DimMismatch);
}

TEST(Generate, StructureAndIdempotence) {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Index n = random_index(2, 5, rng);
        Subalgebra s = generate(random_subalgebra_generators(n, rng), n);
        expect_orthonormal_basis(s);
        expect_star_algebra(s);
        Subalgebra again = generate(s.basis(), n);
        EXPECT_LE(span_distance(s, again), 1e-8);
        EXPECT_LE(oracle::norm(s.span_projector() - span_projector_oracle(s.basis(), n)), 1e-8);
    }
}

TEST(Commutant, Examples) {
    for (Index n : {2, 3, 4}) {
        EXPECT_EQ(commutant(full_algebra(n)).dim(), 1);
        EXPECT_EQ(commutant(scalar_algebra(n)).dim(), n * n);
    }
    Subalgebra c = commutant(left_factor_algebra(2, 2));
    EXPECT_EQ(c.dim(), 4);
    EXPECT_LE(span_distance(c, right_factor_algebra(2, 2)), 1e-8);
}

TEST(Commutant, MatchesNullSpaceOracle) {
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        Index n = random_index(2, 5, rng);
        auto gens = random_subalgebra_generators(n, rng);
        Subalgebra s = generate(gens, n);
        Subalgebra c = commutant(s);
        EXPECT_EQ(c.dim(), oracle::commutant_dim(gens, n));
        expect_star_algebra(c);
        for (const CMatrix &x : c.basis()) {
            for (const CMatrix &g : gens) {
                EXPECT_LE(oracle::norm(x * g - g * x), 1e-8);
            }
        }
    }
}

TEST(Commutant, ScalarMultiplesOfIdentityGiveEverything) {
    Subalgebra tiny = generate({identity(3) * 1e-9}, 3);
    EXPECT_EQ(commutant(tiny).dim(), 9);
}

TEST(Commutant, OrderReversing) {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Index n = random_index(2, 5, rng);
        auto gens = random_subalgebra_generators(n, rng);
        Subalgebra small = generate({gens[0]}, n);
        Subalgebra big = generate(gens, n);
        ASSERT_LE(inclusion_residual(big, small), 1e-8);
        EXPECT_LE(inclusion_residual(commutant(small), commutant(big)), 1e-8);
    }
}

TEST(Commutant, FactorDimensionProduct) {
    for (Index k = 1; k <= 3; ++k) {
        for (Index m = 1; m <= 3; ++m) {
            Subalgebra s = left_factor_algebra(k, m);
            EXPECT_EQ(s.dim() * commutant(s).dim(), k * k * m * m);
        }
    }
}

TEST(Bicommutant, RandomAndScalars) {
    Rng rng(44);
    for (int trial = 0; trial < 25; ++trial) {
        Index n = random_index(1, 6, rng);
        Subalgebra s = generate(random_subalgebra_generators(n, rng), n);
        BicommutantReport r = bicommutant_check(s);
        EXPECT_TRUE(r.holds);
        EXPECT_LE(r.bicommutant_distance, 1e-8);
        EXPECT_LE(r.tricommutant_distance, 1e-8);
    }
    EXPECT_TRUE(bicommutant_check(scalar_algebra(4)).holds);
}

TEST(Center, Examples) {
    CenterResult full = center(full_algebra(3));
    EXPECT_EQ(full.center.dim(), 1);
    EXPECT_TRUE(full.is_factor);

    CenterResult diagonal = center(generate({diag({1, 0})}, 2));
    EXPECT_EQ(diagonal.center.dim(), 2);
    EXPECT_FALSE(diagonal.is_factor);

    EXPECT_TRUE(center(left_factor_algebra(2, 2)).is_factor);
}

TEST(Projection, Validation) {
    CMatrix bad = diag({1, 0.5});
    EXPECT_EQ(kind_of([&] { Projection p(bad); }), ErrorKind::NotProjection);
    Projection p(diag({1, 0, 1}));
    EXPECT_EQ(p.rank(), 2);
}

TEST(Lattice, Examples) {
    Projection e(diag({1, 0}));
    Projection one(identity(2));
    EXPECT_LE(oracle::norm(proj_meet(e, one).matrix() - diag({1, 0})), 1e-10);
    EXPECT_LE(oracle::norm(proj_join(e, one).matrix() - identity(2)), 1e-10);
    EXPECT_LE(oracle::norm(proj_meet(e, e).matrix() - e.matrix()), 1e-10);
    EXPECT_LE(oracle::norm(proj_join(e, e).matrix() - e.matrix()), 1e-10);

    CVector v(2);
    v << 1.0, 1.0;
    Projection f(rank_one(v));
    EXPECT_LE(oracle::norm(proj_meet(e, f).matrix()), 1e-10);
    EXPECT_LE(oracle::norm(proj_join(e, f).matrix() - identity(2)), 1e-10);
}

TEST(Lattice, CommutingCaseMatchesProductFormulas) {
    Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        Index n = random_index(2, 6, rng);
        CMatrix u = random_unitary(n, rng);
        CMatrix de = CMatrix::Zero(n, n);
        CMatrix df = CMatrix::Zero(n, n);
        for (Index i = 0; i < n; ++i) {
            de(i, i) = random_index(0, 1, rng);
            df(i, i) = random_index(0, 1, rng);
        }
        CMatrix em = u * de * u.adjoint();
        CMatrix fm = u * df * u.adjoint();
        Projection e(symmetrize(em));
        Projection f(symmetrize(fm));
        EXPECT_LE(oracle::norm(proj_meet(e, f).matrix() - em * fm), 1e-10);
        EXPECT_LE(oracle::norm(proj_join(e, f).matrix() - (em + fm - em * fm)), 1e-10);
    }
}

TEST(Lattice, LawsOnRandomTriples) {
    Rng rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        Index n = random_index(2, 5, rng);
        Projection e(random_projection(n, random_index(0, n, rng), rng));
        Projection f(random_projection(n, random_index(0, n, rng), rng));
        Projection g(random_projection(n, random_index(0, n, rng), rng));
        auto close = [](const Projection &a, const Projection &b) {
            return oracle::norm(a.matrix() - b.matrix()) <= 1e-10;
        };
        EXPECT_TRUE(close(proj_meet(e, f), proj_meet(f, e)));
        EXPECT_TRUE(close(proj_join(e, f), proj_join(f, e)));
        EXPECT_TRUE(close(proj_meet(proj_meet(e, f), g), proj_meet(e, proj_meet(f, g))));
        EXPECT_TRUE(close(proj_join(proj_join(e, f), g), proj_join(e, proj_join(f, g))));
        EXPECT_TRUE(close(proj_meet(e, proj_join(e, f)), e));
        EXPECT_TRUE(close(proj_join(e, proj_meet(e, f)), e));
    }
}

TEST(Subprojection, Examples) {
    EXPECT_TRUE(is_subprojection(Projection(diag({1, 0})), Projection(identity(2))));
    EXPECT_FALSE(is_subprojection(Projection(identity(2)), Projection(diag({1, 0}))));
}

TEST(Subprojection, ConstructiveNesting) {
    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        Index n = random_index(2, 6, rng);
        Index rf = random_index(1, n, rng);
        Index re = random_index(0, rf, rng);
        CMatrix u = random_unitary(n, rng);
        CMatrix basis_f = u.leftCols(rf);
        CMatrix basis_e = basis_f * random_unitary(rf, rng).leftCols(re);
        Projection e(basis_e * basis_e.adjoint());
        Projection f(basis_f * basis_f.adjoint());
        EXPECT_TRUE(is_subprojection(e, f));
        if (re < rf) {
            EXPECT_FALSE(is_subprojection(f, e));
        }
    }
}

TEST(MvnEquivalence, Examples) {
    EXPECT_FALSE(mvn_equivalent(Projection(diag({1, 0, 0})), Projection(diag({1, 1, 0}))).has_value());
    Projection e(diag({1, 0, 1}));
    auto same = mvn_equivalent(e, e);
    ASSERT_TRUE(same.has_value());
    EXPECT_LE(oracle::norm(same->adjoint() * *same - e.matrix()), 1e-12);

    Rng rng(48);
    Projection p(rank_one(random_unit_vector(3, rng)));
    Projection q(rank_one(random_unit_vector(3, rng)));
    auto v = mvn_equivalent(p, q);
    ASSERT_TRUE(v.has_value());
    EXPECT_LE(oracle::norm(v->adjoint() * *v - p.matrix()), 1e-12);
    EXPECT_LE(oracle::norm(*v * v->adjoint() - q.matrix()), 1e-12);
}

TEST(MvnEquivalence, EquivalenceRelation) {
    Rng rng(49);
    for (int trial = 0; trial < 20; ++trial) {
        Index n = random_index(2, 6, rng);
        Index r = random_index(1, n, rng);
        Projection e(random_projection(n, r, rng));
        Projection f(random_projection(n, r, rng));
        Projection g(random_projection(n, r, rng));
        auto vef = mvn_equivalent(e, f);
        auto vfg = mvn_equivalent(f, g);
        ASSERT_TRUE(vef && vfg);
        CMatrix back = vef->adjoint();
        EXPECT_LE(oracle::norm(back.adjoint() * back - f.matrix()), 1e-10);
        EXPECT_LE(oracle::norm(back * back.adjoint() - e.matrix()), 1e-10);
        CMatrix chain = *vfg * *vef;
        EXPECT_LE(oracle::norm(chain.adjoint() * chain - e.matrix()), 1e-10);
        EXPECT_LE(oracle::norm(chain * chain.adjoint() - g.matrix()), 1e-10);
    }
}

TEST(DimensionFunction, Examples) {
    for (Index k = 1; k <= 3; ++k) {
        for (Index m = 1; m <= 3; ++m) {
            Subalgebra s = left_factor_algebra(k, m);
            EXPECT_EQ(dimension_function(Projection(identity(k * m)), s), k);
            EXPECT_EQ(dimension_function(Projection(CMatrix::Zero(k * m, k * m)), s), 0);
        }
    }
}

TEST(DimensionFunction, OrthogonalAdditivityAndErrors) {
    Rng rng(50);
    for (int trial = 0; trial < 20; ++trial) {
        Index k = random_index(2, 3, rng);
        Index m = random_index(1, 2, rng);
        CMatrix w = random_unitary(k * m, rng);
        std::vector<CMatrix> gens;
        for (const CMatrix &g : {random_hermitian(k, rng), random_hermitian(k, rng)}) {
            gens.push_back(w * kron(g, identity(m)) * w.adjoint());
        }
        Subalgebra factor = generate(gens, k * m);
        ASSERT_EQ(factor.dim(), k * k);
        CMatrix u = random_unitary(k, rng);
        Index split = random_index(1, k - 1, rng);
        CMatrix pe = u.leftCols(split) * u.leftCols(split).adjoint();
        CMatrix pf = u.rightCols(k - split) * u.rightCols(k - split).adjoint();
        Projection e(symmetrize(w * kron(pe, identity(m)) * w.adjoint()));
        Projection f(symmetrize(w * kron(pf, identity(m)) * w.adjoint()));
        Projection sum(symmetrize(e.matrix() + f.matrix()));
        EXPECT_EQ(dimension_function(sum, factor), dimension_function(e, factor) + dimension_function(f, factor));
        EXPECT_EQ(dimension_function(e, factor), split);
    }
    Subalgebra nonfactor = generate({diag({1, 0})}, 2);
    EXPECT_EQ(kind_of([&] { dimension_function(Projection(diag({1, 0})), nonfactor); }), ErrorKind::NotFactor);
    CVector v(2);
    v << 1.0, 1.0;
    EXPECT_EQ(kind_of([&] { dimension_function(Projection(rank_one(v)), left_factor_algebra(1, 2)); }),
              ErrorKind::NotInAlgebra);
}

TEST(TracialState, Properties) {
    State tau = tracial_state(full_algebra(2));
    EXPECT_LE(std::abs(eval(tau, pauli::z())), 1e-15);
    EXPECT_LE(std::abs(eval(tau, identity(2)) - Complex(1.0)), 1e-15);
    Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = random_index(1, 6, rng);
        State t = tracial_state(full_algebra(n));
        CMatrix a = random_ginibre(n, n, rng);
        CMatrix b = random_ginibre(n, n, rng);
        EXPECT_LE(std::abs(eval(t, a * b) - eval(t, b * a)), 1e-12);
        EXPECT_GT(eval(t, a.adjoint() * a).real(), 0.0);
    }
}

}  // namespace
