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
#include <numbers>

#include "oplab/errors.hpp"
#include "oplab/fock.hpp"
#include "oplab/random.hpp"
#include "support/oracles.hpp"

namespace {

using namespace oplab;

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

Index binomial(Index n, Index k) {
    if (k < 0 || k > n) {
        return 0;
    }
    Index r = 1;
    for (Index i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

CVector e(Index d, Index i) {
    return basis_vector(d, i);
}

CVector random_one_particle(Index d, Rng &rng) {
    CVector f(d);
    for (Index i = 0; i < d; ++i) {
        f(i) = Complex(random_uniform(-1, 1, rng), random_uniform(-1, 1, rng));
    }
    return f;
}

// exp(x) by its Taylor series, summed until terms vanish.
double exp_series(double x) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < 200 && term != 0.0; ++k) {
        sum += term;
        term *= x / k;
    }
    return sum;
}

// Single-mode ladder operator on span{|0>, ..., |n_max>}.
CMatrix single_mode_annihilator(Index n_max) {
    CMatrix a = CMatrix::Zero(n_max + 1, n_max + 1);
    for (Index k = 1; k <= n_max; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

TEST(FockSpace, SectorDimensions) {
    for (Index d = 1; d <= 4; ++d) {
        FockSpace b = FockSpace::bosonic(d, 5);
        ASSERT_EQ(b.sector_dims().size(), 6u);
        Index total = 0;
        for (Index n = 0; n <= 5; ++n) {
            EXPECT_EQ(b.sector_dims()[static_cast<std::size_t>(n)], binomial(d + n - 1, n));
            EXPECT_EQ(b.sector_offset(n), total);
            total += binomial(d + n - 1, n);
        }
        EXPECT_EQ(b.total_dim(), total);
        FockSpace f = FockSpace::fermionic(d);
        EXPECT_EQ(f.total_dim(), Index{1} << d);
        for (Index n = 0; n <= d; ++n) {
            EXPECT_EQ(f.sector_dims()[static_cast<std::size_t>(n)], binomial(d, n));
        }
        EXPECT_EQ(b.sector_dims()[0], 1);
        EXPECT_LE((b.vacuum() - basis_vector(b.total_dim(), 0)).norm(), 0.0);
    }
    EXPECT_EQ(kind_of([] { FockSpace::bosonic(0, 3); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { FockSpace::bosonic(3, 100); }), ErrorKind::DimensionCapExceeded);
    EXPECT_EQ(kind_of([] { FockSpace::bosonic(2, 3).sector_offset(4); }), ErrorKind::SectorOverflow);
}

TEST(FockSpace, BasisLayout) {
    FockSpace b = FockSpace::bosonic(2, 2);
    std::vector<std::vector<int>> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    ASSERT_EQ(b.total_dim(), 6);
    for (Index k = 0; k < 6; ++k) {
        EXPECT_EQ(b.occupation(k), expected[static_cast<std::size_t>(k)]);
        EXPECT_EQ(b.index_of(b.occupation(k)), k);
    }
    EXPECT_EQ(b.index_of({3, 0}), -1);
}

TEST(Symmetrizer, Examples) {
    EXPECT_LE(oracle::norm(symmetrizer(1, 3, Statistics::bose) - identity(3)), 1e-15);
    CMatrix plus = symmetrizer(2, 2, Statistics::bose);
    CMatrix minus = symmetrizer(2, 2, Statistics::fermi);
    EXPECT_EQ(numerical_rank(plus), 3);
    EXPECT_EQ(numerical_rank(minus), 1);
    EXPECT_LE(oracle::norm(plus + minus - identity(4)), 1e-15);
    EXPECT_EQ(kind_of([] { symmetrizer(13, 2, Statistics::bose); }), ErrorKind::DimensionCapExceeded);
}

TEST(Symmetrizer, ProjectionsWithBinomialRanks) {
    for (Index n = 1; n <= 4; ++n) {
        for (Index d = 1; d <= 3; ++d) {
            for (Statistics s : {Statistics::bose, Statistics::fermi}) {
                CMatrix p = symmetrizer(n, d, s);
                EXPECT_LE(oracle::norm(p * p - p), 1e-12);
                EXPECT_LE(oracle::norm(p - p.adjoint()), 1e-12);
                Index expected = s == Statistics::bose ? binomial(d + n - 1, n) : binomial(d, n);
                EXPECT_NEAR(p.trace().real(), static_cast<double>(expected), 1e-10);
                if (n <= d || s == Statistics::bose) {
                    FockSpace space(d, n, s);
                    CMatrix emb = sector_embedding(space, n);
                    EXPECT_LE(oracle::norm(emb.adjoint() * emb - identity(emb.cols())), 1e-12);
                    EXPECT_LE(oracle::norm(emb * emb.adjoint() - p), 1e-12);
                }
            }
        }
    }
}

TEST(Ladder, VacuumAndSingleParticle) {
    Rng rng(91);
    for (Statistics s : {Statistics::bose, Statistics::fermi}) {
        FockSpace space(3, 3, s);
        CVector f = random_one_particle(3, rng);
        CVector vac = space.vacuum();
        EXPECT_LE((annihilate(space, f) * vac).norm(), 1e-15);
        CVector one = create(space, f) * vac;
        FockVector fv{space, one};
        EXPECT_LE((fv.sector(1) - f).norm(), 1e-14);
        EXPECT_NEAR(fv.norm(), f.norm(), 1e-14);
        EXPECT_LE((annihilate(space, f) * create(space, f) * vac - f.squaredNorm() * vac).norm(), 1e-13);
        EXPECT_EQ(kind_of([&] { create(space, CVector::Zero(2)); }), ErrorKind::DimMismatch);
    }
    FockSpace b = FockSpace::bosonic(2, 3);
    CVector e1 = create(b, e(2, 0)) * b.vacuum();
    EXPECT_LE((e1 - basis_vector(b.total_dim(), b.index_of({1, 0}))).norm(), 1e-15);
}

TEST(Ladder, SingleModeMatchesLadderOracle) {
    for (Index n_max : {1, 4, 9}) {
        FockSpace space = FockSpace::bosonic(1, n_max);
        CVector f(1);
        f(0) = 1.0;
        EXPECT_LE(oracle::norm(annihilate(space, f) - single_mode_annihilator(n_max)), 1e-14);
        EXPECT_LE(oracle::norm(create(space, f) - single_mode_annihilator(n_max).adjoint()), 1e-14);
    }
}

TEST(Ladder, NumberGradingAndAdjointness) {
    Rng rng(92);
    for (Statistics s : {Statistics::bose, Statistics::fermi}) {
        FockSpace space(3, 4, s);
        CMatrix num = number_operator(space);
        for (Index n = 0; n <= space.max_particles(); ++n) {
            Index off = space.sector_offset(n);
            Index dim = space.sector_dims()[static_cast<std::size_t>(n)];
            EXPECT_LE(oracle::norm(num.block(off, off, dim, dim) - static_cast<double>(n) * identity(dim)), 0.0);
        }
        CVector f = random_one_particle(3, rng);
        CVector g = random_one_particle(3, rng);
        EXPECT_LE(oracle::norm(annihilate(space, f) - create(space, f).adjoint()), 1e-15);
        if (space.max_particles() >= 2) {
            CVector two = create(space, f) * create(space, g) * space.vacuum();
            if (two.norm() > 1e-12) {
                EXPECT_LE((num * two - 2.0 * two).norm(), 1e-12);
            }
        }
    }
}

TEST(Ccr, Examples) {
    FockSpace space = FockSpace::bosonic(2, 6);
    EXPECT_LE(ccr_residual(space, e(2, 0), e(2, 1)), 1e-12);
    EXPECT_LE(ccr_residual(space, e(2, 0), e(2, 0)), 1e-12);
    EXPECT_LE(ccr_residual(space, CVector::Zero(2), e(2, 0)), 0.0);
    EXPECT_EQ(kind_of([] { ccr_residual(FockSpace::fermionic(2), e(2, 0), e(2, 0)); }), ErrorKind::WrongStatistics);
}

TEST(Ccr, RandomVectorsAndEdgeSector) {
    Rng rng(93);
    for (Index d = 1; d <= 3; ++d) {
        for (Index n_max : {2, 5, 10}) {
            FockSpace space = FockSpace::bosonic(d, n_max);
            for (int k = 0; k < 5; ++k) {
                EXPECT_LE(ccr_residual(space, random_one_particle(d, rng), random_one_particle(d, rng)), 1e-12);
            }
        }
    }
    // On the top sector the truncation is visible, so the guard is necessary.
    FockSpace space = FockSpace::bosonic(1, 4);
    CVector f = e(1, 0);
    CMatrix comm = commutator(annihilate(space, f), create(space, f));
    EXPECT_GT(std::abs(comm(4, 4) - Complex(1.0)), 1.0);
}

TEST(Car, Examples) {
    Rng rng(94);
    for (Index d = 1; d <= 6; ++d) {
        FockSpace space = FockSpace::fermionic(d);
        CarReport r = car_check(space, random_one_particle(d, rng), random_one_particle(d, rng));
        EXPECT_LE(r.max_residual, 1e-12);
        EXPECT_LE(r.annihilators, 1e-12);
        EXPECT_LE(r.creators, 1e-12);
        EXPECT_LE(r.nilpotency, 1e-12);
        EXPECT_LE(r.repeated_argument, 1e-12);
        CMatrix a = annihilate(space, e(d, 0));
        EXPECT_LE(oracle::norm(anticommutator(a, a.adjoint()) - identity(space.total_dim())), 1e-14);
    }
    EXPECT_EQ(kind_of([] { car_check(FockSpace::bosonic(2, 2), e(2, 0), e(2, 0)); }), ErrorKind::WrongStatistics);
}

TEST(Car, JordanWignerOracle) {
    // Independent construction: mode i acts as Z^(i) (x) sigma_- on qubit i.
    // The two bases differ by a permutation, so compare the spectra of a
    // quadratic Hamiltonian sum h_ij a_i* a_j, which are basis independent.
    const Index d = 3;
    Rng rng(95);
    CMatrix h = random_hermitian(d, rng);
    FockSpace space = FockSpace::fermionic(d);
    CMatrix lib = CMatrix::Zero(space.total_dim(), space.total_dim());
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            lib += h(i, j) * create(space, e(d, i)) * annihilate(space, e(d, j));
        }
    }
    CMatrix lowering = CMatrix::Zero(2, 2);
    lowering(0, 1) = 1.0;
    std::vector<CMatrix> modes;
    for (Index i = 0; i < d; ++i) {
        CMatrix op = identity(1);
        for (Index q = 0; q < d; ++q) {
            op = kron(op, q < i ? pauli::z() : (q == i ? lowering : identity(2)));
        }
        modes.push_back(op);
    }
    CMatrix jw = CMatrix::Zero(8, 8);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            jw += h(i, j) * modes[static_cast<std::size_t>(i)].adjoint() * modes[static_cast<std::size_t>(j)];
        }
    }
    std::vector<Complex> a_ev;
    std::vector<Complex> b_ev;
    for (double v : oracle::hermitian_eigenvalues(symmetrize(lib))) {
        a_ev.emplace_back(v);
    }
    for (double v : oracle::hermitian_eigenvalues(symmetrize(jw))) {
        b_ev.emplace_back(v);
    }
    EXPECT_LE(oracle::multiset_gap(a_ev, b_ev), 1e-12);
}

TEST(Fields, Examples) {
    FockSpace space = FockSpace::bosonic(2, 6);
    EXPECT_LE(oracle::norm(field(space, CVector::Zero(2))), 0.0);
    CVector e1 = e(2, 0);
    CMatrix phi = field(space, e1);
    CMatrix pi = conjugate_field(space, e1);
    EXPECT_LE(hermiticity_residual(phi), 1e-13);
    EXPECT_LE(hermiticity_residual(pi), 1e-13);
    CMatrix guard = space.sector_projector(0, space.max_particles() - 2);
    CMatrix comm = commutator(phi, pi) * guard;
    EXPECT_LE(oracle::norm(comm - Complex(0.0, 1.0) * guard), 1e-12);
    EXPECT_EQ(kind_of([] { field(FockSpace::fermionic(2), CVector::Zero(2)); }), ErrorKind::WrongStatistics);
}

TEST(Fields, RandomCommutatorOnGuardedSectors) {
    Rng rng(96);
    for (Index d = 1; d <= 3; ++d) {
        FockSpace space = FockSpace::bosonic(d, 6);
        for (int k = 0; k < 5; ++k) {
            CVector f = random_one_particle(d, rng);
            CVector g = random_one_particle(d, rng);
            EXPECT_LE(field_commutator_residual(space, f, g), 1e-12);
        }
    }
}

TEST(Weyl, ExamplesAndUnitarity) {
    FockSpace space = FockSpace::bosonic(2, 8);
    EXPECT_LE(oracle::norm(weyl(space, CVector::Zero(2)) - identity(space.total_dim())), 1e-14);
    Rng rng(97);
    for (int k = 0; k < 10; ++k) {
        CMatrix w = weyl(space, random_one_particle(2, rng) * 2.0);
        EXPECT_LE(oracle::norm(w.adjoint() * w - identity(space.total_dim())), 1e-12);
    }
}

TEST(Weyl, ParallelVectorsRelation) {
    FockSpace space = FockSpace::bosonic(1, 30);
    CVector f(1);
    f(0) = 0.5;
    CVector g = 1.7 * f;
    EXPECT_LE(weyl_relation_residual(space, f, g), 1e-6);
}

TEST(Weyl, RelationConvergesOnLowSectors) {
    CVector f(1);
    f(0) = Complex(0.4, 0.2);
    CVector g(1);
    g(0) = Complex(-0.1, 0.5);
    auto sweep = weyl_relation_sweep(f, g, {10, 20, 30, 40});
    ASSERT_EQ(sweep.size(), 4u);
    EXPECT_LE(sweep.back().value, 1e-8);
    EXPECT_LE(sweep.back().value, sweep.front().value + 1e-14);
}

TEST(Weyl, DistanceFromIdentityApproachesTwo) {
    FockSpace space = FockSpace::bosonic(1, 40);
    CVector f(1);
    f(0) = 1.0;
    double dist = weyl_distance_from_identity(space, f);
    EXPECT_GE(dist, 1.9);
    EXPECT_LE(dist, 2.0 + 1e-12);
    EXPECT_NEAR(dist, oracle::norm(weyl(space, f) - identity(space.total_dim())), 1e-10);
    auto sweep = weyl_identity_distance_sweep(f, {10, 20, 30, 40, 50, 60});
    for (const SweepPoint &p : sweep) {
        EXPECT_GE(p.value, 1.9) << "n_max " << p.n_max;
    }
}

TEST(VacuumWeyl, Examples) {
    FockSpace space = FockSpace::bosonic(1, 25);
    EXPECT_LE(std::abs(vacuum_weyl(space, CVector::Zero(1)) - Complex(1.0)), 1e-14);
    CVector f(1);
    f(0) = 1.0;
    EXPECT_LE(std::abs(vacuum_weyl(space, f) - exp_series(-0.25)), 1e-6);
    CVector f2(1);
    f2(0) = 2.0;
    EXPECT_LE(std::abs(vacuum_weyl(FockSpace::bosonic(1, 60), f2) - exp_series(-1.0)), 1e-5);
    EXPECT_EQ(kind_of([] { vacuum_weyl(FockSpace::fermionic(1), CVector::Ones(1)); }), ErrorKind::WrongStatistics);
}

TEST(VacuumWeyl, SingleModeOracleAndMonotoneSweep) {
    CVector f(1);
    f(0) = Complex(0.6, 0.8);
    std::vector<Index> grid{5, 10, 15, 20, 25};
    auto sweep = vacuum_weyl_sweep(f, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        // <0| exp(i X) |0> with X = (a + a*)/sqrt(2) rotated by the phase of f,
        // computed from the oracle ladder matrix.
        Index n_max = grid[i];
        CMatrix a = single_mode_annihilator(n_max) * std::conj(f(0)) / std::abs(f(0));
        CMatrix x = (a + a.adjoint()) / std::sqrt(2.0) * std::abs(f(0));
        Eigen::SelfAdjointEigenSolver<CMatrix> es(x);
        CVector ph = es.eigenvalues().unaryExpr([](double v) { return std::exp(Complex(0.0, v)); });
        Complex ref = (es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint())(0, 0);
        EXPECT_NEAR(std::abs(ref - exp_series(-0.25)), sweep[i].value, 1e-12);
        if (i > 0) {
            EXPECT_LE(sweep[i].value, std::max(sweep[i - 1].value, 64 * std::numeric_limits<double>::epsilon()));
        }
    }
}

TEST(Multiparticle, Examples) {
    Rng rng(98);
    FockSpace b = FockSpace::bosonic(3, 3);
    CVector f = random_one_particle(3, rng);
    FockVector one = multiparticle(b, {f});
    EXPECT_LE((one.sector(1) - f).norm(), 1e-14);

    FockSpace fe = FockSpace::fermionic(3);
    EXPECT_LE(multiparticle(fe, {f, f}).norm(), 1e-14);

    CVector g = random_one_particle(3, rng);
    CVector fo = f.normalized();
    CVector go = (g - fo.dot(g) * fo).normalized();
    CMatrix sym = (kron(fo, go) + kron(go, fo)) / 2.0;
    EXPECT_NEAR(multiparticle(b, {fo, go}).norm(), sym.norm(), 1e-12);
    EXPECT_EQ(kind_of([&] { multiparticle(b, {f, f, f, f}); }), ErrorKind::SectorOverflow);
}

TEST(Multiparticle, EqualsSymmetrizedTensor) {
    Rng rng(99);
    for (Statistics s : {Statistics::bose, Statistics::fermi}) {
        FockSpace space(3, 3, s);
        for (Index n = 1; n <= 3; ++n) {
            std::vector<CVector> fs;
            CVector tensor = CVector::Ones(1);
            for (Index k = 0; k < n; ++k) {
                fs.push_back(random_one_particle(3, rng));
                tensor = kron(tensor, fs.back());
            }
            CVector expected = symmetrizer(n, 3, s) * tensor;
            FockVector v = multiparticle(space, fs);
            CVector embedded = sector_embedding(space, n) * v.sector(n);
            EXPECT_LE((embedded - expected).norm(), 1e-10);
            EXPECT_NEAR(v.norm(), v.sector(n).norm(), 1e-14);
        }
    }
}

TEST(Bogoliubov, Examples) {
    Rng rng(100);
    FockSpace space = FockSpace::bosonic(1, 30);
    CVector f(1);
    f(0) = 0.5;
    CVector g = random_one_particle(1, rng);
    BogoliubovReport zero = bogoliubov_check(space, 0.0, f, g);
    EXPECT_LE(zero.weyl, 1e-12);
    BogoliubovReport quarter = bogoliubov_check(space, std::numbers::pi / 2, f, g);
    EXPECT_LE(quarter.weyl, 1e-6);
    EXPECT_LE(quarter.symplectic, 1e-15);
    EXPECT_EQ(kind_of([&] { bogoliubov_check(FockSpace::fermionic(1), 0.1, f, g); }), ErrorKind::WrongStatistics);
}

}  // namespace
