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

#include <array>
#include <cmath>

#include "oplab/errors.hpp"
#include "oplab/random.hpp"
#include "oplab/spectra.hpp"
#include "support/oracles.hpp"

namespace {

using namespace oplab;

CMatrix diag2(double a, double b) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

TEST(Spectrum, Examples) {
    Rng rng(21);
    Spectrum p = spectrum(random_projection(2, 1, rng));
    ASSERT_EQ(p.values.size(), 2u);
    EXPECT_NEAR(std::abs(p.values[0]), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(p.values[1] - Complex(1.0)), 0.0, 1e-12);

    CMatrix nil = CMatrix::Zero(2, 2);
    nil(0, 1) = 2.0;
    Spectrum s = spectrum(nil);
    ASSERT_EQ(s.values.size(), 2u);
    EXPECT_LE(std::abs(s.values[0]) + std::abs(s.values[1]), 1e-12);
}

TEST(Spectrum, MappingForPolynomialsProperty) {
    Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = random_index(1, 8, rng);
        CMatrix a = random_hermitian(n, rng);
        int degree = static_cast<int>(random_index(0, 4, rng));
        std::vector<Complex> coeffs;
        for (int k = 0; k <= degree; ++k) {
            coeffs.emplace_back(random_uniform(-1, 1, rng), random_uniform(-1, 1, rng));
        }
        CMatrix pa = matrix_polynomial(a, coeffs);
        std::vector<Complex> mapped;
        for (double lambda : oracle::hermitian_eigenvalues(a)) {
            Complex v = 0.0;
            for (int k = degree; k >= 0; --k) {
                v = v * lambda + coeffs[static_cast<std::size_t>(k)];
            }
            mapped.push_back(v);
        }
        EXPECT_LE(oracle::multiset_gap(spectrum(pa).values, mapped), 1e-8);
        Spectrum mine{mapped};
        EXPECT_LE(multiset_distance(spectrum(pa), mine), 1e-8);
    }
}

TEST(Spectrum, QuadraticMinusLinear) {
    Rng rng(23);
    CMatrix a = random_hermitian(6, rng);
    std::array<Complex, 3> coeffs{0.0, -3.0, 1.0};
    CMatrix pa = a * a - 3.0 * a;
    std::vector<Complex> mapped;
    for (double x : oracle::hermitian_eigenvalues(a)) {
        mapped.emplace_back(x * x - 3.0 * x);
    }
    EXPECT_LE(oracle::multiset_gap(spectrum(matrix_polynomial(a, coeffs)).values, mapped), 1e-8);
    EXPECT_LE(oracle::norm(matrix_polynomial(a, coeffs) - pa), 1e-12 * oracle::norm(pa));
}

TEST(Spectrum, HermitianValuesReal) {
    Rng rng(24);
    for (const Complex &v : spectrum(random_hermitian(7, rng)).values) {
        EXPECT_LE(std::abs(v.imag()), 1e-10);
    }
}

TEST(Gelfand, Examples) {
    EXPECT_NEAR(spectral_radius_gelfand(pauli::z(), 40), 1.0, 1e-12);
    CMatrix nil = CMatrix::Zero(2, 2);
    nil(0, 1) = 2.0;
    EXPECT_EQ(spectral_radius_gelfand(nil, 40), 0.0);
    EXPECT_NEAR(operator_norm(nil), 2.0, 1e-15);
}

TEST(Gelfand, MatchesEigenvalueOracleOnHermitian) {
    Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = random_index(1, 16, rng);
        CMatrix a = random_hermitian(n, rng) * random_uniform(0.01, 100.0, rng);
        double oracle_radius = 0.0;
        for (double x : oracle::hermitian_eigenvalues(a)) {
            oracle_radius = std::max(oracle_radius, std::abs(x));
        }
        EXPECT_LE(std::abs(spectral_radius_gelfand(a, 40) - oracle_radius), 1e-8 * std::max(1.0, oracle_radius));
        EXPECT_LE(std::abs(spectral_radius_gelfand(a, 40) - operator_norm(a)), 1e-8 * std::max(1.0, oracle_radius));
    }
}

TEST(Gelfand, NonNormalApproachesEigenvalueRadius) {
    Rng rng(26);
    CMatrix a = random_ginibre(5, 5, rng);
    double oracle_radius = 0.0;
    for (const Complex &v : oracle::eigenvalues(a)) {
        oracle_radius = std::max(oracle_radius, std::abs(v));
    }
    EXPECT_LE(std::abs(spectral_radius_gelfand(a, 40) - oracle_radius), 1e-6 * oracle_radius);
    EXPECT_LE(spectral_radius_gelfand(a, 40), operator_norm(a) + 1e-12);
}

TEST(Positivity, Examples) {
    Rng rng(27);
    CMatrix x = random_ginibre(4, 4, rng);
    EXPECT_TRUE(is_positive(x.adjoint() * x));
    EXPECT_FALSE(is_positive(-identity(3)));
    EXPECT_TRUE(is_positive(CMatrix::Zero(3, 3)));
    EXPECT_FALSE(is_positive(x));
}

TEST(SqrtPositive, Examples) {
    for (SqrtMethod m : {SqrtMethod::eigen, SqrtMethod::series}) {
        EXPECT_LE(oracle::norm(sqrt_positive(diag2(4, 9), m) - diag2(2, 3)), 1e-8);
        EXPECT_LE(oracle::norm(sqrt_positive(identity(3), m) - identity(3)), 1e-12);
    }
}

TEST(SqrtPositive, SeriesMatchesEigenOracle) {
    Rng rng(28);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = random_index(1, 6, rng);
        CMatrix a = random_faithful_density(n, 0.05, rng) * random_uniform(0.5, 5.0, rng);
        a = symmetrize(a);
        CMatrix by_eigen = sqrt_positive(a, SqrtMethod::eigen);
        CMatrix by_series = sqrt_positive(a, SqrtMethod::series);
        CMatrix ref = oracle::hermitian_function(a, [](double x) { return std::sqrt(std::max(0.0, x)); });
        double scale = std::sqrt(oracle::norm(a));
        EXPECT_LE(oracle::norm(by_eigen - ref), 1e-10 * scale);
        EXPECT_LE(oracle::norm(by_series - by_eigen), 1e-8 * scale);
        EXPECT_LE(oracle::norm(by_eigen * by_eigen - a), 1e-8 * oracle::norm(a));
        EXPECT_LE(oracle::norm(by_eigen * a - a * by_eigen), 1e-10 * oracle::norm(a));
        EXPECT_TRUE(is_positive(by_eigen));
    }
}

TEST(SqrtPositive, Errors) {
    EXPECT_EQ(kind_of([] { sqrt_positive(-identity(2), SqrtMethod::eigen); }), ErrorKind::NotPositive);
    EXPECT_EQ(kind_of([] { sqrt_positive(-identity(2), SqrtMethod::series); }), ErrorKind::NotPositive);
}

TEST(PosNegParts, Examples) {
    PosNegParts z = pos_neg_parts(pauli::z());
    EXPECT_LE(oracle::norm(z.plus - diag2(1, 0)), 1e-15);
    EXPECT_LE(oracle::norm(z.minus - diag2(0, 1)), 1e-15);
    PosNegParts p = pos_neg_parts(diag2(1, 2));
    EXPECT_LE(oracle::norm(p.plus - diag2(1, 2)), 1e-15);
    EXPECT_LE(oracle::norm(p.minus), 1e-15);
}

TEST(PosNegParts, FunctionalCalculusOracle) {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = random_index(1, 8, rng);
        CMatrix a = random_hermitian(n, rng);
        PosNegParts parts = pos_neg_parts(a);
        double na = oracle::norm(a);
        CMatrix plus = oracle::hermitian_function(a, [](double x) { return (std::abs(x) + x) / 2; });
        CMatrix minus = oracle::hermitian_function(a, [](double x) { return (std::abs(x) - x) / 2; });
        EXPECT_LE(oracle::norm(parts.plus - plus), 1e-10 * na);
        EXPECT_LE(oracle::norm(parts.minus - minus), 1e-10 * na);
        EXPECT_LE(oracle::norm(parts.plus - parts.minus - a), 1e-12 * std::max(1.0, na));
        EXPECT_LE(oracle::norm(parts.plus * parts.minus), 1e-12 * std::max(1.0, na * na));
        EXPECT_LE(oracle::norm(parts.plus * a - a * parts.plus), 1e-12 * std::max(1.0, na * na));
    }
}

TEST(PosNegParts, RejectsNonHermitian) {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 1) = 1.0;
    EXPECT_EQ(kind_of([&] { pos_neg_parts(a); }), ErrorKind::NotHermitian);
}

TEST(FunctionalCalculus, Examples) {
    Rng rng(30);
    CMatrix a = random_hermitian(4, rng);
    EXPECT_LE(oracle::norm(functional_calculus(a, [](double x) { return Complex(x); }) - a), 1e-12);
    CMatrix d = diag2(0.0, std::log(2.0));
    EXPECT_LE(oracle::norm(functional_calculus(d, [](double x) { return Complex(std::exp(x)); }) - diag2(1, 2)), 1e-14);
}

TEST(FunctionalCalculus, HomomorphismAgainstPolynomials) {
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = random_index(1, 7, rng);
        CMatrix a = random_hermitian(n, rng);
        std::array<Complex, 3> fc{random_uniform(-1, 1, rng), random_uniform(-1, 1, rng), random_uniform(-1, 1, rng)};
        std::array<Complex, 2> gc{random_uniform(-1, 1, rng), random_uniform(-1, 1, rng)};
        auto f = [&](double x) { return fc[0] + fc[1] * x + fc[2] * x * x; };
        auto g = [&](double x) { return gc[0] + gc[1] * x; };
        CMatrix fa = functional_calculus(a, f);
        CMatrix ga = functional_calculus(a, g);
        CMatrix fga = functional_calculus(a, [&](double x) { return f(x) * g(x); });
        EXPECT_LE(oracle::norm(fga - fa * ga), 1e-10);
        CMatrix direct = fc[0] * identity(n) + fc[1] * a + fc[2] * a * a;
        EXPECT_LE(oracle::norm(fa - direct), 1e-10);
        std::vector<Complex> mapped;
        for (double x : oracle::hermitian_eigenvalues(a)) {
            mapped.push_back(f(x));
        }
        EXPECT_LE(oracle::multiset_gap(spectrum(fa).values, mapped), 1e-8);
    }
}

TEST(FunctionalCalculus, UndefinedOnSpectrum) {
    EXPECT_EQ(kind_of([] { functional_calculus(diag2(0, 1), [](double x) { return Complex(1.0 / x); }); }),
              ErrorKind::FunctionUndefinedOnSpectrum);
}

TEST(Order, Examples) {
    Rng rng(32);
    CMatrix x = random_ginibre(4, 4, rng);
    CMatrix a = x.adjoint() * x;
    EXPECT_TRUE(order_leq(a, operator_norm(a) * identity(4)));
    EXPECT_TRUE(order_leq(a, a));
    EXPECT_EQ(kind_of([&] { order_leq(a, identity(3)); }), ErrorKind::DimMismatch);
    EXPECT_EQ(kind_of([&] { order_leq(x, a); }), ErrorKind::NotHermitian);
}

TEST(Order, CongruenceAndMonotoneNorm) {
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        Index n = random_index(1, 6, rng);
        CMatrix y = random_ginibre(n, n, rng);
        CMatrix z = random_ginibre(n, n, rng);
        CMatrix b = y.adjoint() * y;
        CMatrix a = b + z.adjoint() * z;
        ASSERT_TRUE(order_leq(b, a));
        EXPECT_GE(operator_norm(a), operator_norm(b) - 1e-12);
        CMatrix c = random_ginibre(n, n, rng);
        EXPECT_TRUE(order_leq(symmetrize(c.adjoint() * b * c), symmetrize(c.adjoint() * a * c)));
    }
}

TEST(Order, PartialOrderLaws) {
    Rng rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        Index n = random_index(1, 5, rng);
        CMatrix a = random_hermitian(n, rng);
        CMatrix p1 = random_ginibre(n, n, rng);
        CMatrix p2 = random_ginibre(n, n, rng);
        CMatrix b = a + p1.adjoint() * p1;
        CMatrix c = b + p2.adjoint() * p2;
        EXPECT_TRUE(order_leq(a, a));
        EXPECT_TRUE(order_leq(a, b) && order_leq(b, c));
        EXPECT_TRUE(order_leq(a, c));
        if (order_leq(b, a)) {
            EXPECT_LE(oracle::norm(a - b), 1e-10);
        }
    }
}

}  // namespace
