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

#include "oplab/cli/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "oplab/algebra.hpp"
#include "oplab/bell.hpp"
#include "oplab/errors.hpp"
#include "oplab/fock.hpp"
#include "oplab/modular.hpp"
#include "oplab/net.hpp"
#include "oplab/random.hpp"
#include "oplab/spectra.hpp"
#include "oplab/states.hpp"

namespace oplab::cli {

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kTsirelson = 2.0 * std::numbers::sqrt2;

Projection random_proper_projection(Index n, Rng &rng) {
    return Projection(random_projection(n, random_index(1, n - 1, rng), rng));
}

// A pair of projections with ||[E, F]|| comfortably away from zero.
std::pair<Projection, Projection> noncommuting_pair(Index n, Rng &rng) {
    for (;;) {
        Projection e = random_proper_projection(n, rng);
        Projection f = random_proper_projection(n, rng);
        if (operator_norm(commutator(e.matrix(), f.matrix())) > 1e-3) {
            return {e, f};
        }
    }
}

void chsh_singlet(Report &r, Rng &, const Tolerances &) {
    const double pi = std::numbers::pi;
    SingletExample ex = singlet_example({0.0, pi / 4.0, pi, pi / 2.0});
    r.at_most("singlet value vs 1 + sqrt 2", "CHSH expectation in the spin singlet", std::abs(ex.value - (1.0 + kSqrt2)),
              1e-10);
    r.put("singlet_value", ex.value);
}

void tsirelson(Report &r, Rng &rng, const Tolerances &tol) {
    auto [e, f] = noncommuting_pair(2, rng);
    auto [e2, f2] = noncommuting_pair(3, rng);
    BellOperator optimal = bell_operator(summers_werner(e, f, e2, f2, tol), tol);
    HermEig eig = herm_eig(optimal.matrix, tol);
    double top = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
    r.at_most("max violation operator norm vs 2 sqrt 2", "norm of the maximal Bell operator", std::abs(top - kTsirelson),
              1e-9);
    double worst = 0.0;
    double worst_value = 0.0;
    for (int k = 0; k < 10000; ++k) {
        Index na = random_index(2, 4, rng);
        Index nb = random_index(2, 16 / na, rng);
        BellOperator bo = bell_operator(random_admissible_quadruple(na, nb, rng), tol);
        HermEig be = herm_eig(bo.matrix, tol);
        worst = std::max({worst, std::abs(be.values(0)), std::abs(be.values(be.values.size() - 1))});
        State s(random_density(na * nb, random_index(1, na * nb, rng), rng));
        worst_value = std::max(worst_value, std::abs(chsh_value(s, bo)));
    }
    r.at_most("largest random Bell operator norm", "quantum CHSH bound", worst, kTsirelson + 1e-9);
    r.at_most("largest random CHSH value", "quantum CHSH bound", worst_value, kTsirelson + 1e-9);
}

void classical(Report &r, Rng &, const Tolerances &) {
    ClassicalBound b = classical_bound_exhaustive();
    r.equals("classical maximum", "local deterministic assignments", b.max, 2);
    r.equals("classical minimum", "local deterministic assignments", b.min, -2);
}

void summers_werner_suite(Report &r, Rng &rng, const Tolerances &tol) {
    double involution = 0.0;
    double commutator_gap = 0.0;
    for (int k = 0; k < 100; ++k) {
        auto [e, f] = noncommuting_pair(random_index(2, 5, rng), rng);
        auto [a1, a2] = summers_werner_pair(e, f, tol);
        const CMatrix one = identity(a1.rows());
        involution = std::max({involution, operator_norm(a1 * a1 - one), operator_norm(a2 * a2 - one)});
        commutator_gap = std::max(commutator_gap, std::abs(operator_norm(commutator(a1, a2)) - 2.0));
    }
    r.at_most("max ||A_i^2 - 1||", "constructed observables are symmetries", involution, 1e-9);
    r.at_most("max | ||[A1, A2]|| - 2 |", "constructed observables maximally noncommuting", commutator_gap, 1e-9);
}

void gns_fidelity(Report &r, Rng &rng, const Tolerances &tol) {
    double expectation = 0.0;
    int mismatches = 0;
    for (int k = 0; k < 50; ++k) {
        Index n = random_index(2, 4, rng);
        State s(random_density(n, random_index(1, n, rng), rng));
        GnsTriple t = gns(s, {}, tol);
        for (int j = 0; j < 200; ++j) {
            CMatrix a = random_ginibre(n, n, rng);
            Complex lhs = t.omega().dot(t.rep(a) * t.omega());
            expectation = std::max(expectation, std::abs(lhs - eval(s, a)));
        }
        if (gns_irreducible(t, tol) != is_pure(s, tol)) {
            ++mismatches;
        }
    }
    r.at_most("max |<Omega, pi(A) Omega> - Tr(rho A)|", "GNS reproduces the state", expectation, 1e-10);
    r.equals("irreducibility vs purity mismatches", "GNS irreducible iff state pure", mismatches, 0);
}

void bicommutant(Report &r, Rng &rng, const Tolerances &tol) {
    double second = 0.0;
    double third = 0.0;
    for (int k = 0; k < 50; ++k) {
        Index n = random_index(2, 6, rng);
        Subalgebra m = generate(random_subalgebra_generators(n, rng), n, tol);
        BicommutantReport b = bicommutant_check(m, tol);
        second = std::max(second, b.bicommutant_distance);
        third = std::max(third, b.tricommutant_distance);
    }
    r.at_most("max span(M'') vs span(M)", "bicommutant equals the algebra", second, 1e-8);
    r.at_most("max span(M''') vs span(M')", "tricommutant equals the commutant", third, 1e-8);
}

void tomita_takesaki(Report &r, Rng &rng, const Tolerances &tol) {
    double worst = 0.0;
    double spectrum_gap = 0.0;
    for (int k = 0; k < 20; ++k) {
        Index n = random_index(2, 4, rng);
        State s(random_faithful_density(n, 0.2, rng));
        ModularData d = tomita(left_factor_algebra(n, n), purification(s), tol);
        worst = std::max(worst, verify_tomita_takesaki(d, {0.1, -0.1, 1.0, -1.0, std::numbers::pi, -std::numbers::pi},
                                                       1e-7, tol)
                                    .max_residual);
        HermEig p = herm_eig(s.rho(), tol);
        Spectrum ratios;
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                ratios.values.emplace_back(p.values(i) / p.values(j), 0.0);
            }
        }
        std::sort(ratios.values.begin(), ratios.values.end(),
                  [](Complex a, Complex b) { return a.real() < b.real(); });
        Spectrum delta;
        for (Index i = 0; i < d.delta_eig.values.size(); ++i) {
            delta.values.emplace_back(d.delta_eig.values(i), 0.0);
        }
        spectrum_gap = std::max(spectrum_gap, multiset_distance(delta, ratios));
    }
    r.at_most("max modular identity residual", "modular conjugation and flow identities", worst, 1e-7);
    r.at_most("modular spectrum vs eigenvalue ratios", "spectrum of the modular operator", spectrum_gap, 1e-8);
}

void kms(Report &r, Rng &rng, const Tolerances &tol) {
    double worst = 0.0;
    for (Index n = 2; n <= 4; ++n) {
        CMatrix h = random_hermitian(n, rng);
        h *= random_uniform(0.5, 2.0, rng) / operator_norm(h);
        CMatrix gibbs = functional_calculus(h, [](double x) { return Complex(std::exp(-x), 0.0); }, tol);
        State s(gibbs / gibbs.trace().real());
        ModularData d = tomita(left_factor_algebra(n, n), purification(s), tol);
        for (int k = 0; k < 100; ++k) {
            CMatrix a = kron(random_ginibre(n, n, rng), identity(n));
            CMatrix b = kron(random_ginibre(n, n, rng), identity(n));
            worst = std::max(worst, kms_check(d, a, b, 1.0));
        }
    }
    r.at_most("max KMS defect at beta = 1", "modular KMS condition", worst, 1e-8);
}

void fock_vacuum(Report &r, Rng &, const Tolerances &) {
    CVector f = CVector::Ones(1);
    std::vector<SweepPoint> sweep = vacuum_weyl_sweep(f, {5, 10, 15, 20, 25});
    r.at_most("vacuum Weyl error at N_max = 25", "vacuum expectation exp(-||f||^2/4)", sweep.back().value, 1e-6);
    // Errors below the floating-point floor of the computation are not ordered.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon();
    double rise = 0.0;
    OrderedJson trace = OrderedJson::array();
    for (std::size_t k = 0; k < sweep.size(); ++k) {
        trace.push_back({sweep[k].n_max, sweep[k].value});
        if (k > 0) {
            rise = std::max(rise, std::max(sweep[k].value, floor) - std::max(sweep[k - 1].value, floor));
        }
    }
    r.at_most("largest error increase along the sweep", "convergence in the truncation", rise, 0.0);
    r.put_json("vacuum_weyl_sweep", trace);
}

void ccr_car(Report &r, Rng &rng, const Tolerances &) {
    double ccr = 0.0;
    for (Index d = 1; d <= 3; ++d) {
        for (Index n_max : {2, 5, 10}) {
            FockSpace space = FockSpace::bosonic(d, n_max);
            for (int k = 0; k < 5; ++k) {
                ccr = std::max(ccr, ccr_residual(space, random_unit_vector(d, rng), random_unit_vector(d, rng)));
            }
            CVector e = basis_vector(d, 0);
            ccr = std::max(ccr, ccr_residual(space, e, e));
        }
    }
    double car = 0.0;
    double nilpotent = 0.0;
    for (Index d = 1; d <= 6; ++d) {
        FockSpace space = FockSpace::fermionic(d);
        for (int k = 0; k < 5; ++k) {
            CarReport c = car_check(space, random_unit_vector(d, rng), random_unit_vector(d, rng));
            car = std::max(car, c.max_residual);
            nilpotent = std::max(nilpotent, c.nilpotency);
        }
    }
    r.at_most("bosonic commutator residual on guarded sectors", "canonical commutation relations", ccr, 1e-12);
    r.at_most("fermionic anticommutator residual", "canonical anticommutation relations", car, 1e-12);
    r.at_most("max ||a*(f)^2||", "Pauli exclusion", nilpotent, 1e-12);
}

void spectral(Report &r, Rng &rng, const Tolerances &tol) {
    double mapping = 0.0;
    double gelfand = 0.0;
    double roots = 0.0;
    double orthogonality = 0.0;
    for (int k = 0; k < 100; ++k) {
        Index n = random_index(2, 5, rng);
        CMatrix a = random_ginibre(n, n, rng) / std::sqrt(static_cast<double>(n));
        std::vector<Complex> coeffs;
        for (Index c = 0; c <= random_index(1, 3, rng); ++c) {
            coeffs.emplace_back(random_uniform(-1.0, 1.0, rng), random_uniform(-1.0, 1.0, rng));
        }
        Spectrum mapped;
        for (Complex z : spectrum(a, tol).values) {
            mapped.values.push_back(scalar_polynomial(z, coeffs));
        }
        std::sort(mapped.values.begin(), mapped.values.end(), [](Complex x, Complex y) {
            return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
        });
        mapping = std::max(mapping, multiset_distance(spectrum(matrix_polynomial(a, coeffs), tol), mapped));

        double radius = 0.0;
        for (Complex z : spectrum(a, tol).values) {
            radius = std::max(radius, std::abs(z));
        }
        gelfand = std::max(gelfand, std::abs(spectral_radius_gelfand(a, 40) - radius));

        CMatrix p = random_faithful_density(n, 0.5, rng) * random_uniform(0.5, 4.0, rng);
        roots = std::max(roots, operator_norm(sqrt_positive(p, SqrtMethod::series, tol) -
                                              sqrt_positive(p, SqrtMethod::eigen, tol)));

        PosNegParts parts = pos_neg_parts(random_hermitian(n, rng), tol);
        orthogonality = std::max(orthogonality, operator_norm(parts.plus * parts.minus));
    }
    r.at_most("spectral mapping multiset distance", "spectral mapping for polynomials", mapping, 1e-8);
    r.at_most("Gelfand radius vs eigenvalues", "spectral radius formula", gelfand, 1e-8);
    r.at_most("series vs eigen square root", "square root as a power series", roots, 1e-8);
    r.at_most("max ||a+ a-||", "positive and negative parts are orthogonal", orthogonality, 1e-12);
}

void net_suite(Report &r, Rng &rng, const Tolerances &tol) {
    const CausalSite site = CausalSite::lattice(2, 3);
    const Index points = site.size();
    std::vector<Region> subsets;
    for (Index mask = 0; mask < (Index{1} << points); ++mask) {
        std::vector<Index> pts;
        for (Index p = 0; p < points; ++p) {
            if ((mask >> p) & 1) {
                pts.push_back(p);
            }
        }
        subsets.push_back(make_region(site, pts));
    }

    std::vector<std::pair<Region, Region>> nested;
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            if ((a & b) == a) {
                nested.emplace_back(subsets[a], subsets[b]);
            }
        }
    }
    IsotonyReport iso = check_isotony(site, nested);
    double iso_worst = 0.0;
    for (const auto &e : iso.entries) {
        iso_worst = std::max(iso_worst, e.residual);
    }
    r.at_most("isotony residual over all nested pairs", "isotony", iso_worst, 1e-10);

    std::vector<std::pair<Region, Region>> disjoint;
    std::vector<std::pair<Region, Region>> overlapping;
    for (std::size_t a = 1; a < subsets.size(); ++a) {
        for (std::size_t b = 1; b < subsets.size(); ++b) {
            if (regions_disjoint(site, subsets[a], subsets[b])) {
                disjoint.emplace_back(subsets[a], subsets[b]);
            } else if (a & b) {
                overlapping.emplace_back(subsets[a], subsets[b]);
            }
        }
    }
    std::shuffle(overlapping.begin(), overlapping.end(), rng);
    overlapping.resize(std::min<std::size_t>(overlapping.size(), 40));
    CausalityReport causal = check_causality(site, disjoint);
    double causal_worst = 0.0;
    for (const auto &e : causal.entries) {
        causal_worst = std::max(causal_worst, e.max_commutator);
    }
    r.at_most("max commutator over disjoint region pairs", "Einstein causality", causal_worst, 1e-12);
    std::size_t witnessed = 0;
    for (const auto &e : check_causality(site, overlapping).entries) {
        witnessed += e.witness.has_value();
    }
    r.equals("overlapping pairs without a witness", "local algebras fail to commute on shared points",
             static_cast<double>(overlapping.size() - witnessed), 0);
    r.put("disjoint_pairs", static_cast<double>(disjoint.size()));

    QuasilocalReport quasi = check_quasilocal(site, tol);
    r.equals("commutant dimension of the union of local algebras", "quasilocal algebra is everything",
             static_cast<double>(quasi.commutant_dim), 1);

    const CausalSite pair({{0, 0}, {0, 1}});
    const CausalSite row({{0, 0}, {0, 1}, {0, 2}});
    SiteEmbedding spread(pair, row, {0, 2});
    SiteEmbedding shift = SiteEmbedding::translation(row, site, 1, 0);
    FunctorReport functor = check_functor_laws(spread, shift);
    r.at_most("functor identity law", "embeddings act functorially", functor.identity_law, 1e-12);
    r.at_most("functor composition law", "embeddings act functorially", functor.composition_law, 1e-12);
    r.at_most("embedding injectivity defect", "embeddings are monomorphisms", functor.injectivity, 1e-12);

    LegEmbedding first = embed(spread);
    LegEmbedding second = embed(shift);
    LegEmbedding both = embed(compose(shift, spread));
    double contravariance = 0.0;
    for (int k = 0; k < 5; ++k) {
        State target(random_density(site.hilbert_dim(), random_index(1, 8, rng), rng));
        State stepwise = pullback(first, pullback(second, target));
        contravariance = std::max(contravariance, operator_norm(stepwise.rho() - pullback(both, target).rho()));
    }
    r.at_most("pullback contravariance residual", "states pull back contravariantly", contravariance, 1e-10);

    auto [e, f] = noncommuting_pair(2, rng);
    auto [e2, f2] = noncommuting_pair(2, rng);
    AdmissibleQuadruple q = summers_werner(e, f, e2, f2, tol);
    MaxViolation best = max_violation_state(bell_operator(q, tol));
    TransportValues moved = chsh_transport(q, both, extend_state(both, best.state));
    r.at_most("embedded value vs 2 sqrt 2", "CHSH value transported along embeddings",
              std::abs(std::abs(moved.direct) - kTsirelson), 1e-9);
    r.at_most("pulled-back value vs 2 sqrt 2", "CHSH value transported along embeddings",
              std::abs(std::abs(moved.pullback) - kTsirelson), 1e-9);
}

using Runner = void (*)(Report &, Rng &, const Tolerances &);

struct Entry {
    const char *title;
    Runner run;
};

const std::array<Entry, kCriteriaCount> kCriteria{{
    {"CHSH singlet value at the reference angles", chsh_singlet},
    {"Tsirelson bound", tsirelson},
    {"classical CHSH bound", classical},
    {"maximal-violation observables", summers_werner_suite},
    {"GNS fidelity and irreducibility", gns_fidelity},
    {"bicommutant theorem", bicommutant},
    {"modular theory identities", tomita_takesaki},
    {"KMS condition", kms},
    {"Fock vacuum Weyl expectation", fock_vacuum},
    {"CCR and CAR", ccr_car},
    {"spectral and positivity suite", spectral},
    {"local net axioms and CHSH transport", net_suite},
}};

}  // namespace

bool CriterionResult::pass() const {
    if (checks.empty()) {
        return false;
    }
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

CriterionResult run_criterion(int id, std::uint64_t seed, const Tolerances &tol) {
    if (id < 1 || id > kCriteriaCount) {
        throw Error(ErrorKind::InvalidArgument, "no acceptance criterion " + std::to_string(id));
    }
    const Entry &entry = kCriteria[static_cast<std::size_t>(id - 1)];
    Rng rng(seed + static_cast<std::uint64_t>(id));
    Report report;
    auto start = std::chrono::steady_clock::now();
    try {
        entry.run(report, rng, tol);
    } catch (const std::exception &ex) {
        report.checks.push_back({std::string("raised: ") + ex.what(), entry.title, 1.0, 0.0, Comparison::equals, false});
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return CriterionResult{id, entry.title, std::move(report.checks), seconds};
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const Tolerances &tol) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriteriaCount; ++id) {
        out.push_back(run_criterion(id, seed, tol));
    }
    return out;
}

std::string summary_line(const CriterionResult &r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "[%s] %2d %s (%zu checks, %.2f s)", r.pass() ? "PASS" : "FAIL", r.id,
                  r.title.c_str(), r.checks.size(), r.seconds);
    return buf;
}

}  // namespace oplab::cli
