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

#include "oplab/cli/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

#include "oplab/bell.hpp"
#include "oplab/cli/acceptance.hpp"
#include "oplab/errors.hpp"
#include "oplab/fock.hpp"
#include "oplab/json_io.hpp"
#include "oplab/modular.hpp"
#include "oplab/net.hpp"
#include "oplab/spectra.hpp"
#include "oplab/states.hpp"

namespace oplab::cli {

namespace {

const double kTsirelson = 2.0 * std::numbers::sqrt2;

[[noreturn]] void schema(const std::string &field, const std::string &what) {
    throw Error(ErrorKind::Schema, "field '" + field + "': " + what);
}

CVector vector_from_json(const Json &j, const std::string &field, Index expected) {
    if (!j.is_array()) {
        schema(field, "expected an array");
    }
    if (static_cast<Index>(j.size()) != expected) {
        schema(field, "expected " + std::to_string(expected) + " components");
    }
    CVector v(expected);
    for (Index k = 0; k < expected; ++k) {
        const Json &e = j[static_cast<std::size_t>(k)];
        const std::string entry = field + "[" + std::to_string(k) + "]";
        if (e.is_number()) {
            v(k) = e.get<double>();
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            v(k) = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
            schema(entry, "expected a number or [re, im]");
        }
    }
    return v;
}

const Json &require(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        schema(key, "missing");
    }
    return j.at(key);
}

OrderedJson complex_list(const std::vector<Complex> &values) {
    OrderedJson out = OrderedJson::array();
    for (Complex z : values) {
        out.push_back({z.real(), z.imag()});
    }
    return out;
}

OrderedJson real_list(const RVector &values) {
    OrderedJson out = OrderedJson::array();
    for (Index k = 0; k < values.size(); ++k) {
        out.push_back(values(k));
    }
    return out;
}

Json default_input(const std::string &sub) {
    if (sub == "spectra") {
        return Json{{"matrix", {{"dim", 2}, {"data", {2.0, 1.0, 1.0, 3.0}}}}, {"polynomial", {1.0, -2.0, 1.0}}};
    }
    if (sub == "gns" || sub == "modular") {
        return Json{{"state", {{"dim", 2}, {"rho", {{"dim", 2}, {"data", {0.7, 0.1, 0.1, 0.3}}}}}}};
    }
    if (sub == "bell") {
        return Json{{"angles", {0.0, std::numbers::pi / 4.0, std::numbers::pi, std::numbers::pi / 2.0}}};
    }
    if (sub == "fock") {
        return Json{{"fock", {{"d", 1}, {"n_max", 25}, {"statistics", "bose"}}}, {"f", {1.0}}, {"g", {{0.0, 0.5}}}};
    }
    return Json{{"site", {{"points", {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}}}}};
}

void spectra_report(const Json &in, Report &r, const Tolerances &tol) {
    CMatrix a = matrix_from_json(require(in, "matrix"), "matrix");
    std::vector<Complex> coeffs{0.0, 0.0, 1.0};
    if (in.contains("polynomial")) {
        const Json &p = in.at("polynomial");
        CVector c = vector_from_json(p, "polynomial", p.is_array() ? static_cast<Index>(p.size()) : 0);
        coeffs.assign(c.data(), c.data() + c.size());
    }
    Spectrum s = spectrum(a, tol);
    Spectrum mapped;
    for (Complex z : s.values) {
        mapped.values.push_back(scalar_polynomial(z, coeffs));
    }
    std::sort(mapped.values.begin(), mapped.values.end(), [](Complex x, Complex y) {
        return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    });
    r.at_most("spectral mapping", "sigma(p(a)) = p(sigma(a))",
              multiset_distance(spectrum(matrix_polynomial(a, coeffs), tol), mapped), 1e-8);
    double radius = 0.0;
    for (Complex z : s.values) {
        radius = std::max(radius, std::abs(z));
    }
    double gelfand = spectral_radius_gelfand(a, 40);
    r.at_most("Gelfand radius vs eigenvalues", "r(a) = lim ||a^n||^(1/n)", std::abs(gelfand - radius), 1e-8);
    r.put_json("spectrum", complex_list(s.values));
    r.put("spectral_radius", radius);
    if (is_hermitian(a, tol)) {
        PosNegParts parts = pos_neg_parts(a, tol);
        r.at_most("positive and negative parts orthogonal", "a+ a- = 0", operator_norm(parts.plus * parts.minus),
                  1e-12);
        r.at_most("positive and negative parts reconstruct", "a = a+ - a-",
                  operator_norm(parts.plus - parts.minus - a), 1e-12 * std::max(1.0, operator_norm(a)));
        if (is_positive(a, tol) && operator_norm(a) > 0.0) {
            CMatrix eig = sqrt_positive(a, SqrtMethod::eigen, tol);
            r.at_most("series vs eigen square root", "square root as a power series",
                      operator_norm(sqrt_positive(a, SqrtMethod::series, tol) - eig), 1e-8);
            r.at_most("square root squares back", "sqrt(a)^2 = a", operator_norm(eig * eig - a),
                      1e-10 * std::max(1.0, operator_norm(a)));
        }
    }
}

void gns_report(const Json &in, Report &r, const Tolerances &tol) {
    State s = state_from_json(require(in, "state"), "state");
    GnsTriple t = gns(s, {}, tol);
    GnsReport g = gns_verify(t, tol);
    r.at_most("expectation residual", "<Omega, pi(A) Omega> = omega(A)", g.expectation_residual, 1e-10);
    r.at_most("homomorphism residual", "pi(AB) = pi(A) pi(B)", g.homomorphism_residual, 1e-10);
    r.at_most("star residual", "pi(A*) = pi(A)*", g.star_residual, 1e-10);
    r.equals("cyclic span dimension", "Omega is cyclic", static_cast<double>(g.cyclic_span_dim),
             static_cast<double>(g.rep_dim));
    bool irreducible = gns_irreducible(t, tol);
    bool pure = is_pure(s, tol);
    r.holds("irreducible iff pure", "GNS representation irreducible iff the state is pure", irreducible == pure);
    r.put("rep_dim", static_cast<double>(g.rep_dim));
    r.put("state_rank", static_cast<double>(t.state_rank()));
    r.data["pure"] = pure;
    r.data["irreducible"] = irreducible;
}

void modular_report(const Json &in, Report &r, const Tolerances &tol, Rng &rng) {
    State s = state_from_json(require(in, "state"), "state");
    const Index n = s.dim();
    ModularData d = tomita(left_factor_algebra(n, n), purification(s), tol);
    TomitaTakesakiReport tt = verify_tomita_takesaki(d, {0.1, -0.1, 1.0, -1.0, std::numbers::pi, -std::numbers::pi},
                                                     1e-7, tol);
    r.at_most("J Omega = Omega", "modular conjugation fixes the vector", tt.j_omega, 1e-7);
    r.at_most("Delta Omega = Omega", "modular operator fixes the vector", tt.delta_omega, 1e-7);
    r.at_most("J^2 = 1", "modular conjugation is an involution", tt.j_involution, 1e-7);
    r.at_most("J = J*", "modular conjugation is self-adjoint", tt.j_selfadjoint, 1e-7);
    r.at_most("Delta^-1 = S S*", "polar decomposition of S", tt.delta_inverse, 1e-7);
    r.at_most("J Delta^1/2 J = Delta^-1/2", "conjugation inverts the modular operator", tt.delta_sqrt_relation, 1e-7);
    r.at_most("J M J = M'", "modular conjugation maps M onto its commutant", tt.jmj_commutant, 1e-7);
    r.at_most("Delta^it M Delta^-it = M", "modular flow preserves M", tt.flow_invariance, 1e-7);
    HermEig p = herm_eig(s.rho(), tol);
    Spectrum ratios;
    Spectrum delta;
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            ratios.values.emplace_back(p.values(i) / p.values(j), 0.0);
            delta.values.emplace_back(d.delta_eig.values(i * n + j), 0.0);
        }
    }
    std::sort(ratios.values.begin(), ratios.values.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    r.at_most("modular spectrum vs eigenvalue ratios", "spectrum of Delta = {p_i / p_j}",
              multiset_distance(delta, ratios), 1e-8);
    double kms_worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        CMatrix a = kron(random_ginibre(n, n, rng), identity(n));
        CMatrix b = kron(random_ginibre(n, n, rng), identity(n));
        kms_worst = std::max(kms_worst, kms_check(d, a, b, 1.0));
    }
    r.at_most("KMS defect at beta = 1", "omega(Delta^-1 A Delta B) = omega(B A)", kms_worst, 1e-8);
    r.put("frame_condition", d.frame_condition);
    r.put_json("delta_spectrum", real_list(d.delta_eig.values));
}

void bell_report(const Json &in, Report &r, const Tolerances &tol, std::uint64_t seed) {
    ClassicalBound cb = classical_bound_exhaustive();
    r.equals("classical maximum", "local deterministic bound", cb.max, 2);
    r.equals("classical minimum", "local deterministic bound", cb.min, -2);
    if (in.contains("quadruple")) {
        AdmissibleQuadruple q = quadruple_from_json(in.at("quadruple"), "quadruple");
        State s = state_from_json(require(in, "state"), "state");
        QuadrupleReport v = validate(q, tol);
        r.holds("quadruple admissible", "admissible quadruple", v.passed);
        if (!v.passed) {
            return;
        }
        BellOperator bo = bell_operator(q, tol);
        double value = chsh_value(s, bo);
        double norm = operator_norm(bo.matrix);
        r.at_most("|omega(C)| within Tsirelson bound", "|omega(C)| <= 2 sqrt 2", std::abs(value), kTsirelson + 1e-9);
        r.at_most("||C|| within Tsirelson bound", "||C|| <= 2 sqrt 2", norm, kTsirelson + 1e-9);
        if (involution_residual(q) <= 1e-10) {
            r.at_most("square identity", "C^2 = 4 - [A1, A2][B1, B2]", square_identity_residual(bo), 1e-10);
        }
        r.put("value", value);
        r.put("operator_norm", norm);
        r.put("max_violation", max_violation_state(bo).value);
        return;
    }
    const Json &angles_json = require(in, "angles");
    CVector angles = vector_from_json(angles_json, "angles", 4);
    std::array<double, 4> a{angles(0).real(), angles(1).real(), angles(2).real(), angles(3).real()};
    SingletExample ex = singlet_example(a);
    r.at_most("matrix value vs closed form", "singlet correlation cosine formula", std::abs(ex.value - ex.closed_form),
              1e-12);
    r.at_most("total spin annihilates the singlet", "(s_k + t_k) psi = 0", ex.total_spin, 1e-12);
    r.at_most("|value| within Tsirelson bound", "|omega(C)| <= 2 sqrt 2", std::abs(ex.value), kTsirelson + 1e-9);
    OptimizerResult opt = chsh_optimize(a, 20, 8, seed);
    r.at_least("optimizer does not lose ground", "coordinate ascent is monotone", opt.value - ex.value, 0.0);
    r.at_most("optimum vs 2 sqrt 2", "maximal CHSH violation", std::abs(opt.value - kTsirelson), 1e-6);
    r.put("value", ex.value);
    r.put("closed_form", ex.closed_form);
    r.put("optimum", opt.value);
    r.put_json("optimal_angles", opt.parameters);
    r.put_json("optimizer_trace", opt.trace);
}

void fock_report(const Json &in, Report &r, const Tolerances &) {
    FockConfig cfg = fock_config_from_json(require(in, "fock"), "fock");
    FockSpace space(cfg.d, cfg.n_max, cfg.statistics);
    CVector f = vector_from_json(require(in, "f"), "f", cfg.d);
    CVector g = in.contains("g") ? vector_from_json(in.at("g"), "g", cfg.d) : CVector(CVector::Zero(cfg.d));
    r.put("total_dim", static_cast<double>(space.total_dim()));
    OrderedJson sectors = OrderedJson::array();
    for (Index s : space.sector_dims()) {
        sectors.push_back(s);
    }
    r.put_json("sector_dims", sectors);
    CMatrix af = annihilate(space, f);
    r.at_most("a(f) Omega = 0", "annihilators kill the vacuum", (af * space.vacuum()).norm(), 1e-12);
    if (cfg.statistics == Statistics::fermi) {
        CarReport c = car_check(space, f, g);
        r.at_most("{a(f), a*(g)} = <f, g>", "canonical anticommutation relations", c.anticommutator, 1e-12);
        r.at_most("{a(f), a(g)} = 0", "canonical anticommutation relations", c.annihilators, 1e-12);
        r.at_most("{a*(f), a*(g)} = 0", "canonical anticommutation relations", c.creators, 1e-12);
        r.at_most("a*(f)^2 = 0", "Pauli exclusion", c.nilpotency, 1e-12);
        return;
    }
    r.at_most("[a(f), a*(g)] = <f, g> on guarded sectors", "canonical commutation relations",
              ccr_residual(space, f, g), 1e-12);
    r.at_most("[Phi(f), Phi(g)] = i Im<f, g> on guarded sectors", "field commutator",
              field_commutator_residual(space, f, g), 1e-12);
    r.at_most("Phi(f) Hermitian", "field operators are self-adjoint", hermiticity_residual(field(space, f)), 1e-13);
    CMatrix w = weyl(space, f);
    r.at_most("W(f) unitary", "Weyl operators are unitary",
              operator_norm(w.adjoint() * w - identity(space.total_dim())), 1e-12);
    BogoliubovReport bog = bogoliubov_check(space, std::numbers::pi / 2.0, f, g);
    r.at_most("symplectic form invariant", "phase rotations preserve Im<f, g>", bog.symplectic, 1e-14);
    r.at_most("Gamma W(f) Gamma* = W(i f)", "Bogoliubov transformation of Weyl operators", bog.weyl, 1e-10);
    Complex vac = vacuum_weyl(space, f);
    r.put("vacuum_weyl_re", vac.real());
    r.put("vacuum_weyl_im", vac.imag());
    r.put("vacuum_weyl_error", std::abs(vac - std::exp(-f.squaredNorm() / 4.0)));
    r.put("weyl_relation_residual_on_vacuum", weyl_relation_residual(space, f, g, 0));
    r.put("weyl_distance_from_identity", weyl_distance_from_identity(space, f));
}

void net_report(const Json &in, Report &r, const Tolerances &tol, Rng &rng) {
    CausalSite site = site_from_json(require(in, "site"), "site");
    std::vector<Region> regions;
    if (in.contains("regions")) {
        const Json &list = in.at("regions");
        if (!list.is_array()) {
            schema("regions", "expected an array of regions");
        }
        for (std::size_t k = 0; k < list.size(); ++k) {
            regions.push_back(region_from_json(site, list[k], "regions[" + std::to_string(k) + "]"));
        }
    } else {
        for (Index p = 0; p < site.size(); ++p) {
            regions.push_back(Region{{p}});
        }
    }
    std::vector<Index> all_points;
    for (Index p = 0; p < site.size(); ++p) {
        all_points.push_back(p);
    }
    Region whole{all_points};
    std::vector<std::pair<Region, Region>> nested;
    std::vector<std::pair<Region, Region>> pairs;
    for (const Region &a : regions) {
        nested.emplace_back(Region{}, a);
        nested.emplace_back(a, whole);
        for (const Region &b : regions) {
            if (std::includes(b.points.begin(), b.points.end(), a.points.begin(), a.points.end())) {
                nested.emplace_back(a, b);
            }
            pairs.emplace_back(a, b);
        }
    }
    IsotonyReport iso = check_isotony(site, nested);
    double iso_worst = 0.0;
    for (const auto &e : iso.entries) {
        iso_worst = std::max(iso_worst, e.residual);
    }
    r.at_most("isotony", "A(O1) inside A(O2) for O1 inside O2", iso_worst, 1e-10);
    CausalityReport causal = check_causality(site, pairs);
    double worst = 0.0;
    OrderedJson witnesses = OrderedJson::array();
    for (const auto &e : causal.entries) {
        if (e.disjoint) {
            worst = std::max(worst, e.max_commutator);
        } else if (e.witness) {
            witnesses.push_back(OrderedJson{{"regions", {describe(e.a), describe(e.b)}},
                                            {"points", {e.witness->point_a, e.witness->point_b}},
                                            {"paulis", {e.witness->pauli_a, e.witness->pauli_b}},
                                            {"commutator_norm", e.witness->commutator_norm}});
        }
    }
    r.at_most("Einstein causality", "[A(O1), A(O2)] = 0 for disjoint regions", worst, 1e-12);
    r.put_json("noncommuting_witnesses", witnesses);
    QuasilocalReport quasi = check_quasilocal(site, tol);
    r.equals("quasilocal commutant dimension", "local algebras generate everything",
             static_cast<double>(quasi.commutant_dim), 1);
    SiteEmbedding id = SiteEmbedding::identity(site);
    FunctorReport functor = check_functor_laws(id, id);
    r.at_most("functor laws", "alpha_id = id and alpha_(e2 e1) = alpha_e2 alpha_e1",
              std::max(functor.identity_law, functor.composition_law), 1e-12);
    if (site.hilbert_dim() <= 256) {
        State target(random_density(site.hilbert_dim(), 2, rng));
        State back = pullback(embed(id), target);
        r.at_most("pullback along the identity", "identity pulls states back to themselves",
                  operator_norm(back.rho() - target.rho()), 1e-12);
    }
    r.data["time_slice"] = "not applicable: no dynamics is modeled";
}

void selftest_report(Report &r, std::uint64_t seed, const Tolerances &tol) {
    OrderedJson criteria = OrderedJson::array();
    for (const CriterionResult &c : run_acceptance(seed, tol)) {
        for (const Check &check : c.checks) {
            Check tagged = check;
            tagged.name = "criterion " + std::to_string(c.id) + ": " + check.name;
            r.checks.push_back(tagged);
        }
        criteria.push_back(OrderedJson{{"id", c.id}, {"title", c.title}, {"pass", c.pass()}});
    }
    r.put_json("criteria", criteria);
}

Tolerances apply_overrides(const RunConfig &cfg, Report &r) {
    Tolerances tol = default_tolerances();
    for (const std::string &spec : cfg.tolerance_overrides) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) {
            schema("--tol", "expected NAME=VALUE, got " + spec);
        }
        std::string name = spec.substr(0, eq);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(spec.substr(eq + 1), &used);
            if (used != spec.size() - eq - 1) {
                throw std::invalid_argument(spec);
            }
        } catch (const std::logic_error &) {
            schema("--tol", "value for " + name + " is not a number");
        }
        try {
            tol.set(name, value);
        } catch (const Error &e) {
            schema("--tol", e.what());
        }
        r.tolerance_overrides.push_back({name, round15(value)});
    }
    return tol;
}

}  // namespace

const std::vector<std::string> &subcommands() {
    static const std::vector<std::string> names{"spectra", "gns", "modular", "bell", "fock", "net", "selftest"};
    return names;
}

Report build_report(const RunConfig &cfg) {
    const auto &names = subcommands();
    if (std::find(names.begin(), names.end(), cfg.subcommand) == names.end()) {
        schema("subcommand", "unknown subcommand " + cfg.subcommand);
    }
    Report r;
    r.subcommand = cfg.subcommand;
    r.seed = cfg.seed;
    Tolerances tol = apply_overrides(cfg, r);
    Rng rng(cfg.seed);
    if (cfg.subcommand == "selftest") {
        selftest_report(r, cfg.seed, tol);
        return r;
    }
    Json in = cfg.input_path.empty() ? default_input(cfg.subcommand) : read_json_file(cfg.input_path);
    if (!in.is_object()) {
        schema("input", "expected a JSON object");
    }
    if (cfg.subcommand == "spectra") {
        spectra_report(in, r, tol);
    } else if (cfg.subcommand == "gns") {
        gns_report(in, r, tol);
    } else if (cfg.subcommand == "modular") {
        modular_report(in, r, tol, rng);
    } else if (cfg.subcommand == "bell") {
        bell_report(in, r, tol, cfg.seed);
    } else if (cfg.subcommand == "fock") {
        fock_report(in, r, tol);
    } else {
        net_report(in, r, tol, rng);
    }
    return r;
}

int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    Report r;
    try {
        r = build_report(cfg);
    } catch (const Error &e) {
        err << "oplab " << cfg.subcommand << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::Schema || e.kind() == ErrorKind::InvalidState || e.kind() == ErrorKind::NonSquare ||
                       e.kind() == ErrorKind::NonFinite || e.kind() == ErrorKind::DimensionCapExceeded ||
                       e.kind() == ErrorKind::DimMismatch
                   ? kExitBadInput
                   : kExitCheckFailed;
    }
    out << (cfg.output == Output::json ? render_json(r) : render_text(r));
    return r.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace oplab::cli
