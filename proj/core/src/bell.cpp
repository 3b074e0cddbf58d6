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

#include "oplab/bell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oplab/errors.hpp"

namespace oplab {

namespace {

std::array<const CMatrix *, 4> entries(const AdmissibleQuadruple &q) {
    return {&q.a1, &q.a2, &q.b1, &q.b2};
}

}  // namespace

QuadrupleReport validate(const AdmissibleQuadruple &q, const Tolerances &tol) {
    QuadrupleReport r{};
    const Index n = q.a1.rows();
    for (const CMatrix *x : entries(q)) {
        if (x->rows() != n || x->cols() != n || n == 0) {
            const double inf = std::numeric_limits<double>::infinity();
            return {inf, inf, inf, false};
        }
    }
    for (const CMatrix *x : entries(q)) {
        r.hermiticity = std::max(r.hermiticity, hermiticity_residual(*x));
        r.norm_excess = std::max(r.norm_excess, operator_norm(*x) - 1.0);
    }
    for (const CMatrix *a : {&q.a1, &q.a2}) {
        for (const CMatrix *b : {&q.b1, &q.b2}) {
            r.commutation = std::max(r.commutation, operator_norm(commutator(*a, *b)));
        }
    }
    r.passed = r.hermiticity <= tol.quadruple && r.norm_excess <= tol.quadruple && r.commutation <= tol.quadruple;
    return r;
}

BellOperator bell_operator(const AdmissibleQuadruple &q, const Tolerances &tol) {
    QuadrupleReport r = validate(q, tol);
    if (!r.passed) {
        throw Error(ErrorKind::InvalidQuadruple, "hermiticity " + std::to_string(r.hermiticity) + ", norm excess " +
                                                     std::to_string(r.norm_excess) + ", commutation " +
                                                     std::to_string(r.commutation));
    }
    CMatrix c = q.a1 * (q.b1 + q.b2) + q.a2 * (q.b1 - q.b2);
    return BellOperator{symmetrize(c), q};
}

double square_identity_residual(const BellOperator &bo) {
    const auto &q = bo.source;
    CMatrix rhs = 4.0 * identity(q.dim()) - commutator(q.a1, q.a2) * commutator(q.b1, q.b2);
    return operator_norm(bo.matrix * bo.matrix - rhs);
}

double norm_identity_residual(const BellOperator &bo) {
    const auto &q = bo.source;
    double c = operator_norm(bo.matrix);
    return std::abs(c * c - 4.0 - operator_norm(commutator(q.a1, q.a2) * commutator(q.b1, q.b2)));
}

double involution_residual(const AdmissibleQuadruple &q) {
    double r = 0.0;
    for (const CMatrix *x : entries(q)) {
        r = std::max(r, operator_norm(*x * *x - identity(x->rows())));
    }
    return r;
}

double chsh_value(const State &s, const BellOperator &bo) {
    require_same_dim(s.rho(), bo.matrix, "CHSH value");
    return (s.rho() * bo.matrix).trace().real();
}

CMatrix spin_observable(double alpha) {
    return std::cos(alpha) * pauli::x() + std::sin(alpha) * pauli::z();
}

double singlet_closed_form(const std::array<double, 4> &t) {
    return -std::cos(t[0] - t[2]) - std::cos(t[0] - t[3]) - std::cos(t[1] - t[2]) + std::cos(t[1] - t[3]);
}

SingletExample singlet_example(const std::array<double, 4> &t) {
    const CMatrix one = identity(2);
    AdmissibleQuadruple q{kron(spin_observable(t[0]), one), kron(spin_observable(t[1]), one),
                          kron(one, spin_observable(t[2])), kron(one, spin_observable(t[3]))};
    CVector psi = (kron(basis_vector(2, 0), basis_vector(2, 1)) - kron(basis_vector(2, 1), basis_vector(2, 0))) /
                  std::sqrt(2.0);
    State state = State::from_vector(psi);
    double total_spin = 0.0;
    for (const CMatrix &s : {pauli::x(), pauli::y(), pauli::z()}) {
        total_spin = std::max(total_spin, ((kron(s, one) + kron(one, s)) * psi).norm() / 2.0);
    }
    BellOperator bo = bell_operator(q);
    return SingletExample{q, state, chsh_value(state, bo), singlet_closed_form(t), total_spin};
}

int deterministic_value(unsigned k) {
    auto sign = [k](int bit) { return ((k >> bit) & 1u) ? -1 : 1; };
    int a1 = sign(0);
    int a2 = sign(1);
    int b1 = sign(2);
    int b2 = sign(3);
    return a1 * b1 + a1 * b2 + a2 * b1 - a2 * b2;
}

ClassicalBound classical_bound_exhaustive() {
    ClassicalBound b{std::numeric_limits<int>::min(), std::numeric_limits<int>::max()};
    for (unsigned k = 0; k < 16; ++k) {
        b.max = std::max(b.max, deterministic_value(k));
        b.min = std::min(b.min, deterministic_value(k));
    }
    return b;
}

double classical_bound_mixture(const std::array<double, 16> &weights) {
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw Error(ErrorKind::BadWeights, "mixture weights must be nonnegative and finite");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw Error(ErrorKind::BadWeights, "mixture weights sum to " + std::to_string(total));
    }
    double value = 0.0;
    for (unsigned k = 0; k < 16; ++k) {
        value += weights[k] * deterministic_value(k);
    }
    return value;
}

std::pair<CMatrix, CMatrix> summers_werner_pair(const Projection &e, const Projection &f, const Tolerances &tol) {
    const CMatrix &em = e.matrix();
    const CMatrix &fm = f.matrix();
    require_same_dim(em, fm, "projection pair");
    if (operator_norm(commutator(em, fm)) <= 1e-8) {
        throw Error(ErrorKind::CommutingProjections, "E and F commute, so EF(1 - E) vanishes");
    }
    const Index n = em.rows();
    const CMatrix one = identity(n);
    CMatrix t = em * fm * (one - em);
    CMatrix v = polar(t, tol).isometry_part;
    CMatrix z = v.adjoint() * v + v * v.adjoint();
    CMatrix bar1 = v + v.adjoint();
    CMatrix bar2 = Complex(0.0, 1.0) * (v.adjoint() - v);
    return {bar1 + z - one, bar2 + z - one};
}

AdmissibleQuadruple summers_werner(const Projection &e, const Projection &f, const Projection &e2,
                                   const Projection &f2, const Tolerances &tol) {
    auto [a1, a2] = summers_werner_pair(e, f, tol);
    auto [b1, b2] = summers_werner_pair(e2, f2, tol);
    const CMatrix one_a = identity(a1.rows());
    const CMatrix one_b = identity(b1.rows());
    return AdmissibleQuadruple{kron(a1, one_b), kron(a2, one_b), kron(one_a, b1), kron(one_a, b2)};
}

MaxViolation max_violation_state(const BellOperator &bo) {
    HermEig eig = herm_eig(bo.matrix);
    const Index last = eig.values.size() - 1;
    Index pick = std::abs(eig.values(0)) > std::abs(eig.values(last)) ? 0 : last;
    State state = State::from_vector(eig.vectors.col(pick));
    return MaxViolation{state, chsh_value(state, bo)};
}

AdmissibleQuadruple random_admissible_quadruple(Index na, Index nb, Rng &rng) {
    auto contraction = [&rng](Index n) {
        CMatrix h = random_hermitian(n, rng);
        return CMatrix(h / operator_norm(h) * random_uniform(0.0, 1.0, rng));
    };
    const CMatrix one_a = identity(na);
    const CMatrix one_b = identity(nb);
    return AdmissibleQuadruple{kron(contraction(na), one_b), kron(contraction(na), one_b),
                               kron(one_a, contraction(nb)), kron(one_a, contraction(nb))};
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double line_maximize(const Objective &objective, std::vector<double> &x, std::size_t coord, double current) {
    constexpr int kGrid = 16;
    const double step = kTwoPi / kGrid;
    const double origin = x[coord];
    double best_t = origin;
    double best = current;
    auto eval = [&](double t) {
        x[coord] = t;
        return objective(x);
    };
    for (int g = 1; g < kGrid; ++g) {
        double t = origin + g * step;
        double v = eval(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_t - step;
    double hi = best_t + step;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = eval(c);
    double fd = eval(d);
    while (hi - lo > 1e-10) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = eval(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = eval(d);
        }
    }
    double mid = (lo + hi) / 2.0;
    double fm = eval(mid);
    if (fm > best) {
        best = fm;
        best_t = mid;
    }
    x[coord] = std::remainder(best_t, kTwoPi);
    return best;
}

}  // namespace

OptimizerResult maximize_on_torus(const Objective &objective, const std::vector<double> &initial, int budget,
                                  int restarts, std::uint64_t seed) {
    if (budget < 1 || initial.empty()) {
        throw Error(ErrorKind::InvalidArgument, "optimizer needs budget >= 1 and at least one parameter");
    }
    Rng rng(seed);
    OptimizerResult result{initial, objective(initial), {}};
    for (int run = 0; run <= restarts; ++run) {
        std::vector<double> x = initial;
        if (run > 0) {
            for (double &v : x) {
                v = random_uniform(-std::numbers::pi, std::numbers::pi, rng);
            }
        }
        double value = objective(x);
        for (int sweep = 0; sweep < budget; ++sweep) {
            double before = value;
            for (std::size_t coord = 0; coord < x.size(); ++coord) {
                value = line_maximize(objective, x, coord, value);
            }
            if (value > result.value) {
                result.value = value;
                result.parameters = x;
            }
            result.trace.push_back(result.value);
            if (value - before <= 1e-15) {
                break;
            }
        }
    }
    return result;
}

OptimizerResult chsh_optimize(const std::array<double, 4> &initial, int budget, int restarts, std::uint64_t seed) {
    Objective objective = [](const std::vector<double> &x) { return singlet_closed_form({x[0], x[1], x[2], x[3]}); };
    return maximize_on_torus(objective, {initial.begin(), initial.end()}, budget, restarts, seed);
}

QuadrupleFamily two_qubit_angle_family() {
    return QuadrupleFamily{4, 4, [](const std::vector<double> &t) {
                               const CMatrix one = identity(2);
                               return AdmissibleQuadruple{
                                   kron(spin_observable(t.at(0)), one), kron(spin_observable(t.at(1)), one),
                                   kron(one, spin_observable(t.at(2))), kron(one, spin_observable(t.at(3)))};
                           }};
}

EbReport eb_value(const State &s, const QuadrupleFamily &family, int budget, int restarts, std::uint64_t seed) {
    if (family.parameters < 1 || !family.make) {
        throw Error(ErrorKind::InvalidArgument, "quadruple family is empty");
    }
    if (family.dim != s.dim()) {
        throw Error(ErrorKind::InvalidArgument, "family and state dimensions differ");
    }
    Objective objective = [&](const std::vector<double> &p) {
        return 0.5 * std::abs(chsh_value(s, bell_operator(family.make(p))));
    };
    std::vector<double> start(static_cast<std::size_t>(family.parameters), 0.0);
    OptimizerResult opt = maximize_on_torus(objective, start, budget, restarts, seed);

    const CMatrix one = identity(s.dim());
    BellOperator degenerate = bell_operator({one, CMatrix::Zero(s.dim(), s.dim()), one, one});
    double trivial = 0.5 * std::abs(chsh_value(s, degenerate));
    EbReport r{};
    r.degenerate_wins = trivial >= opt.value;
    r.value = std::max(trivial, opt.value);
    if (!r.degenerate_wins) {
        r.parameters = opt.parameters;
    }
    r.within_bounds = r.value >= 1.0 - 1e-9 && r.value <= std::sqrt(2.0) + 1e-9;
    return r;
}

}  // namespace oplab
