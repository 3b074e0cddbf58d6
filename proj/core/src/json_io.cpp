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

#include "oplab/json_io.hpp"

#include <cmath>
#include <fstream>

#include "oplab/errors.hpp"

namespace oplab {

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &what) {
    throw Error(ErrorKind::Schema, "field '" + field + "': " + what);
}

const Json &member(const Json &j, const std::string &field, const char *key) {
    if (!j.is_object()) {
        fail(field, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail(field.empty() ? key : field + "." + key, "missing");
    }
    return *it;
}

std::string child(const std::string &field, const std::string &key) {
    return field.empty() ? key : field + "." + key;
}

Index integer(const Json &j, const std::string &field, Index lo, Index hi) {
    if (!j.is_number_integer()) {
        fail(field, "expected an integer");
    }
    auto v = j.get<long long>();
    if (v < lo || v > hi) {
        fail(field, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return static_cast<Index>(v);
}

double real(const Json &j, const std::string &field) {
    if (!j.is_number()) {
        fail(field, "expected a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        fail(field, "not finite");
    }
    return v;
}

}  // namespace

Json matrix_to_json(const CMatrix &m) {
    Json data = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            data.push_back({m(i, j).real(), m(i, j).imag()});
        }
    }
    return Json{{"dim", m.rows()}, {"data", data}};
}

CMatrix matrix_from_json(const Json &j, const std::string &field) {
    Index n = integer(member(j, field, "dim"), child(field, "dim"), 1, kMaxDim);
    const Json &data = member(j, field, "data");
    const std::string data_field = child(field, "data");
    if (!data.is_array()) {
        fail(data_field, "expected an array");
    }
    if (static_cast<Index>(data.size()) != n * n) {
        fail(data_field, "has " + std::to_string(data.size()) + " entries, a square matrix of dim " +
                             std::to_string(n) + " needs " + std::to_string(n * n));
    }
    CMatrix m(n, n);
    for (Index k = 0; k < n * n; ++k) {
        const Json &e = data[static_cast<std::size_t>(k)];
        const std::string entry = data_field + "[" + std::to_string(k) + "]";
        if (e.is_array()) {
            if (e.size() != 2) {
                fail(entry, "expected [re, im]");
            }
            m(k / n, k % n) = Complex(real(e[0], entry), real(e[1], entry));
        } else {
            m(k / n, k % n) = real(e, entry);
        }
    }
    return m;
}

Json state_to_json(const State &s) {
    return Json{{"dim", s.dim()}, {"rho", matrix_to_json(s.rho())}};
}

State state_from_json(const Json &j, const std::string &field) {
    Index n = integer(member(j, field, "dim"), child(field, "dim"), 1, kMaxDim);
    CMatrix rho = matrix_from_json(member(j, field, "rho"), child(field, "rho"));
    if (rho.rows() != n) {
        fail(child(field, "rho"), "dimension differs from dim");
    }
    return State(rho);
}

SubalgebraSpec subalgebra_from_json(const Json &j, const std::string &field) {
    SubalgebraSpec spec{integer(member(j, field, "ambient_dim"), child(field, "ambient_dim"), 1, 64), {}};
    const Json &gens = member(j, field, "generators");
    const std::string gens_field = child(field, "generators");
    if (!gens.is_array()) {
        fail(gens_field, "expected an array");
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::string entry = gens_field + "[" + std::to_string(k) + "]";
        CMatrix g = matrix_from_json(gens[k], entry);
        if (g.rows() != spec.ambient_dim) {
            fail(entry, "dimension differs from ambient_dim");
        }
        spec.generators.push_back(std::move(g));
    }
    return spec;
}

Json fock_config_to_json(const FockConfig &c) {
    return Json{{"d", c.d}, {"n_max", c.n_max}, {"statistics", to_string(c.statistics)}};
}

FockConfig fock_config_from_json(const Json &j, const std::string &field) {
    FockConfig c{};
    c.d = integer(member(j, field, "d"), child(field, "d"), 1, 12);
    c.n_max = integer(member(j, field, "n_max"), child(field, "n_max"), 0, kMaxDim);
    const Json &stats = member(j, field, "statistics");
    if (stats == "bose") {
        c.statistics = Statistics::bose;
    } else if (stats == "fermi") {
        c.statistics = Statistics::fermi;
    } else {
        fail(child(field, "statistics"), "expected \"bose\" or \"fermi\"");
    }
    return c;
}

Json quadruple_to_json(const AdmissibleQuadruple &q) {
    return Json{{"dim", q.dim()},
                {"a1", matrix_to_json(q.a1)},
                {"a2", matrix_to_json(q.a2)},
                {"b1", matrix_to_json(q.b1)},
                {"b2", matrix_to_json(q.b2)}};
}

AdmissibleQuadruple quadruple_from_json(const Json &j, const std::string &field) {
    Index n = integer(member(j, field, "dim"), child(field, "dim"), 1, kMaxDim);
    AdmissibleQuadruple q;
    for (auto [key, slot] : {std::pair{"a1", &q.a1}, {"a2", &q.a2}, {"b1", &q.b1}, {"b2", &q.b2}}) {
        *slot = matrix_from_json(member(j, field, key), child(field, key));
        if (slot->rows() != n) {
            fail(child(field, key), "dimension differs from dim");
        }
    }
    return q;
}

Json site_to_json(const CausalSite &site) {
    Json pts = Json::array();
    for (const auto &p : site.points()) {
        pts.push_back({p.t, p.x});
    }
    return Json{{"points", pts}};
}

CausalSite site_from_json(const Json &j, const std::string &field) {
    const Json &pts = member(j, field, "points");
    const std::string pts_field = child(field, "points");
    if (!pts.is_array()) {
        fail(pts_field, "expected an array");
    }
    if (static_cast<Index>(pts.size()) > kMaxSitePoints) {
        fail(pts_field, "at most 12 points are supported");
    }
    std::vector<SpacetimePoint> out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const std::string entry = pts_field + "[" + std::to_string(k) + "]";
        if (!pts[k].is_array() || pts[k].size() != 2) {
            fail(entry, "expected [t, x]");
        }
        out.push_back({static_cast<int>(integer(pts[k][0], entry, -1000000, 1000000)),
                       static_cast<int>(integer(pts[k][1], entry, -1000000, 1000000))});
    }
    return CausalSite(std::move(out));
}

Region region_from_json(const CausalSite &site, const Json &j, const std::string &field) {
    if (!j.is_array()) {
        fail(field, "expected an array of point indices");
    }
    std::vector<Index> pts;
    for (std::size_t k = 0; k < j.size(); ++k) {
        pts.push_back(integer(j[k], field + "[" + std::to_string(k) + "]", 0, site.size() - 1));
    }
    return make_region(site, std::move(pts));
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail("--input", "cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        fail("--input", std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace oplab
