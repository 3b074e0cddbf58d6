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

#include "oplab/tolerances.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "oplab/errors.hpp"

namespace oplab {

namespace {

using Field = double Tolerances::*;

constexpr std::array<std::pair<std::string_view, Field>, 16> kFields{{
    {"hermiticity", &Tolerances::hermiticity},
    {"positivity", &Tolerances::positivity},
    {"rank", &Tolerances::rank},
    {"closure", &Tolerances::closure},
    {"span_equality", &Tolerances::span_equality},
    {"projection", &Tolerances::projection},
    {"eigen_cluster", &Tolerances::eigen_cluster},
    {"integer_dimension", &Tolerances::integer_dimension},
    {"state", &Tolerances::state},
    {"purity_gap", &Tolerances::purity_gap},
    {"faithful", &Tolerances::faithful},
    {"invariance", &Tolerances::invariance},
    {"max_condition", &Tolerances::max_condition},
    {"series_term", &Tolerances::series_term},
    {"series_max_terms", &Tolerances::series_max_terms},
    {"quadruple", &Tolerances::quadruple},
}};

Field lookup(std::string_view name) {
    for (const auto &[key, field] : kFields) {
        if (key == name) {
            return field;
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown tolerance '" + std::string(name) + "'");
}

}  // namespace

void Tolerances::set(std::string_view name, double value) {
    Field field = lookup(name);
    if (!std::isfinite(value) || value <= 0.0) {
        throw Error(ErrorKind::InvalidArgument,
                    "tolerance '" + std::string(name) + "' must be positive and finite");
    }
    this->*field = value;
}

double Tolerances::get(std::string_view name) const {
    return this->*lookup(name);
}

const std::vector<std::string> &Tolerances::names() {
    static const std::vector<std::string> result = [] {
        std::vector<std::string> out;
        for (const auto &entry : kFields) {
            out.emplace_back(entry.first);
        }
        return out;
    }();
    return result;
}

const Tolerances &default_tolerances() {
    static const Tolerances defaults{};
    return defaults;
}

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NotPositive: return "NotPositive";
        case ErrorKind::DimMismatch: return "DimMismatch";
        case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::SeriesPreconditionFailed: return "SeriesPreconditionFailed";
        case ErrorKind::SeriesNoConvergence: return "SeriesNoConvergence";
        case ErrorKind::FunctionUndefinedOnSpectrum: return "FunctionUndefinedOnSpectrum";
        case ErrorKind::NotProjection: return "NotProjection";
        case ErrorKind::InconsistentCriteria: return "InconsistentCriteria";
        case ErrorKind::NotFactor: return "NotFactor";
        case ErrorKind::NotInAlgebra: return "NotInAlgebra";
        case ErrorKind::NonIntegerDimension: return "NonIntegerDimension";
        case ErrorKind::InvalidState: return "InvalidState";
        case ErrorKind::BadWeights: return "BadWeights";
        case ErrorKind::ZeroMatrix: return "ZeroMatrix";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NotCyclic: return "NotCyclic";
        case ErrorKind::NotSeparating: return "NotSeparating";
        case ErrorKind::IllConditioned: return "IllConditioned";
        case ErrorKind::WrongStatistics: return "WrongStatistics";
        case ErrorKind::SectorOverflow: return "SectorOverflow";
        case ErrorKind::InvalidQuadruple: return "InvalidQuadruple";
        case ErrorKind::CommutingProjections: return "CommutingProjections";
        case ErrorKind::NotAnEmbedding: return "NotAnEmbedding";
        case ErrorKind::RegionsNotDisjoint: return "RegionsNotDisjoint";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Schema: return "Schema";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace oplab
