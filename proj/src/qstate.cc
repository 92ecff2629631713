// Copyright 2026 The lhsbits Authors
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

#include "lhs/qstate.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lhs/errors.h"

namespace lhs {

namespace {

constexpr std::array<std::array<int, 3>, 4> kBellSigns{{
    {-1, -1, -1},
    {+1, +1, -1},
    {+1, -1, +1},
    {-1, +1, +1},
}};

}  // namespace

TState::TState(const DiagMat3 &t) : t_(t) {
    if (!t.is_finite()) {
        throw NonPhysicalStateError("correlation matrix has non-finite entries");
    }
    if (!is_physical(t)) {
        std::ostringstream msg;
        msg << "correlation matrix " << t << " is not a physical T-state (negative Bell weight)";
        throw NonPhysicalStateError(msg.str());
    }
}

Measurement::Measurement(const Vec3 &x, int outcome) : x_(x), a_(outcome) {
    if (!is_unit(x)) {
        std::ostringstream msg;
        msg << "measurement direction " << x << " is not a unit vector";
        throw InvalidMeasurementError(msg.str());
    }
    if (outcome != 1 && outcome != -1) {
        throw InvalidMeasurementError("measurement outcome must be +1 or -1");
    }
}

HalfState assemblage(const TState &state, const Measurement &m) {
    return {0.5, state.correlations() * m.direction() * (0.5 * m.outcome())};
}

std::array<double, 4> bell_weights(const DiagMat3 &t) {
    std::array<double, 4> w{};
    for (size_t k = 0; k < 4; k++) {
        const auto &s = kBellSigns[k];
        w[k] = 0.25 * (1.0 + s[0] * t.dx + s[1] * t.dy + s[2] * t.dz);
    }
    return w;
}

bool is_physical(const DiagMat3 &t, double tol) {
    auto w = bell_weights(t);
    return *std::min_element(w.begin(), w.end()) >= -tol;
}

double concurrence_axial(const DiagMat3 &t0, double t) {
    if (std::abs(t0.dx) != std::abs(t0.dy)) {
        throw DomainError("concurrence_axial requires |T0x| == |T0y|");
    }
    if (!(t >= 0)) {
        throw DomainError("concurrence_axial requires t >= 0");
    }
    return std::max(0.0, (2 * t * std::abs(t0.dx) + t * std::abs(t0.dz) - 1) / 2);
}

double concurrence_bell_diagonal(const DiagMat3 &t) {
    auto w = bell_weights(t);
    return std::max(0.0, 2 * *std::max_element(w.begin(), w.end()) - 1);
}

bool is_on_separable_boundary(const TState &state, double tol) {
    return std::abs(state.correlations().abs_sum() - 1.0) <= tol;
}

}  // namespace lhs
