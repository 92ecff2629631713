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

#include "lhs/bell.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lhs/errors.h"

namespace lhs {

namespace {

constexpr double kSchmidtTolerance = 1e-12;

using cd = std::complex<double>;

CVec4 make_state(cd a00, cd a01, cd a10, cd a11) {
    CVec4 v;
    v << a00, a01, a10, a11;
    return v;
}

CVec4 kron(const Eigen::Vector2cd &a, const Eigen::Vector2cd &b) {
    return make_state(a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1));
}

CMat4 kron(const CMat2 &a, const CMat2 &b) {
    CMat4 out;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

CVec4 fix_global_phase(CVec4 v) {
    for (int k = 0; k < 4; k++) {
        if (std::abs(v(k)) > 1e-14) {
            v *= std::conj(v(k)) / std::abs(v(k));
            break;
        }
    }
    return v;
}

}  // namespace

const std::array<CMat2, 3> &pauli() {
    static const std::array<CMat2, 3> sigma = [] {
        std::array<CMat2, 3> s;
        s[0] << 0, 1, 1, 0;
        s[1] << 0, cd(0, -1), cd(0, 1), 0;
        s[2] << 1, 0, 0, -1;
        return s;
    }();
    return sigma;
}

CMat4 pauli_pair(int k) {
    return kron(pauli().at(k), pauli().at(k));
}

const BellBasis &bell_basis() {
    static const BellBasis basis = [] {
        const double r = 1 / std::sqrt(2.0);
        BellBasis b;
        b.psi_plus = make_state(r, 0, 0, r);
        b.psi_minus = make_state(r, 0, 0, -r);
        b.phi_plus = make_state(0, r, r, 0);
        b.phi_minus = make_state(0, r, -r, 0);
        return b;
    }();
    return basis;
}

CMat4 tstate_density(const DiagMat3 &t) {
    return tstate_density(TState(t));
}

CMat4 tstate_density(const TState &state) {
    const DiagMat3 &t = state.correlations();
    CMat4 rho = CMat4::Identity();
    for (int k = 0; k < 3; k++) {
        rho += t[k] * pauli_pair(k);
    }
    return rho / 4.0;
}

CMat4 critical_separable_werner() {
    const auto &b = bell_basis();
    auto proj = [](const CVec4 &v) -> CMat4 { return v * v.adjoint(); };
    return (3.0 * proj(b.phi_minus) + proj(b.phi_plus) + proj(b.psi_plus) + proj(b.psi_minus)) / 6.0;
}

std::array<CVec4, 4> product_states_phi(double beta) {
    const double alpha = std::acos(1 / std::sqrt(3.0));
    const cd phase = std::polar(1.0, beta);
    Eigen::Vector2cd alice;
    alice << std::sin(alpha / 2), -std::cos(alpha / 2) * phase;
    Eigen::Vector2cd bob;
    bob << std::cos(alpha / 2), std::sin(alpha / 2) * phase;

    std::array<CVec4, 4> out;
    out[0] = kron(alice, bob);
    for (int k = 0; k < 3; k++) {
        out[k + 1] = pauli_pair(k) * out[0];
    }
    for (auto &v : out) {
        v = fix_global_phase(v);
    }
    return out;
}

std::array<CVec4, 4> mirror_solution() {
    return product_states_phi(std::numbers::pi / 4);
}

namespace {

CMat2 amplitude_matrix(const CVec4 &psi) {
    CMat2 m;
    m << psi(0), psi(1), psi(2), psi(3);
    return m;
}

}  // namespace

std::array<double, 2> schmidt_coefficients(const CVec4 &psi) {
    Eigen::JacobiSVD<CMat2> svd(amplitude_matrix(psi));
    auto s = svd.singularValues();
    return {s(0), s(1)};
}

Vec3 bloch_vector(const CMat2 &rho) {
    const auto &s = pauli();
    return {(rho * s[0]).trace().real(), (rho * s[1]).trace().real(), (rho * s[2]).trace().real()};
}

std::pair<Vec3, Vec3> extract_local_blochs(const CVec4 &psi) {
    auto sv = schmidt_coefficients(psi);
    if (sv[1] >= kSchmidtTolerance) {
        std::ostringstream msg;
        msg << "state is entangled: second Schmidt coefficient " << sv[1];
        throw NotProductStateError(msg.str());
    }
    CMat2 m = amplitude_matrix(psi);
    CMat2 rho_a = m * m.adjoint();
    CMat2 rho_b = m.transpose() * m.conjugate();
    double norm = psi.squaredNorm();
    return {bloch_vector(rho_a / norm), bloch_vector(rho_b / norm)};
}

}  // namespace lhs
