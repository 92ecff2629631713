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

#ifndef LHS_BELL_H
#define LHS_BELL_H

#include <array>
#include <complex>
#include <numbers>
#include <utility>

#include <Eigen/Dense>

#include "lhs/qstate.h"
#include "lhs/vec3.h"

namespace lhs {

/// Two-qubit operators in the basis |00>, |01>, |10>, |11>, Alice's qubit first.
using CMat4 = Eigen::Matrix4cd;
using CVec4 = Eigen::Vector4cd;
using CMat2 = Eigen::Matrix2cd;

/// Pauli matrices sigma_x, sigma_y, sigma_z.
const std::array<CMat2, 3> &pauli();

/// sigma_k (x) sigma_k for k = x, y, z.
CMat4 pauli_pair(int k);

/// Bell states with this library's labelling:
///   psi_plus  = (|00> + |11>)/sqrt2,  psi_minus = (|00> - |11>)/sqrt2,
///   phi_plus  = (|01> + |10>)/sqrt2,  phi_minus = (|01> - |10>)/sqrt2.
/// (Psi and Phi are swapped relative to the most common convention.)
struct BellBasis {
    CVec4 psi_plus;
    CVec4 psi_minus;
    CVec4 phi_plus;
    CVec4 phi_minus;
};
const BellBasis &bell_basis();

/// (1 + sum_j T_j sigma_j (x) sigma_j) / 4. Throws NonPhysicalStateError outside the physical region.
CMat4 tstate_density(const TState &state);
CMat4 tstate_density(const DiagMat3 &t);

/// (3 |phi_-><phi_-| + |phi_+><phi_+| + |psi_+><psi_+| + |psi_-><psi_-|) / 6.
///
/// With the labelling above this is the T-state with T = -diag(1/3, 1/3, 1/3):
/// phi_minus is the singlet, the only Bell state with all three sigma_j (x) sigma_j = -1.
CMat4 critical_separable_werner();

/// Four product states |phi_1..4> with (1/4) sum |phi_i><phi_i| = critical_separable_werner().
///
/// |phi_1> = (sin(a/2)|0> - cos(a/2) e^{ib}|1>) (x) (cos(a/2)|0> + sin(a/2) e^{ib}|1>),
/// a = arccos(1/sqrt3), and |phi_{k+1}> = sigma_k (x) sigma_k |phi_1>. Global phases make the
/// first nonzero amplitude real and positive.
std::array<CVec4, 4> product_states_phi(double beta = -std::numbers::pi / 4);

/// The second decomposition, beta = +pi/4 (entrywise complex conjugate of the first).
std::array<CVec4, 4> mirror_solution();

/// Singular values of the 2x2 amplitude matrix M_{ab} = <ab|psi>, descending.
std::array<double, 2> schmidt_coefficients(const CVec4 &psi);

/// Bloch vectors (Alice, Bob) of the reduced states of a product state.
/// Throws NotProductStateError when the second Schmidt coefficient is >= 1e-12.
std::pair<Vec3, Vec3> extract_local_blochs(const CVec4 &psi);

/// Bloch vector of a single-qubit density matrix.
Vec3 bloch_vector(const CMat2 &rho);

}  // namespace lhs

#endif
