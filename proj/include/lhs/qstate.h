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

#ifndef LHS_QSTATE_H
#define LHS_QSTATE_H

#include <array>

#include "lhs/vec3.h"

namespace lhs {

/// Physicality tolerance on Bell weights used by constructors.
inline constexpr double kPhysicalTolerance = 1e-12;

/// Two-qubit state with vanishing local Bloch vectors and diagonal correlation matrix,
///     rho = (1 + sum_j T_j sigma_j (x) sigma_j) / 4.
/// Construction rejects correlation matrices outside the physical tetrahedron.
class TState {
   public:
    explicit TState(const DiagMat3 &t);

    const DiagMat3 &correlations() const {
        return t_;
    }

   private:
    DiagMat3 t_;
};

/// Unnormalized single-qubit operator (trace * 1 + s . sigma) / 2.
struct HalfState {
    double trace = 0;
    Vec3 s;

    HalfState operator+(const HalfState &o) const {
        return {trace + o.trace, s + o.s};
    }
};

/// Projective measurement along a unit direction with outcome +1 or -1.
class Measurement {
   public:
    Measurement(const Vec3 &x, int outcome);

    const Vec3 &direction() const {
        return x_;
    }
    int outcome() const {
        return a_;
    }

   private:
    Vec3 x_;
    int a_;
};

/// Bob's conditional state after Alice measures `m`: trace 1/2, s = (a/2) T x.
HalfState assemblage(const TState &state, const Measurement &m);

/// Eigenvalues of the density matrix, i.e. its weights on the four Bell states.
///
/// Order follows the sign patterns (s_x, s_y, s_z) of sigma_j (x) sigma_j on each Bell state:
///   [0] (-1,-1,-1)  singlet (01 - 10)/sqrt2
///   [1] (+1,+1,-1)  (01 + 10)/sqrt2
///   [2] (+1,-1,+1)  (00 + 11)/sqrt2
///   [3] (-1,+1,+1)  (00 - 11)/sqrt2
/// so weight k = (1 + s.T)/4.
std::array<double, 4> bell_weights(const DiagMat3 &t);
inline std::array<double, 4> bell_weights(const TState &state) {
    return bell_weights(state.correlations());
}

/// True when every Bell weight is >= -tol.
bool is_physical(const DiagMat3 &t, double tol = kPhysicalTolerance);

/// Concurrence max{0, (2t|T0x| + t|T0z| - 1)/2} of the axially symmetric state t * T0.
/// Throws DomainError unless |T0x| == |T0y| and t >= 0.
double concurrence_axial(const DiagMat3 &t0, double t);

/// Concurrence of any Bell-diagonal state, max{0, 2 max_k w_k - 1}.
double concurrence_bell_diagonal(const DiagMat3 &t);

bool is_on_separable_boundary(const TState &state, double tol);

}  // namespace lhs

#endif
