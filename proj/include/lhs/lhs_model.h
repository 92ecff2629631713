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

#ifndef LHS_LHS_MODEL_H
#define LHS_LHS_MODEL_H

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lhs/geometry.h"
#include "lhs/qstate.h"
#include "lhs/vec3.h"

namespace lhs {

/// One value of the shared hidden variable.
struct Atom {
    double q = 0;
    /// Bloch vector of Bob's hidden pure state.
    Vec3 lambda;
    /// Preimage of `lambda` on the unit sphere of the mapped variable
    /// (a polyhedron vertex for sign-mixture models).
    Vec3 lambda_prime;
    /// Alice's Bloch vector; present only for linear-response models.
    std::optional<Vec3> eta;
};

/// f(x, lambda) = scale * sum_i w_i(x) sgn(v_i . lambda'), w = convex_decompose(polyhedron, x).
struct SignMixture {
    Polyhedron polyhedron;
    double scale = 1;
};

/// f(x, lambda) = x . eta. `signs` records which components of eta were negated to absorb
/// negative correlation entries.
struct LinearEta {
    std::array<int, 3> signs{1, 1, 1};
};

using Response = std::variant<SignMixture, LinearEta>;

/// Finite-shared-randomness LHS model reproducing the assemblage of the T-state t * T0.
class FiniteLhsModel {
   public:
    /// Validates the atom invariants; throws DomainError on violation.
    FiniteLhsModel(std::vector<Atom> atoms, Response response, DiagMat3 t0, double t);

    const std::vector<Atom> &atoms() const {
        return atoms_;
    }
    const Response &response() const {
        return response_;
    }
    const DiagMat3 &t0() const {
        return t0_;
    }
    double t() const {
        return t_;
    }
    bool is_sign_mixture() const {
        return std::holds_alternative<SignMixture>(response_);
    }
    /// Response scale; 1 for linear models.
    double scale() const;
    /// Correlation matrix t * T0 the model is built to reproduce.
    DiagMat3 target_correlations() const {
        return t0_ * t_;
    }

   private:
    std::vector<Atom> atoms_;
    Response response_;
    DiagMat3 t0_;
    double t_;
};

/// f(x, lambda) for one atom. Throws DomainError for non-unit x.
double response_f(const FiniteLhsModel &model, const Atom &atom, const Vec3 &x);

/// f(x, lambda_i) for every atom, sharing a single convex decomposition of x.
std::vector<double> response_values(const FiniteLhsModel &model, const Vec3 &x);

/// p(a | x, lambda) = (1 + a f) / 2.
double response_probability(const FiniteLhsModel &model, const Atom &atom, const Measurement &m);
inline double response_probability(double f, int outcome) {
    return 0.5 * (1 + outcome * f);
}

/// Largest visibility c * l / sum_i |T0 v_i| reachable with polyhedron `p`,
/// where c is the sign-sum constant and l the inradius.
double max_visibility(const DiagMat3 &t0, const Polyhedron &p, double sign_sum_c);

/// Icosahedron model: atoms at lambda' = v_i, lambda = T0 v_i / |T0 v_i|, q_i = |T0 v_i| / sum_j |T0 v_j|.
/// Without `t_requested` the model runs at t_max = 2 gamma l / sum_i |T0 v_i|; otherwise the response
/// is scaled by t_requested / t_max.
/// Throws SingularMappingError for singular T0, OutOfRangeError if t_requested is outside [0, t_max].
FiniteLhsModel build_icosahedron_model(
    const DiagMat3 &t0, const Rotation &orientation, std::optional<double> t_requested = std::nullopt);

/// Same construction for any inversion-symmetric polyhedron with a sign-sum constant c,
/// replacing 2 gamma by c and l by the polyhedron's inradius.
/// Throws UnsupportedPolyhedronError when the polyhedron lacks either property.
FiniteLhsModel build_generic_polyhedron_model(
    const DiagMat3 &t0, const Polyhedron &p, std::optional<double> t_requested = std::nullopt);

/// Separable-state model on the tetrahedron: q_i = 1/4, lambda_i = sqrt3 |T|^{1/2} v_i, eta_i = sign(T) lambda_i.
/// Requires |Tx| + |Ty| + |Tz| = 1 within 1e-9 (BoundaryViolationError otherwise).
FiniteLhsModel build_tetrahedron_separable_model(const DiagMat3 &t);

struct VerificationReport {
    double max_trace_err = 0;
    double max_bloch_err = 0;
    /// Mean over directions of |sum_i q_i f(x, lambda_i)|.
    double mean_a_err = 0;
    /// |sum_i q_i lambda_i|.
    double mean_b_err = 0;
    /// |sum_i q_i - 1|.
    double norm_err = 0;
    size_t n_directions = 0;

    double max_error() const;
};

/// Compares sum_i q_i p(a|x, lambda_i) (1, lambda_i) with the quantum assemblage for every
/// direction and both outcomes. Throws DomainError on an empty direction list.
VerificationReport verify_model(const FiniteLhsModel &model, const TState &state, std::span<const Vec3> directions);

/// Verification over the default 1024-point Fibonacci direction set.
VerificationReport verify_model(const FiniteLhsModel &model, const TState &state);

/// Shannon entropy in bits of the atom weights, with 0 log 0 = 0.
double shannon_entropy(const FiniteLhsModel &model);
double shannon_entropy(std::span<const double> weights);

}  // namespace lhs

#endif
