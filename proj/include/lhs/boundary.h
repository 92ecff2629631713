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

#ifndef LHS_BOUNDARY_H
#define LHS_BOUNDARY_H

#include <ostream>
#include <utility>
#include <vector>

#include "lhs/vec3.h"

namespace lhs {

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Product rule on the unit sphere.
///
/// The polar angle is integrated with Gauss-Legendre in theta (weight sin theta) separately on
/// each hemisphere, and the azimuth with the uniform trapezoid. Splitting at the equator keeps
/// integrands like |T0 n| with a vanishing transverse entry (a kink at theta = pi/2) accurate,
/// and integrating in theta rather than cos(theta) keeps the vanishing-Tz limit smooth.
struct SphereQuadrature {
    struct Node {
        Vec3 n;
        double w;
    };
    std::vector<Node> nodes;
    int theta_points_per_hemisphere = 0;
    int phi_points = 0;

    template <typename F>
    double integrate(F &&f) const {
        double acc = 0;
        for (const auto &node : nodes) {
            acc += node.w * f(node.n);
        }
        return acc;
    }
};

SphereQuadrature make_sphere_quadrature(int theta_points_per_hemisphere, int phi_points);

/// Default rule: 64 theta points per hemisphere x 128 azimuthal points.
const SphereQuadrature &default_sphere_quadrature();

/// (1 / 2 pi) * integral of |T0 n| over the unit sphere.
/// Equals 1 exactly on the steerable boundary.
double norm_integral(const DiagMat3 &t0, const SphereQuadrature &quad = default_sphere_quadrature());

struct BoundarySolverOptions {
    double lower = 1e-6;
    double upper = 1.5;
    /// Bracket width at which bisection stops.
    double tolerance = 1e-10;
    /// Accepted |norm_integral - 1| when the root sits at a bracket end.
    double residual_tolerance = 1e-9;
};

/// |T0x| = |T0y| on the steerable boundary for the given |T0z| in (0, 1], by bisection.
/// At |T0z| = 1 the exact root is 0; the lower bracket end is returned when its residual is
/// within `residual_tolerance`. Throws DomainError when no root exists in the bracket.
double axial_boundary_solve(double t0z, const BoundarySolverOptions &options = {});

struct BoundarySample {
    double t0z;
    double t0x;
};

struct BoundaryCurve {
    std::vector<BoundarySample> samples;
    double t0z_min = 0;
};

inline constexpr double kDefaultT0zMin = 0.02;

/// n samples with t0z uniform on [t0z_min, 1]. Throws DomainError for n < 2.
BoundaryCurve sample_axial_family(int n, double t0z_min = kDefaultT0zMin, const BoundarySolverOptions &options = {});

/// CSV with header `t0z,t0x`, 15 significant digits.
void write_boundary_csv(std::ostream &out, const BoundaryCurve &curve);

}  // namespace lhs

#endif
