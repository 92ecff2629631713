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

#ifndef LHS_GEOMETRY_H
#define LHS_GEOMETRY_H

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lhs/vec3.h"

namespace lhs {

/// Proper rotation stored as a unit quaternion (w, x, y, z) with its matrix view cached.
class Rotation {
   public:
    Rotation();
    /// Normalizes the quaternion; throws DomainError if it is zero or non-finite.
    Rotation(double w, double x, double y, double z);

    static Rotation identity() {
        return Rotation();
    }
    static Rotation from_axis_angle(const Vec3 &axis, double angle);
    /// Smallest rotation taking unit vector `from` onto unit vector `to`.
    static Rotation aligning(const Vec3 &from, const Vec3 &to);

    Vec3 apply(const Vec3 &v) const;
    Vec3 operator*(const Vec3 &v) const {
        return apply(v);
    }
    Rotation operator*(const Rotation &o) const;
    Rotation inverse() const;

    std::array<double, 4> quaternion() const {
        return q_;
    }
    const std::array<std::array<double, 3>, 3> &matrix() const {
        return m_;
    }
    double determinant() const;

   private:
    void build_matrix();

    std::array<double, 4> q_;
    std::array<std::array<double, 3>, 3> m_;
};

enum class PolyhedronKind { icosahedron, tetrahedron, octahedron, cube, custom };

std::string to_string(PolyhedronKind kind);

using Face = std::array<int, 3>;

/// Vertex set on the unit sphere with a triangulated convex hull.
struct Polyhedron {
    std::vector<Vec3> vertices;
    std::vector<Face> faces;
    double inradius = 0;
    PolyhedronKind kind = PolyhedronKind::custom;

    /// Same polyhedron with every vertex rotated; faces and inradius are unchanged.
    Polyhedron rotated(const Rotation &r) const;
};

/// Builds the hull faces and inradius of a unit-vertex set.
/// Coplanar hull faces are fan-triangulated. Throws DomainError for non-unit vertices
/// or sets whose hull does not contain the origin in its interior.
Polyhedron make_polyhedron(std::vector<Vec3> vertices, PolyhedronKind kind = PolyhedronKind::custom);

/// Canonical icosahedron: cyclic permutations of (0, +-1, +-phi) / sqrt(1 + phi^2), then rotated.
Polyhedron icosahedron(const Rotation &orientation = Rotation::identity());
/// The four vertices (1,-1,1), (1,1,-1), (-1,1,1), (-1,-1,-1) over sqrt3.
Polyhedron tetrahedron();
Polyhedron octahedron(const Rotation &orientation = Rotation::identity());
Polyhedron cube(const Rotation &orientation = Rotation::identity());

/// Exact inradius of the icosahedron, sqrt((5 + 2 sqrt5) / 15).
double icosahedron_inradius();
/// gamma = 1 + sqrt5 in the icosahedron sign-sum identity.
inline double icosahedron_gamma() {
    return 1.0 + std::sqrt(5.0);
}

/// Sign with a dead band: +1 above `tol`, -1 below `-tol`, 0 inside.
/// Vertex-vertex dot products of octahedra vanish exactly, and mapping them to 0
/// keeps the sign-sum identity and odd symmetry of the response intact.
inline constexpr double kSignTolerance = 1e-12;
inline double sgn(double v, double tol = kSignTolerance) {
    return v > tol ? 1.0 : (v < -tol ? -1.0 : 0.0);
}

bool is_inversion_symmetric(const Polyhedron &p, double tol = 1e-10);

/// max_i | sum_j sgn(v_j . v_i) v_j - 2 (1 + sqrt5) v_i |.
double gamma_identity_residual(const Polyhedron &p);

/// The constant c with sum_j sgn(v_j . v_i) v_j = c v_i for every i, if it exists within `tol`.
std::optional<double> sign_sum_constant(const Polyhedron &p, double tol = 1e-10);

/// Weights on the polyhedron vertices, aligned with `Polyhedron::vertices`.
struct ConvexWeights {
    std::vector<double> weights;
    /// Distance along the ray to the hull face that was hit; at least the inradius.
    double ray_length = 0;
    int face = -1;
};

/// Convex decomposition of inradius * x over the vertices.
///
/// The ray s*x (s > 0) meets a hull face at s >= l. With barycentric coordinates b on that face,
///     w_i = (l/s) b_i + (1 - l/s) / |V|,
/// using sum_j v_j = 0 for the uniform background.
/// Throws DomainError if x is not a unit vector or the vertices do not sum to zero,
/// GeometryError if no face is hit.
ConvexWeights convex_decompose(const Polyhedron &p, const Vec3 &x);

/// Uniform unit vectors drawn from raw 64-bit outputs, independent of the standard library's
/// distribution implementations.
double uniform01(std::mt19937_64 &rng);

/// Haar-random rotation from a uniformly random unit quaternion.
Rotation random_rotation(std::mt19937_64 &rng);

/// Rotations taking a vertex, an edge midpoint and a face centre of the canonical icosahedron onto +Z.
struct SpecialOrientations {
    Rotation vertex;
    Rotation edge;
    Rotation face;
};
SpecialOrientations special_orientations();

/// The canonical directions behind `special_orientations`.
struct SpecialDirections {
    Vec3 vertex;
    Vec3 edge;
    Vec3 face;
};
SpecialDirections special_directions();

/// Symmetric Hausdorff distance between two finite point sets.
double point_set_distance(std::span<const Vec3> a, std::span<const Vec3> b);

/// Nearly uniform deterministic direction set (golden-angle spiral).
std::vector<Vec3> fibonacci_sphere(size_t n);

}  // namespace lhs

#endif
