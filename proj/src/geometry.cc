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

#include "lhs/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lhs/errors.h"

namespace lhs {

Rotation::Rotation() : q_{1, 0, 0, 0} {
    build_matrix();
}

Rotation::Rotation(double w, double x, double y, double z) {
    double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!std::isfinite(n) || n == 0) {
        throw DomainError("rotation quaternion must be finite and nonzero");
    }
    q_ = {w / n, x / n, y / n, z / n};
    build_matrix();
}

Rotation Rotation::from_axis_angle(const Vec3 &axis, double angle) {
    Vec3 u = axis.normalized();
    double s = std::sin(angle / 2);
    return Rotation(std::cos(angle / 2), u.x * s, u.y * s, u.z * s);
}

Rotation Rotation::aligning(const Vec3 &from, const Vec3 &to) {
    Vec3 a = from.normalized();
    Vec3 b = to.normalized();
    double c = a.dot(b);
    if (c < -1 + 1e-12) {
        // Antiparallel: half turn about any axis perpendicular to `a`.
        Vec3 helper = std::abs(a.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        return from_axis_angle(a.cross(helper), std::numbers::pi);
    }
    Vec3 axis = a.cross(b);
    return Rotation(1 + c, axis.x, axis.y, axis.z);
}

void Rotation::build_matrix() {
    auto [w, x, y, z] = q_;
    m_ = {{
        {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
        {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
        {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)},
    }};
}

Vec3 Rotation::apply(const Vec3 &v) const {
    return {
        m_[0][0] * v.x + m_[0][1] * v.y + m_[0][2] * v.z,
        m_[1][0] * v.x + m_[1][1] * v.y + m_[1][2] * v.z,
        m_[2][0] * v.x + m_[2][1] * v.y + m_[2][2] * v.z,
    };
}

Rotation Rotation::operator*(const Rotation &o) const {
    auto [w1, x1, y1, z1] = q_;
    auto [w2, x2, y2, z2] = o.q_;
    return Rotation(
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2);
}

Rotation Rotation::inverse() const {
    return Rotation(q_[0], -q_[1], -q_[2], -q_[3]);
}

double Rotation::determinant() const {
    const auto &m = m_;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::string to_string(PolyhedronKind kind) {
    switch (kind) {
        case PolyhedronKind::icosahedron:
            return "icosahedron";
        case PolyhedronKind::tetrahedron:
            return "tetrahedron";
        case PolyhedronKind::octahedron:
            return "octahedron";
        case PolyhedronKind::cube:
            return "cube";
        case PolyhedronKind::custom:
            return "custom";
    }
    return "custom";
}

Polyhedron Polyhedron::rotated(const Rotation &r) const {
    Polyhedron out = *this;
    for (auto &v : out.vertices) {
        v = r.apply(v);
    }
    return out;
}

namespace {

constexpr double kPlaneTolerance = 1e-9;

struct Plane {
    Vec3 normal;
    double offset;
};

}  // namespace

Polyhedron make_polyhedron(std::vector<Vec3> vertices, PolyhedronKind kind) {
    const int n = (int)vertices.size();
    if (n < 4) {
        throw DomainError("a polyhedron needs at least four vertices");
    }
    for (const auto &v : vertices) {
        if (!is_unit(v)) {
            std::ostringstream msg;
            msg << "polyhedron vertex " << v << " is not on the unit sphere";
            throw DomainError(msg.str());
        }
    }

    // Brute-force hull: every supporting plane through three vertices.
    std::vector<Plane> planes;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            for (int k = j + 1; k < n; k++) {
                Vec3 normal = (vertices[j] - vertices[i]).cross(vertices[k] - vertices[i]);
                double len = normal.norm();
                if (len < 1e-10) {
                    continue;
                }
                normal = normal / len;
                double offset = normal.dot(vertices[i]);
                if (offset < 0) {
                    normal = -normal;
                    offset = -offset;
                }
                bool supporting = true;
                for (int m = 0; m < n && supporting; m++) {
                    supporting = normal.dot(vertices[m]) <= offset + kPlaneTolerance;
                }
                if (!supporting) {
                    continue;
                }
                bool seen = std::any_of(planes.begin(), planes.end(), [&](const Plane &p) {
                    return (p.normal - normal).norm() < kPlaneTolerance;
                });
                if (!seen) {
                    planes.push_back({normal, offset});
                }
            }
        }
    }

    Polyhedron p;
    p.kind = kind;
    p.inradius = planes.empty() ? 0.0 : planes.front().offset;
    for (const auto &plane : planes) {
        if (plane.offset < kPlaneTolerance) {
            throw DomainError("polyhedron hull does not contain the origin in its interior");
        }
        p.inradius = std::min(p.inradius, plane.offset);

        std::vector<int> on_plane;
        Vec3 centroid;
        for (int m = 0; m < n; m++) {
            if (std::abs(plane.normal.dot(vertices[m]) - plane.offset) <= kPlaneTolerance) {
                on_plane.push_back(m);
                centroid += vertices[m];
            }
        }
        centroid = centroid / (double)on_plane.size();
        Vec3 e1 = (vertices[on_plane[0]] - centroid).normalized();
        Vec3 e2 = plane.normal.cross(e1);
        std::vector<std::pair<double, int>> by_angle;
        for (int m : on_plane) {
            Vec3 d = vertices[m] - centroid;
            by_angle.push_back({std::atan2(d.dot(e2), d.dot(e1)), m});
        }
        std::sort(by_angle.begin(), by_angle.end());
        for (size_t f = 1; f + 1 < by_angle.size(); f++) {
            p.faces.push_back({by_angle[0].second, by_angle[f].second, by_angle[f + 1].second});
        }
    }
    if (p.faces.size() < 4) {
        throw DomainError("polyhedron vertices are degenerate (no closed hull)");
    }
    p.vertices = std::move(vertices);
    return p;
}

double icosahedron_inradius() {
    return std::sqrt((5 + 2 * std::sqrt(5.0)) / 15);
}

Polyhedron icosahedron(const Rotation &orientation) {
    static const Polyhedron canonical = [] {
        const double phi = std::numbers::phi;
        const double norm = std::sqrt(1 + phi * phi);
        std::vector<Vec3> v;
        for (double s1 : {1.0, -1.0}) {
            for (double s2 : {1.0, -1.0}) {
                v.push_back(Vec3{0, s1, s2 * phi} / norm);
                v.push_back(Vec3{s1, s2 * phi, 0} / norm);
                v.push_back(Vec3{s2 * phi, 0, s1} / norm);
            }
        }
        return make_polyhedron(std::move(v), PolyhedronKind::icosahedron);
    }();
    return canonical.rotated(orientation);
}

Polyhedron tetrahedron() {
    const double r = 1 / std::sqrt(3.0);
    return make_polyhedron(
        {Vec3{1, -1, 1} * r, Vec3{1, 1, -1} * r, Vec3{-1, 1, 1} * r, Vec3{-1, -1, -1} * r},
        PolyhedronKind::tetrahedron);
}

Polyhedron octahedron(const Rotation &orientation) {
    static const Polyhedron canonical = make_polyhedron(
        {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, PolyhedronKind::octahedron);
    return canonical.rotated(orientation);
}

Polyhedron cube(const Rotation &orientation) {
    static const Polyhedron canonical = [] {
        const double r = 1 / std::sqrt(3.0);
        std::vector<Vec3> v;
        for (double sx : {1.0, -1.0}) {
            for (double sy : {1.0, -1.0}) {
                for (double sz : {1.0, -1.0}) {
                    v.push_back(Vec3{sx, sy, sz} * r);
                }
            }
        }
        return make_polyhedron(std::move(v), PolyhedronKind::cube);
    }();
    return canonical.rotated(orientation);
}

bool is_inversion_symmetric(const Polyhedron &p, double tol) {
    return std::all_of(p.vertices.begin(), p.vertices.end(), [&](const Vec3 &v) {
        return std::any_of(p.vertices.begin(), p.vertices.end(), [&](const Vec3 &w) {
            return (v + w).norm() <= tol;
        });
    });
}

namespace {

Vec3 sign_sum(const Polyhedron &p, const Vec3 &v) {
    Vec3 acc;
    for (const auto &w : p.vertices) {
        acc += w * sgn(w.dot(v));
    }
    return acc;
}

}  // namespace

double gamma_identity_residual(const Polyhedron &p) {
    const double two_gamma = 2 * icosahedron_gamma();
    double worst = 0;
    for (const auto &v : p.vertices) {
        worst = std::max(worst, (sign_sum(p, v) - v * two_gamma).norm());
    }
    return worst;
}

std::optional<double> sign_sum_constant(const Polyhedron &p, double tol) {
    std::optional<double> c;
    for (const auto &v : p.vertices) {
        Vec3 s = sign_sum(p, v);
        double ci = s.dot(v);
        if ((s - v * ci).norm() > tol) {
            return std::nullopt;
        }
        if (c && std::abs(*c - ci) > tol) {
            return std::nullopt;
        }
        if (!c) {
            c = ci;
        }
    }
    if (!c || *c <= 0) {
        return std::nullopt;
    }
    return c;
}

ConvexWeights convex_decompose(const Polyhedron &p, const Vec3 &x) {
    if (!is_unit(x)) {
        std::ostringstream msg;
        msg << "convex_decompose direction " << x << " is not a unit vector";
        throw DomainError(msg.str());
    }
    Vec3 total;
    for (const auto &v : p.vertices) {
        total += v;
    }
    if (total.norm() > 1e-10) {
        throw DomainError("convex_decompose needs vertices summing to zero");
    }

    // Face whose barycentric coordinates for the ray direction are most interior.
    int best_face = -1;
    double best_min = -std::numeric_limits<double>::infinity();
    std::array<double, 3> best_coef{};
    for (size_t f = 0; f < p.faces.size(); f++) {
        const Vec3 &a = p.vertices[p.faces[f][0]];
        const Vec3 &b = p.vertices[p.faces[f][1]];
        const Vec3 &c = p.vertices[p.faces[f][2]];
        Vec3 bc = b.cross(c);
        double det = a.dot(bc);
        if (std::abs(det) < 1e-14) {
            continue;
        }
        std::array<double, 3> coef{x.dot(bc) / det, a.dot(x.cross(c)) / det, a.dot(b.cross(x)) / det};
        double lo = std::min({coef[0], coef[1], coef[2]});
        if (coef[0] + coef[1] + coef[2] > 0 && lo > best_min) {
            best_min = lo;
            best_face = (int)f;
            best_coef = coef;
        }
    }
    if (best_face < 0 || best_min < -1e-12) {
        throw GeometryError("convex_decompose: ray does not meet any hull face");
    }

    double sum = 0;
    for (auto &c : best_coef) {
        c = std::max(c, 0.0);
        sum += c;
    }
    // x = sum_k coef_k v_k, so the hit point s*x has barycentric coef/sum and s = 1/sum.
    double ray_length = 1 / sum;
    double inner = p.inradius / ray_length;
    double background = (1 - inner) / (double)p.vertices.size();

    ConvexWeights out;
    out.weights.assign(p.vertices.size(), background);
    for (int k = 0; k < 3; k++) {
        out.weights[p.faces[best_face][k]] += inner * best_coef[k] / sum;
    }
    out.ray_length = ray_length;
    out.face = best_face;
    return out;
}

double uniform01(std::mt19937_64 &rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

Rotation random_rotation(std::mt19937_64 &rng) {
    // Shoemake's subgroup algorithm.
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    double u3 = uniform01(rng);
    double a = std::sqrt(1 - u1);
    double b = std::sqrt(u1);
    double t2 = 2 * std::numbers::pi * u2;
    double t3 = 2 * std::numbers::pi * u3;
    return Rotation(b * std::cos(t3), a * std::sin(t2), a * std::cos(t2), b * std::sin(t3));
}

SpecialDirections special_directions() {
    const Polyhedron ico = icosahedron();
    const auto &v = ico.vertices;
    const Vec3 &a = v[0];
    const double neighbour = 1 / std::sqrt(5.0);
    auto adjacent = [&](const Vec3 &p, const Vec3 &q) {
        return std::abs(p.dot(q) - neighbour) < 1e-9;
    };
    size_t j = 1;
    while (!adjacent(a, v[j])) {
        j++;
    }
    size_t k = 1;
    while (k == j || !adjacent(a, v[k]) || !adjacent(v[j], v[k])) {
        k++;
    }
    return {a, (a + v[j]).normalized(), (a + v[j] + v[k]).normalized()};
}

SpecialOrientations special_orientations() {
    const Vec3 z{0, 0, 1};
    auto d = special_directions();
    return {Rotation::aligning(d.vertex, z), Rotation::aligning(d.edge, z), Rotation::aligning(d.face, z)};
}

double point_set_distance(std::span<const Vec3> a, std::span<const Vec3> b) {
    auto one_sided = [](std::span<const Vec3> from, std::span<const Vec3> to) {
        double worst = 0;
        for (const auto &p : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (const auto &q : to) {
                nearest = std::min(nearest, (p - q).norm());
            }
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

std::vector<Vec3> fibonacci_sphere(size_t n) {
    std::vector<Vec3> out;
    out.reserve(n);
    const double golden_angle = std::numbers::pi * (3 - std::sqrt(5.0));
    for (size_t i = 0; i < n; i++) {
        double z = 1 - (2.0 * (double)i + 1) / (double)n;
        double r = std::sqrt(std::max(0.0, 1 - z * z));
        double phi = golden_angle * (double)i;
        out.push_back(Vec3{r * std::cos(phi), r * std::sin(phi), z}.normalized());
    }
    return out;
}

}  // namespace lhs
