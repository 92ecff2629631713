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

#ifndef LHS_VEC3_H
#define LHS_VEC3_H

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

namespace lhs {

/// Real 3-vector used for Bloch vectors and measurement directions.
struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;

    constexpr Vec3() = default;
    constexpr Vec3(double x, double y, double z) : x(x), y(y), z(z) {
    }

    constexpr double operator[](int k) const {
        return k == 0 ? x : (k == 1 ? y : z);
    }

    constexpr Vec3 operator+(const Vec3 &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    constexpr Vec3 operator-(const Vec3 &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    constexpr Vec3 operator-() const {
        return {-x, -y, -z};
    }
    constexpr Vec3 operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    constexpr Vec3 operator/(double s) const {
        return {x / s, y / s, z / s};
    }
    Vec3 &operator+=(const Vec3 &o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr bool operator==(const Vec3 &o) const = default;

    constexpr double dot(const Vec3 &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    constexpr Vec3 cross(const Vec3 &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const {
        return std::sqrt(dot(*this));
    }
    Vec3 normalized() const {
        return *this / norm();
    }
    bool is_finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline constexpr Vec3 operator*(double s, const Vec3 &v) {
    return v * s;
}

inline std::ostream &operator<<(std::ostream &out, const Vec3 &v) {
    return out << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

/// Tolerance for unit-vector checks on directions and Bloch vectors.
inline constexpr double kUnitTolerance = 1e-12;

inline bool is_unit(const Vec3 &v, double tol = kUnitTolerance) {
    return v.is_finite() && std::abs(v.norm() - 1.0) <= tol;
}

/// Diagonal 3x3 matrix; holds spin-correlation matrices in their diagonal frame.
struct DiagMat3 {
    double dx = 0;
    double dy = 0;
    double dz = 0;

    constexpr DiagMat3() = default;
    constexpr DiagMat3(double dx, double dy, double dz) : dx(dx), dy(dy), dz(dz) {
    }
    static constexpr DiagMat3 uniform(double c) {
        return {c, c, c};
    }

    constexpr double operator[](int k) const {
        return k == 0 ? dx : (k == 1 ? dy : dz);
    }
    constexpr Vec3 operator*(const Vec3 &v) const {
        return {dx * v.x, dy * v.y, dz * v.z};
    }
    constexpr DiagMat3 operator*(double s) const {
        return {dx * s, dy * s, dz * s};
    }
    constexpr bool operator==(const DiagMat3 &o) const = default;

    constexpr double det() const {
        return dx * dy * dz;
    }
    bool is_singular() const {
        return dx == 0 || dy == 0 || dz == 0;
    }
    DiagMat3 inverse() const {
        return {1 / dx, 1 / dy, 1 / dz};
    }
    DiagMat3 abs() const {
        return {std::abs(dx), std::abs(dy), std::abs(dz)};
    }
    DiagMat3 sqrt() const {
        return {std::sqrt(dx), std::sqrt(dy), std::sqrt(dz)};
    }
    double abs_sum() const {
        return std::abs(dx) + std::abs(dy) + std::abs(dz);
    }
    double max_abs() const {
        return std::max({std::abs(dx), std::abs(dy), std::abs(dz)});
    }
    bool is_finite() const {
        return std::isfinite(dx) && std::isfinite(dy) && std::isfinite(dz);
    }
    std::array<double, 3> entries() const {
        return {dx, dy, dz};
    }
};

inline constexpr DiagMat3 operator*(double s, const DiagMat3 &m) {
    return m * s;
}

inline std::ostream &operator<<(std::ostream &out, const DiagMat3 &m) {
    return out << "diag(" << m.dx << ", " << m.dy << ", " << m.dz << ")";
}

}  // namespace lhs

#endif
