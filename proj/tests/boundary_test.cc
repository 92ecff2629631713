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

#include "lhs/boundary.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gtest/gtest.h"
#include "lhs/errors.h"
#include "test_util.h"

using namespace lhs;
using boost::math::quadrature::gauss_kronrod;
using lhs::testing::test_rng;

namespace {

constexpr double kPi = std::numbers::pi;

// (1/2pi) * integral over the sphere of |T0 n|, by adaptive Gauss-Kronrod in theta and phi.
double norm_integral_oracle(const DiagMat3 &t0) {
    auto inner = [&](double theta) {
        auto ring = [&](double phi) {
            Vec3 n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
            return (t0 * n).norm();
        };
        return std::sin(theta) * gauss_kronrod<double, 61>::integrate(ring, 0, 2 * kPi, 10, 1e-13);
    };
    double upper = gauss_kronrod<double, 61>::integrate(inner, 0, kPi / 2, 10, 1e-13);
    double lower = gauss_kronrod<double, 61>::integrate(inner, kPi / 2, kPi, 10, 1e-13);
    return (upper + lower) / (2 * kPi);
}

// Axial case: the azimuth drops out and N = integral_{-1}^{1} sqrt(x^2 (1 - u^2) + z^2 u^2) du.
double axial_oracle(double x, double z) {
    auto f = [&](double u) { return std::sqrt(x * x * (1 - u * u) + z * z * u * u); };
    return gauss_kronrod<double, 61>::integrate(f, -1, 1, 15, 1e-14);
}

}  // namespace

TEST(boundary, gauss_legendre_is_exact_for_polynomials) {
    for (int n : {1, 2, 5, 16, 64}) {
        GaussLegendre gl = gauss_legendre(n);
        ASSERT_EQ(gl.nodes.size(), size_t(n));
        for (int i = 1; i < n; i++) {
            EXPECT_LT(gl.nodes[i - 1], gl.nodes[i]);
        }
        for (int deg = 0; deg < 2 * n; deg++) {
            double q = 0;
            for (int i = 0; i < n; i++) {
                q += gl.weights[i] * std::pow(gl.nodes[i], deg);
            }
            double exact = deg % 2 ? 0 : 2.0 / (deg + 1);
            EXPECT_NEAR(q, exact, 1e-13) << "n=" << n << " deg=" << deg;
        }
    }
    EXPECT_THROW(gauss_legendre(0), DomainError);
}

TEST(boundary, sphere_quadrature_weights_and_moments) {
    const SphereQuadrature &q = default_sphere_quadrature();
    EXPECT_EQ(q.theta_points_per_hemisphere, 64);
    EXPECT_EQ(q.phi_points, 128);
    EXPECT_EQ(q.nodes.size(), size_t(128 * 128));
    double total = 0;
    for (const auto &node : q.nodes) {
        EXPECT_GT(node.w, 0);
        EXPECT_TRUE(is_unit(node.n));
        total += node.w;
    }
    EXPECT_NEAR(total, 4 * kPi, 1e-9);
    EXPECT_NEAR(q.integrate([](const Vec3 &) { return 1.0; }), 4 * kPi, 1e-12);
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            double m = q.integrate([&](const Vec3 &n) { return n[i] * n[j]; });
            EXPECT_NEAR(m, i == j ? 4 * kPi / 3 : 0, 1e-10);
        }
    }
    // Higher harmonics: integral of x^4 is 4 pi / 5, of x^2 y^2 z^2 is 4 pi / 105.
    EXPECT_NEAR(q.integrate([](const Vec3 &n) { return std::pow(n.x, 4); }), 4 * kPi / 5, 1e-12);
    EXPECT_NEAR(q.integrate([](const Vec3 &n) { return n.x * n.x * n.y * n.y * n.z * n.z; }), 4 * kPi / 105, 1e-12);
    EXPECT_NEAR(q.integrate([](const Vec3 &n) { return n.x * std::pow(n.z, 5); }), 0, 1e-12);
}

TEST(boundary, norm_integral_examples) {
    EXPECT_NEAR(norm_integral(DiagMat3::uniform(-0.5)), 1, 1e-10);
    for (double c : {0.1, 0.37, 1.0}) {
        EXPECT_NEAR(norm_integral(DiagMat3::uniform(c)), 2 * c, 1e-12);
    }
    EXPECT_NEAR(norm_integral(DiagMat3{2 / kPi, 2 / kPi, 0}), 1, 1e-9);
}

namespace {

// Entries with magnitude in [0.1, 1] and random signs.
DiagMat3 random_t0(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> mag(0.1, 1);
    auto entry = [&] { return (rng() % 2 ? 1 : -1) * mag(rng); };
    double x = entry();
    double y = entry();
    return {x, y, entry()};
}

}  // namespace

TEST(boundary, norm_integral_matches_adaptive_oracle) {
    auto rng = test_rng(40);
    for (int k = 0; k < 5; k++) {
        DiagMat3 t0 = random_t0(rng);
        EXPECT_NEAR(norm_integral(t0), norm_integral_oracle(t0), 1e-10);
    }
    for (double z : {1e-3, 0.1, 0.5, 0.9, 1.0}) {
        for (double x : {0.05, 0.2, 0.6, 1.0}) {
            EXPECT_NEAR(norm_integral(DiagMat3{x, x, z}), axial_oracle(x, z), 1e-10) << x << " " << z;
        }
    }
}

TEST(boundary, norm_integral_symmetries) {
    auto rng = test_rng(41);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 20; k++) {
        DiagMat3 t0 = random_t0(rng);
        double base = norm_integral(t0);
        EXPECT_NEAR(norm_integral(t0.abs()), base, 1e-14);
        EXPECT_NEAR(norm_integral(DiagMat3{-t0.dx, t0.dy, -t0.dz}), base, 1e-14);
        double alpha = (u(rng) + 1) * 2;
        EXPECT_NEAR(norm_integral(t0 * alpha), alpha * base, 1e-13);
        // Permuting the axes only changes which hemisphere split is used.
        EXPECT_NEAR(norm_integral(DiagMat3{t0.dz, t0.dx, t0.dy}), base, 1e-10);
    }
}

TEST(boundary, solver_examples) {
    EXPECT_NEAR(axial_boundary_solve(0.5), 0.5, 1e-9);
    double small = axial_boundary_solve(1e-4);
    EXPECT_NEAR(small, 2 / kPi, 1e-6);
    EXPECT_NEAR(norm_integral(DiagMat3{small, small, 1e-4}), 1, 1e-9);

    double top = axial_boundary_solve(1.0);
    EXPECT_GT(top, 0);
    EXPECT_LT(top, 0.5);
    EXPECT_NEAR(norm_integral(DiagMat3{top, top, 1.0}), 1, 1e-9);
    // The exact root at t0z = 1 is zero; only the bracket end stands in for it.
    EXPECT_NEAR(axial_oracle(0, 1), 1, 1e-14);

    for (double z : {0.05, 0.3, 0.7, 0.95}) {
        double x = axial_boundary_solve(z);
        EXPECT_NEAR(axial_oracle(x, z), 1, 1e-9);
    }
}

TEST(boundary, solver_errors) {
    EXPECT_THROW(axial_boundary_solve(0), DomainError);
    EXPECT_THROW(axial_boundary_solve(-0.2), DomainError);
    EXPECT_THROW(axial_boundary_solve(1.2), DomainError);
    EXPECT_THROW(axial_boundary_solve(std::nan("")), DomainError);
    BoundarySolverOptions narrow;
    narrow.upper = 0.3;
    EXPECT_THROW(axial_boundary_solve(0.5, narrow), DomainError);
}

TEST(boundary, axial_family) {
    BoundaryCurve three = sample_axial_family(3);
    ASSERT_EQ(three.samples.size(), 3u);
    EXPECT_EQ(three.t0z_min, kDefaultT0zMin);
    EXPECT_EQ(three.samples.front().t0z, kDefaultT0zMin);
    EXPECT_NEAR(three.samples[1].t0z, 0.51, 1e-15);
    EXPECT_EQ(three.samples.back().t0z, 1.0);

    // Spacing 0.98 / 49 = 0.02 puts sample 24 on the Werner point.
    BoundaryCurve grid = sample_axial_family(50);
    ASSERT_EQ(grid.samples.size(), 50u);
    EXPECT_NEAR(grid.samples[24].t0z, 0.5, 1e-14);
    EXPECT_NEAR(grid.samples[24].t0x, 0.5, 1e-9);
    for (size_t i = 0; i < grid.samples.size(); i++) {
        const BoundarySample &b = grid.samples[i];
        EXPECT_NEAR(norm_integral(DiagMat3{b.t0x, b.t0x, b.t0z}), 1, 1e-9);
        if (i > 0) {
            EXPECT_GT(b.t0z, grid.samples[i - 1].t0z);
            EXPECT_LT(b.t0x, grid.samples[i - 1].t0x);
        }
    }
    EXPECT_THROW(sample_axial_family(1), DomainError);
    EXPECT_THROW(sample_axial_family(5, 0), DomainError);
}

TEST(boundary, family_is_accurate_against_adaptive_oracle) {
    for (const BoundarySample &b : sample_axial_family(200).samples) {
        EXPECT_NEAR(axial_oracle(b.t0x, b.t0z), 1, 1e-9) << b.t0z;
    }
}

TEST(boundary, csv_layout) {
    BoundaryCurve curve = sample_axial_family(4, 0.25);
    std::ostringstream out;
    write_boundary_csv(out, curve);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t0z,t0x");
    int rows = 0;
    while (std::getline(in, line)) {
        double z = 0;
        double x = 0;
        ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf", &z, &x), 2);
        EXPECT_NEAR(z, curve.samples[rows].t0z, 1e-14);
        EXPECT_NEAR(x, curve.samples[rows].t0x, 1e-14);
        rows++;
    }
    EXPECT_EQ(rows, 4);
    std::ostringstream again;
    write_boundary_csv(again, sample_axial_family(4, 0.25));
    EXPECT_EQ(again.str(), out.str());
}
