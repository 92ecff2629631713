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

#include <fmt/format.h>

#include "lhs/errors.h"

namespace lhs {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
    double p0 = 1;
    double p1 = x;
    for (int k = 2; k <= n; k++) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
    if (n < 1) {
        throw DomainError("Gauss-Legendre rule needs at least one node");
    }
    GaussLegendre rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; i++) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1;
        for (int iter = 0; iter < 100; iter++) {
            auto [pn, pm] = legendre_pair(n, x);
            dp = n * (x * pn - pm) / (x * x - 1);
            double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        auto [pn, pm] = legendre_pair(n, x);
        dp = n * (x * pn - pm) / (x * x - 1);
        double w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0;
    }
    return rule;
}

SphereQuadrature make_sphere_quadrature(int theta_points_per_hemisphere, int phi_points) {
    if (theta_points_per_hemisphere < 1 || phi_points < 1) {
        throw DomainError("sphere quadrature needs positive orders");
    }
    const GaussLegendre gl = gauss_legendre(theta_points_per_hemisphere);
    const double half_pi = std::numbers::pi / 2;
    const double dphi = 2 * std::numbers::pi / phi_points;

    SphereQuadrature quad;
    quad.theta_points_per_hemisphere = theta_points_per_hemisphere;
    quad.phi_points = phi_points;
    quad.nodes.reserve((size_t)2 * theta_points_per_hemisphere * phi_points);
    for (int hemisphere = 0; hemisphere < 2; hemisphere++) {
        double lo = hemisphere * half_pi;
        for (int i = 0; i < theta_points_per_hemisphere; i++) {
            double theta = lo + half_pi * (gl.nodes[i] + 1) / 2;
            double w_theta = half_pi / 2 * gl.weights[i] * std::sin(theta);
            double st = std::sin(theta);
            double ct = std::cos(theta);
            for (int j = 0; j < phi_points; j++) {
                double phi = dphi * j;
                quad.nodes.push_back({Vec3{st * std::cos(phi), st * std::sin(phi), ct}, w_theta * dphi});
            }
        }
    }
    return quad;
}

const SphereQuadrature &default_sphere_quadrature() {
    static const SphereQuadrature quad = make_sphere_quadrature(64, 128);
    return quad;
}

double norm_integral(const DiagMat3 &t0, const SphereQuadrature &quad) {
    return quad.integrate([&](const Vec3 &n) { return (t0 * n).norm(); }) / (2 * std::numbers::pi);
}

double axial_boundary_solve(double t0z, const BoundarySolverOptions &options) {
    if (!(t0z > 0 && t0z <= 1)) {
        throw DomainError(fmt::format("axial boundary solve needs 0 < t0z <= 1, got {}", t0z));
    }
    auto residual = [&](double t0x) {
        return norm_integral(DiagMat3{t0x, t0x, t0z}) - 1;
    };
    double lo = options.lower;
    double hi = options.upper;
    double f_lo = residual(lo);
    double f_hi = residual(hi);
    if (f_lo >= 0) {
        if (f_lo <= options.residual_tolerance) {
            return lo;
        }
        throw DomainError(fmt::format("no steerable-boundary root for t0z = {} in ({}, {}]", t0z, lo, hi));
    }
    if (f_hi < 0) {
        throw DomainError(fmt::format("no steerable-boundary root for t0z = {} in ({}, {}]", t0z, lo, hi));
    }
    while (hi - lo > options.tolerance) {
        double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

BoundaryCurve sample_axial_family(int n, double t0z_min, const BoundarySolverOptions &options) {
    if (n < 2) {
        throw DomainError("sample_axial_family needs n >= 2");
    }
    if (!(t0z_min > 0 && t0z_min < 1)) {
        throw DomainError("t0z_min must lie in (0, 1)");
    }
    BoundaryCurve curve;
    curve.t0z_min = t0z_min;
    curve.samples.reserve(n);
    for (int k = 0; k < n; k++) {
        double t0z = k == n - 1 ? 1.0 : t0z_min + (1 - t0z_min) * k / (n - 1);
        curve.samples.push_back({t0z, axial_boundary_solve(t0z, options)});
    }
    return curve;
}

void write_boundary_csv(std::ostream &out, const BoundaryCurve &curve) {
    out << "t0z,t0x\n";
    for (const auto &s : curve.samples) {
        out << fmt::format("{:.15g},{:.15g}\n", s.t0z, s.t0x);
    }
}

}  // namespace lhs
