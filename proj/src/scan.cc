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

#include "lhs/scan.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lhs/errors.h"
#include "lhs/lhs_model.h"
#include "lhs/qstate.h"

namespace lhs {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::vertex:
            return "vertex";
        case Regime::face:
            return "face";
        case Regime::edge:
            return "edge";
    }
    return "vertex";
}

SValues analytic_s(double t0x, double t0z) {
    if (!(std::isfinite(t0x) && std::isfinite(t0z)) || !(t0x > 0) || !(t0z > 0)) {
        throw DomainError("analytic_s needs positive finite t0x and t0z");
    }
    const double r5 = std::sqrt(5.0);
    const double X = t0x * t0x;
    const double Z = t0z * t0z;
    const double a_plus = 5 + r5;
    const double a_minus = 5 - r5;
    const double b_plus = 2.5 + r5;
    const double b_minus = 2.5 - r5;
    SValues s;
    s.vertex = 6 / (std::sqrt(Z) + std::sqrt(20 * X + 5 * Z));
    s.face = std::sqrt(30.0) / (std::sqrt(X * a_plus + Z * b_minus) + std::sqrt(X * a_minus + Z * b_plus));
    s.edge = 3 * std::sqrt(10.0) /
             (std::sqrt(10 * X) + std::sqrt(X * a_plus + Z * a_minus) + std::sqrt(X * a_minus + Z * a_plus));
    return s;
}

double numeric_s(const DiagMat3 &t0, const Rotation &orientation) {
    static const Polyhedron canonical = icosahedron();
    double total = 0;
    for (const auto &v : canonical.vertices) {
        total += (t0 * orientation.apply(v)).norm();
    }
    return 12 / total;
}

double s_to_visibility(double s) {
    return s * icosahedron_gamma() * icosahedron_inradius() / 6;
}

namespace {

// Relative slack for declaring two S values tied.
constexpr double kTieTolerance = 1e-12;

}  // namespace

Regime best_regime(const SValues &s) {
    const double slack = kTieTolerance * std::max({s.vertex, s.face, s.edge});
    if (s.vertex >= std::max(s.face, s.edge) - slack) {
        return Regime::vertex;
    }
    if (s.face >= s.edge - slack) {
        return Regime::face;
    }
    return Regime::edge;
}

double best_s(const SValues &s) {
    return std::max({s.vertex, s.face, s.edge});
}

const Rotation &orientation_for(Regime r) {
    static const SpecialOrientations special = special_orientations();
    switch (r) {
        case Regime::vertex:
            return special.vertex;
        case Regime::face:
            return special.face;
        case Regime::edge:
            return special.edge;
    }
    return special.vertex;
}

OrientationSearchResult random_orientation_search(const DiagMat3 &t0, size_t n, std::mt19937_64 &rng) {
    if (n == 0) {
        throw DomainError("random_orientation_search needs n >= 1");
    }
    if (t0.is_singular()) {
        throw SingularMappingError("random_orientation_search needs a nonsingular T0");
    }
    OrientationSearchResult result;
    result.n = n;
    result.best_t = -1;
    for (size_t k = 0; k < n; k++) {
        Rotation r = random_rotation(rng);
        double t = s_to_visibility(numeric_s(t0, r));
        if (t > result.best_t) {
            result.best_t = t;
            result.best_rotation = r;
        }
    }
    return result;
}

OrientationSearchResult random_orientation_search(const DiagMat3 &t0, size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_orientation_search(t0, n, rng);
}

std::mt19937_64 point_stream(uint64_t master_seed, uint64_t index) {
    std::seed_seq seq{
        (uint32_t)master_seed,
        (uint32_t)(master_seed >> 32),
        (uint32_t)index,
        (uint32_t)(index >> 32),
    };
    return std::mt19937_64(seq);
}

AxialPoint evaluate_axial_point(double t0z, double t0x) {
    AxialPoint p;
    p.t0z = t0z;
    p.t0x = t0x;
    p.s = analytic_s(t0x, t0z);
    p.s_best = best_s(p.s);
    p.regime = best_regime(p.s);
    p.t_max = s_to_visibility(p.s_best);

    const DiagMat3 t0 = DiagMat3{t0x, t0x, t0z} * -1.0;
    FiniteLhsModel model = build_icosahedron_model(t0, orientation_for(p.regime));
    p.entropy_bits = shannon_entropy(model);
    p.concurrence = concurrence_axial(t0, p.t_max);
    return p;
}

std::vector<AxialPoint> scan_axial_family(int n, double t0z_min) {
    BoundaryCurve curve = sample_axial_family(n, t0z_min);
    std::vector<AxialPoint> out;
    out.reserve(curve.samples.size());
    for (const auto &s : curve.samples) {
        out.push_back(evaluate_axial_point(s.t0z, s.t0x));
    }
    return out;
}

std::optional<std::pair<double, double>> zero_entanglement_interval(const std::vector<AxialPoint> &scan) {
    std::optional<std::pair<double, double>> best;
    size_t best_len = 0;
    size_t k = 0;
    while (k < scan.size()) {
        if (scan[k].concurrence > 1e-12) {
            k++;
            continue;
        }
        size_t start = k;
        while (k < scan.size() && scan[k].concurrence <= 1e-12) {
            k++;
        }
        if (k - start > best_len) {
            best_len = k - start;
            best = std::make_pair(scan[start].t0z, scan[k - 1].t0z);
        }
    }
    return best;
}

namespace {

template <typename F>
double bisect_sign_change(F &&g, double lo, double hi, double resolution) {
    double g_lo = g(lo);
    if (g_lo * g(hi) > 0) {
        throw GeometryError("regime crossover bracket does not change sign");
    }
    while (hi - lo > resolution) {
        double mid = 0.5 * (lo + hi);
        double g_mid = g(mid);
        if ((g_mid > 0) == (g_lo > 0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

RegimeCrossovers regime_crossovers(double resolution) {
    auto s_at = [](double t0z) { return analytic_s(axial_boundary_solve(t0z), t0z); };
    RegimeCrossovers c;
    c.vertex_face = bisect_sign_change(
        [&](double z) {
            auto s = s_at(z);
            return s.vertex - s.face;
        },
        0.3, 0.7, resolution);
    c.face_edge = bisect_sign_change(
        [&](double z) {
            auto s = s_at(z);
            return s.face - s.edge;
        },
        0.7, 0.99, resolution);
    return c;
}

PhysicalThresholds physical_thresholds(double resolution) {
    auto min_weight = [](double t0z, bool at_t_max) {
        double t0x = axial_boundary_solve(t0z);
        DiagMat3 t0{-t0x, -t0x, -t0z};
        double t = at_t_max ? evaluate_axial_point(t0z, t0x).t_max : 1.0;
        auto w = bell_weights(t0 * t);
        return *std::min_element(w.begin(), w.end());
    };
    PhysicalThresholds p;
    p.critical_t0z = bisect_sign_change([&](double z) { return min_weight(z, false); }, 1e-3, 0.5, resolution);
    p.model_t0z = bisect_sign_change([&](double z) { return min_weight(z, true); }, 1e-3, 0.5, resolution);
    return p;
}

WernerReference werner_reference() {
    WernerReference w;
    const DiagMat3 t0 = DiagMat3::uniform(-0.5);
    w.t = s_to_visibility(2.0);
    w.entropy_bits = std::log2(12.0);
    w.concurrence = concurrence_axial(t0, w.t);
    return w;
}

ScanSummary summarize_scan(const std::vector<AxialPoint> &scan, double crossover_resolution) {
    if (scan.empty()) {
        throw DomainError("cannot summarize an empty scan");
    }
    ScanSummary s;
    auto lowest = std::min_element(scan.begin(), scan.end(), [](const AxialPoint &a, const AxialPoint &b) {
        return a.entropy_bits < b.entropy_bits;
    });
    s.min_entropy_bits = lowest->entropy_bits;
    s.min_entropy_t0z = lowest->t0z;
    s.crossovers = regime_crossovers(crossover_resolution);
    s.zero_interval = zero_entanglement_interval(scan);
    s.werner = werner_reference();
    s.physical = physical_thresholds(crossover_resolution);
    return s;
}

void write_scan_csv(std::ostream &out, const std::vector<AxialPoint> &scan) {
    out << "t0z,t0x,s_vertex,s_face,s_edge,regime,t_max,entropy_bits,concurrence\n";
    for (const auto &p : scan) {
        out << fmt::format(
            "{:.15g},{:.15g},{:.15g},{:.15g},{:.15g},{},{:.15g},{:.15g},{:.15g}\n", p.t0z, p.t0x, p.s.vertex,
            p.s.face, p.s.edge, to_string(p.regime), p.t_max, p.entropy_bits, p.concurrence);
    }
}

RandomCloud random_cloud(const std::vector<AxialPoint> &scan, size_t rotations_per_point, uint64_t master_seed) {
    RandomCloud cloud;
    cloud.t0z.reserve(scan.size() * rotations_per_point);
    cloud.t.reserve(scan.size() * rotations_per_point);
    for (size_t k = 0; k < scan.size(); k++) {
        const auto &p = scan[k];
        const DiagMat3 t0 = DiagMat3{p.t0x, p.t0x, p.t0z} * -1.0;
        std::mt19937_64 rng = point_stream(master_seed, k);
        for (size_t r = 0; r < rotations_per_point; r++) {
            double t = s_to_visibility(numeric_s(t0, random_rotation(rng)));
            cloud.t0z.push_back(p.t0z);
            cloud.t.push_back(t);
            cloud.max_gap = std::max(cloud.max_gap, t - p.t_max);
        }
    }
    return cloud;
}

void write_random_cloud_csv(std::ostream &out, const RandomCloud &cloud) {
    out << "t0z,t_random\n";
    for (size_t k = 0; k < cloud.t.size(); k++) {
        out << fmt::format("{:.15g},{:.15g}\n", cloud.t0z[k], cloud.t[k]);
    }
}

}  // namespace lhs
