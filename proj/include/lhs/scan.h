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

#ifndef LHS_SCAN_H
#define LHS_SCAN_H

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lhs/boundary.h"
#include "lhs/geometry.h"
#include "lhs/vec3.h"

namespace lhs {

/// 12 / sum_i |T0 v_i| of the optimal icosahedron with a vertex, face centre or edge midpoint on the Z axis.
struct SValues {
    double vertex = 0;
    double face = 0;
    double edge = 0;
};

enum class Regime { vertex, face, edge };
std::string to_string(Regime r);

/// Closed-form S values for axial T0 = diag(t0x, t0x, t0z), with X = t0x^2, Z = t0z^2,
/// a+- = 5 +- sqrt5, b+- = 5/2 +- sqrt5:
///   vertex  6 / (sqrt Z + sqrt(20X + 5Z))
///   face    sqrt30 / (sqrt(X a+ + Z b-) + sqrt(X a- + Z b+))
///   edge    3 sqrt10 / (sqrt(10X) + sqrt(X a+ + Z a-) + sqrt(X a- + Z a+))
/// Throws DomainError unless both inputs are positive and finite.
SValues analytic_s(double t0x, double t0z);

/// 12 / sum_i |T0 R v_i| for the canonical icosahedron rotated by R.
double numeric_s(const DiagMat3 &t0, const Rotation &orientation);

/// S -> t with t = S gamma l / 6.
double s_to_visibility(double s);

/// Best regime with ties broken vertex > face > edge.
Regime best_regime(const SValues &s);
double best_s(const SValues &s);
const Rotation &orientation_for(Regime r);

/// Haar-random search of the icosahedron visibility t_max(T0, R).
struct OrientationSearchResult {
    double best_t = 0;
    Rotation best_rotation;
    size_t n = 0;
};
OrientationSearchResult random_orientation_search(const DiagMat3 &t0, size_t n, std::mt19937_64 &rng);
OrientationSearchResult random_orientation_search(const DiagMat3 &t0, size_t n, uint64_t seed);

/// Generator for scan point `index` derived from a master seed; independent of evaluation order.
std::mt19937_64 point_stream(uint64_t master_seed, uint64_t index);

struct AxialPoint {
    double t0z = 0;
    double t0x = 0;
    SValues s;
    double s_best = 0;
    Regime regime = Regime::vertex;
    double t_max = 0;
    double entropy_bits = 0;
    double concurrence = 0;
};

/// Evaluates one boundary point with T0 = -diag(t0x, t0x, t0z). Entropy is that of the
/// optimal-orientation model at t_max, concurrence that of t_max * T0.
AxialPoint evaluate_axial_point(double t0z, double t0x);

/// All points of sample_axial_family(n, t0z_min), sorted by t0z.
std::vector<AxialPoint> scan_axial_family(int n, double t0z_min = kDefaultT0zMin);

/// Longest run of consecutive points with zero concurrence (<= 1e-12), as (first t0z, last t0z).
std::optional<std::pair<double, double>> zero_entanglement_interval(const std::vector<AxialPoint> &scan);

/// t0z where the vertex/face and face/edge optima exchange, by bisection along the boundary.
struct RegimeCrossovers {
    double vertex_face = 0;
    double face_edge = 0;
};
RegimeCrossovers regime_crossovers(double resolution = 1e-6);

/// Where the axial family enters the physical region.
///
/// For small |T0z| the boundary T0 = -diag(t0x, t0x, t0z) has a negative Bell weight, and so does the
/// simulated operator t_max * T0 for still smaller |T0z|. Rows below these values describe LHS
/// decompositions of non-positive operators rather than of quantum states.
struct PhysicalThresholds {
    /// Smallest t0z at which the critical T0 itself is a state.
    double critical_t0z = 0;
    /// Smallest t0z at which t_max * T0 is a state.
    double model_t0z = 0;
};
PhysicalThresholds physical_thresholds(double resolution = 1e-6);

/// Reference values of the isotropic (Werner) model.
struct WernerReference {
    double t = 0;
    double entropy_bits = 0;
    double concurrence = 0;
};
WernerReference werner_reference();

struct ScanSummary {
    double min_entropy_bits = 0;
    double min_entropy_t0z = 0;
    RegimeCrossovers crossovers;
    std::optional<std::pair<double, double>> zero_interval;
    WernerReference werner;
    PhysicalThresholds physical;
};
ScanSummary summarize_scan(const std::vector<AxialPoint> &scan, double crossover_resolution = 1e-6);

/// Header `t0z,t0x,s_vertex,s_face,s_edge,regime,t_max,entropy_bits,concurrence`, 15 significant digits.
void write_scan_csv(std::ostream &out, const std::vector<AxialPoint> &scan);

/// Random-orientation visibilities at each scan point, for a scatter alongside the optimum.
struct RandomCloud {
    std::vector<double> t0z;
    std::vector<double> t;
    /// Largest random t minus the analytic optimum, over all points.
    double max_gap = -std::numeric_limits<double>::infinity();
};
RandomCloud random_cloud(const std::vector<AxialPoint> &scan, size_t rotations_per_point, uint64_t master_seed);

/// Header `t0z,t_random`.
void write_random_cloud_csv(std::ostream &out, const RandomCloud &cloud);

}  // namespace lhs

#endif
