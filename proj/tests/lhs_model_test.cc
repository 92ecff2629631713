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

#include "lhs/lhs_model.h"

#include <cmath>

#include "gtest/gtest.h"
#include "lhs/errors.h"
#include "lhs/json_io.h"
#include "lhs/scan.h"
#include "test_util.h"

using namespace lhs;
using lhs::testing::random_unit;
using lhs::testing::test_rng;

namespace {

const DiagMat3 kWernerT0 = DiagMat3::uniform(-0.5);

std::vector<Vec3> random_directions(uint64_t salt, int n) {
    auto rng = test_rng(salt);
    std::vector<Vec3> out;
    for (int k = 0; k < n; k++) {
        out.push_back(random_unit(rng));
    }
    return out;
}

double brute_force_response(const Polyhedron &p, const Vec3 &x, const Vec3 &lambda_prime) {
    ConvexWeights w = convex_decompose(p, x);
    double f = 0;
    for (size_t i = 0; i < p.vertices.size(); i++) {
        f += w.weights[i] * sgn(p.vertices[i].dot(lambda_prime));
    }
    return f;
}

}  // namespace

TEST(lhs_model, werner_icosahedron_model) {
    auto rng = test_rng(20);
    std::vector<Rotation> orientations{Rotation::identity(), special_orientations().face, random_rotation(rng)};
    const double expected_t = icosahedron_gamma() * icosahedron_inradius() / 3;
    for (const Rotation &r : orientations) {
        FiniteLhsModel m = build_icosahedron_model(kWernerT0, r);
        EXPECT_NEAR(m.t(), expected_t, 1e-12);
        EXPECT_NEAR(m.t(), 0.8571852969867928, 1e-12);
        EXPECT_NEAR(numeric_s(kWernerT0, r), 2, 1e-12);
        ASSERT_EQ(m.atoms().size(), 12u);
        for (const Atom &a : m.atoms()) {
            EXPECT_NEAR(a.q, 1.0 / 12, 1e-12);
            EXPECT_LE((a.lambda + a.lambda_prime).norm(), 1e-12);
        }
        EXPECT_EQ(m.scale(), 1);
        EXPECT_NEAR(shannon_entropy(m), std::log2(12.0), 1e-12);
        EXPECT_NEAR(shannon_entropy(m), 3.584963, 1e-6);
    }
}

TEST(lhs_model, werner_model_reproduces_assemblage) {
    FiniteLhsModel m = build_icosahedron_model(kWernerT0, Rotation::identity());
    TState state(m.target_correlations());
    VerificationReport r = verify_model(m, state, random_directions(21, 1000));
    EXPECT_LT(r.max_error(), 1e-10);
    EXPECT_LT(r.max_trace_err, 1e-10);
    EXPECT_LT(r.max_bloch_err, 1e-10);
    EXPECT_LT(r.mean_a_err, 1e-10);
    EXPECT_LT(r.mean_b_err, 1e-10);
    EXPECT_LT(r.norm_err, 1e-12);
    EXPECT_EQ(r.n_directions, 1000u);

    VerificationReport d = verify_model(m, state);
    EXPECT_EQ(d.n_directions, 1024u);
    EXPECT_LT(d.max_error(), 1e-10);
}

TEST(lhs_model, werner_reduction_to_protocol_form) {
    // With lambda = -lambda', f equals -sum_i w_i sgn(v_i . lambda).
    FiniteLhsModel m = build_icosahedron_model(kWernerT0, Rotation::identity());
    const Polyhedron &p = std::get<SignMixture>(m.response()).polyhedron;
    for (const Vec3 &x : random_directions(22, 200)) {
        ConvexWeights w = convex_decompose(p, x);
        for (const Atom &a : m.atoms()) {
            double protocol = 0;
            for (size_t i = 0; i < p.vertices.size(); i++) {
                protocol -= w.weights[i] * sgn(p.vertices[i].dot(a.lambda));
            }
            EXPECT_NEAR(response_f(m, a, x), protocol, 1e-12);
        }
    }
}

TEST(lhs_model, response_at_own_vertex) {
    FiniteLhsModel m = build_icosahedron_model(kWernerT0, Rotation::identity());
    const Polyhedron &p = std::get<SignMixture>(m.response()).polyhedron;
    for (const Atom &a : m.atoms()) {
        double f = response_f(m, a, a.lambda_prime);
        EXPECT_NEAR(f, brute_force_response(p, a.lambda_prime, a.lambda_prime), 1e-15);
        EXPECT_GT(f, 0);
        EXPECT_LE(f, 1);
        // Along a vertex the decomposition is l v_k = l v_k + (1 - l) * (uniform background), so
        // f = l + (1 - l) * (sum_j sgn(v_j . v_k)) / 12 = l.
        EXPECT_NEAR(f, p.inradius, 1e-12);
    }
}

TEST(lhs_model, response_values_matches_per_atom_response) {
    auto rng = test_rng(23);
    DiagMat3 t0{-0.4, 0.7, -0.2};
    FiniteLhsModel m = build_icosahedron_model(t0, random_rotation(rng));
    for (const Vec3 &x : random_directions(24, 50)) {
        auto values = response_values(m, x);
        for (size_t i = 0; i < m.atoms().size(); i++) {
            EXPECT_EQ(values[i], response_f(m, m.atoms()[i], x));
        }
    }
}

TEST(lhs_model, response_probability_examples) {
    EXPECT_EQ(response_probability(0.0, 1), 0.5);
    EXPECT_EQ(response_probability(0.0, -1), 0.5);
    EXPECT_EQ(response_probability(1.0, 1), 1);
    EXPECT_DOUBLE_EQ(response_probability(-0.4, -1), 0.7);

    FiniteLhsModel m = build_icosahedron_model(DiagMat3{-0.3, 0.5, 0.8}, Rotation::identity());
    for (const Vec3 &x : random_directions(25, 1000)) {
        for (const Atom &a : m.atoms()) {
            double p = response_probability(m, a, Measurement(x, 1));
            double q = response_probability(m, a, Measurement(x, -1));
            EXPECT_EQ(p + q, 1);
            EXPECT_GE(p, 0);
            EXPECT_LE(p, 1);
            EXPECT_LE(std::abs(response_f(m, a, x)), 1);
        }
    }
}

TEST(lhs_model, zero_scale_gives_zero_response) {
    FiniteLhsModel m = build_icosahedron_model(kWernerT0, Rotation::identity(), 0.0);
    EXPECT_EQ(m.scale(), 0);
    for (const Vec3 &x : random_directions(26, 100)) {
        for (const Atom &a : m.atoms()) {
            EXPECT_EQ(response_f(m, a, x), 0);
        }
    }
    VerificationReport r = verify_model(m, TState(DiagMat3{0, 0, 0}));
    EXPECT_LT(r.max_error(), 1e-12);
}

TEST(lhs_model, linear_response_orthogonal_to_eta) {
    FiniteLhsModel m = build_tetrahedron_separable_model(DiagMat3::uniform(1.0 / 3));
    for (const Atom &a : m.atoms()) {
        ASSERT_TRUE(a.eta.has_value());
        Vec3 perp = a.lambda.cross(Vec3{1, 0, 0}).normalized();
        EXPECT_NEAR(response_f(m, a, perp), 0, 1e-15);
    }
}

TEST(lhs_model, rejects_non_unit_direction) {
    FiniteLhsModel m = build_icosahedron_model(kWernerT0, Rotation::identity());
    EXPECT_THROW(response_f(m, m.atoms()[0], Vec3{1, 1, 1}), DomainError);
}

TEST(lhs_model, general_t0_models_verify) {
    auto rng = test_rng(27);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 30; k++) {
        DiagMat3 t0{u(rng), u(rng), u(rng)};
        FiniteLhsModel m = build_icosahedron_model(t0, random_rotation(rng));
        for (const Atom &a : m.atoms()) {
            Vec3 back = (t0.inverse() * a.lambda).normalized();
            EXPECT_LE((back - a.lambda_prime).norm(), 1e-10);
        }
        DiagMat3 target = m.target_correlations();
        if (!is_physical(target)) {
            continue;
        }
        VerificationReport r = verify_model(m, TState(target), random_directions(100 + k, 200));
        EXPECT_LT(r.max_error(), 1e-10);
    }
}

TEST(lhs_model, atoms_closed_under_inversion) {
    FiniteLhsModel m = build_icosahedron_model(DiagMat3{-0.2, 0.6, 0.9}, special_orientations().edge);
    const auto &atoms = m.atoms();
    for (const Atom &a : atoms) {
        bool found = false;
        for (const Atom &b : atoms) {
            if ((a.lambda + b.lambda).norm() < 1e-12 && (a.lambda_prime + b.lambda_prime).norm() < 1e-12) {
                EXPECT_NEAR(a.q, b.q, 1e-15);
                found = true;
            }
        }
        EXPECT_TRUE(found);
    }
    for (const Vec3 &x : random_directions(28, 100)) {
        for (const Atom &a : atoms) {
            Atom flipped = a;
            flipped.lambda = a.lambda * -1.0;
            flipped.lambda_prime = a.lambda_prime * -1.0;
            EXPECT_NEAR(response_f(m, flipped, x), -response_f(m, a, x), 1e-15);
        }
    }
}

TEST(lhs_model, visibility_scaling) {
    DiagMat3 t0{-0.5, -0.5, -0.7};
    FiniteLhsModel full = build_icosahedron_model(t0, special_orientations().vertex);
    for (double alpha : {0.0, 0.25, 0.6, 1.0}) {
        FiniteLhsModel m = build_icosahedron_model(t0, special_orientations().vertex, alpha * full.t());
        EXPECT_NEAR(m.scale(), alpha, 1e-15);
        VerificationReport r = verify_model(m, TState(t0 * (alpha * full.t())));
        EXPECT_LT(r.max_error(), 1e-10);
    }
    EXPECT_THROW(build_icosahedron_model(t0, Rotation::identity(), full.t() * 2), OutOfRangeError);
    EXPECT_THROW(build_icosahedron_model(t0, Rotation::identity(), -0.1), OutOfRangeError);
}

TEST(lhs_model, mismatched_visibility_shows_in_bloch_error) {
    FiniteLhsModel m = build_icosahedron_model(kWernerT0, Rotation::identity());
    for (double dt : {-0.1, 0.05}) {
        VerificationReport r = verify_model(m, TState(kWernerT0 * (m.t() + dt)), random_directions(29, 300));
        // s = (a/2) t T0 x with |T0 x| = 1/2 for every x.
        EXPECT_NEAR(r.max_bloch_err, std::abs(dt) / 4, 1e-10);
    }
}

TEST(lhs_model, vertex_orientation_matches_closed_form) {
    const Rotation &rv = special_orientations().vertex;
    for (double t0z : {0.2, 0.5, 0.8, 1.0}) {
        double t0x = axial_boundary_solve(t0z);
        FiniteLhsModel m = build_icosahedron_model(DiagMat3{-t0x, -t0x, -t0z}, rv);
        EXPECT_NEAR(m.t(), s_to_visibility(analytic_s(t0x, t0z).vertex), 1e-12);
    }
}

TEST(lhs_model, singular_t0_is_rejected) {
    EXPECT_THROW(build_icosahedron_model(DiagMat3{0.5, 0.5, 0}, Rotation::identity()), SingularMappingError);
    EXPECT_THROW(build_generic_polyhedron_model(DiagMat3{0, 0.5, 0.5}, cube()), SingularMappingError);
}

TEST(lhs_model, generic_builder_matches_icosahedron_builder) {
    auto rng = test_rng(30);
    Rotation r = random_rotation(rng);
    DiagMat3 t0{0.3, -0.6, 0.9};
    FiniteLhsModel a = build_icosahedron_model(t0, r);
    FiniteLhsModel b = build_generic_polyhedron_model(t0, icosahedron(r));
    EXPECT_NEAR(a.t(), b.t(), 1e-14);
    ASSERT_EQ(a.atoms().size(), b.atoms().size());
    for (size_t i = 0; i < a.atoms().size(); i++) {
        EXPECT_NEAR(a.atoms()[i].q, b.atoms()[i].q, 1e-15);
        EXPECT_LE((a.atoms()[i].lambda - b.atoms()[i].lambda).norm(), 1e-15);
        EXPECT_LE((a.atoms()[i].lambda_prime - b.atoms()[i].lambda_prime).norm(), 1e-15);
    }
}

TEST(lhs_model, cube_and_octahedron_models) {
    for (const Polyhedron &p : {cube(), octahedron()}) {
        FiniteLhsModel m = build_generic_polyhedron_model(kWernerT0, p);
        // Werner: sum_i |T0 v_i| = |V| / 2.
        double c = *sign_sum_constant(p);
        EXPECT_NEAR(m.t(), c * p.inradius / (p.vertices.size() / 2.0), 1e-12) << to_string(p.kind);
        EXPECT_LT(m.t(), build_icosahedron_model(kWernerT0, Rotation::identity()).t());
        VerificationReport r = verify_model(m, TState(m.target_correlations()), random_directions(31, 500));
        EXPECT_LT(r.max_error(), 1e-10) << to_string(p.kind);

        FiniteLhsModel skew = build_generic_polyhedron_model(DiagMat3{-0.4, 0.3, -0.8}, p);
        if (is_physical(skew.target_correlations())) {
            VerificationReport s = verify_model(skew, TState(skew.target_correlations()));
            EXPECT_LT(s.max_error(), 1e-10) << to_string(p.kind);
        }
    }
    // 4 * (1/sqrt3) / 4 and 2 * (1/sqrt3) / 3.
    EXPECT_NEAR(build_generic_polyhedron_model(kWernerT0, cube()).t(), 1 / std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(build_generic_polyhedron_model(kWernerT0, octahedron()).t(), 2 / (3 * std::sqrt(3.0)), 1e-12);
}

TEST(lhs_model, unsupported_polyhedra) {
    EXPECT_THROW(build_generic_polyhedron_model(kWernerT0, tetrahedron()), UnsupportedPolyhedronError);
    // Inversion-symmetric but irregular: the sign sum is not proportional to each vertex.
    std::vector<Vec3> half{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, Vec3{1, 2, 3}.normalized(), Vec3{-2, 1, 0.5}.normalized()};
    std::vector<Vec3> vs;
    for (const Vec3 &v : half) {
        vs.push_back(v);
        vs.push_back(v * -1.0);
    }
    Polyhedron odd = make_polyhedron(vs);
    ASSERT_TRUE(is_inversion_symmetric(odd));
    ASSERT_FALSE(sign_sum_constant(odd).has_value());
    EXPECT_THROW(build_generic_polyhedron_model(kWernerT0, odd), UnsupportedPolyhedronError);
}

TEST(lhs_model, max_visibility_formula) {
    Polyhedron p = icosahedron();
    double sum = 0;
    DiagMat3 t0{0.2, 0.4, 0.9};
    for (const Vec3 &v : p.vertices) {
        sum += (t0 * v).norm();
    }
    EXPECT_NEAR(max_visibility(t0, p, 2 * icosahedron_gamma()), 2 * icosahedron_gamma() * p.inradius / sum, 1e-15);
}

TEST(lhs_model, tetrahedron_critical_werner) {
    FiniteLhsModel pos = build_tetrahedron_separable_model(DiagMat3::uniform(1.0 / 3));
    Polyhedron t = tetrahedron();
    ASSERT_EQ(pos.atoms().size(), 4u);
    for (size_t i = 0; i < 4; i++) {
        const Atom &a = pos.atoms()[i];
        EXPECT_EQ(a.q, 0.25);
        EXPECT_LE((a.lambda - t.vertices[i]).norm(), 1e-12);
        EXPECT_LE((*a.eta - a.lambda).norm(), 1e-15);
    }
    EXPECT_EQ(std::get<LinearEta>(pos.response()).signs, (std::array<int, 3>{1, 1, 1}));

    FiniteLhsModel neg = build_tetrahedron_separable_model(DiagMat3::uniform(-1.0 / 3));
    EXPECT_EQ(std::get<LinearEta>(neg.response()).signs, (std::array<int, 3>{-1, -1, -1}));
    for (size_t i = 0; i < 4; i++) {
        const Atom &a = neg.atoms()[i];
        EXPECT_LE((a.lambda - t.vertices[i]).norm(), 1e-12);
        EXPECT_LE((*a.eta + a.lambda).norm(), 1e-15);
    }
    for (const FiniteLhsModel *m : {&pos, &neg}) {
        VerificationReport r = verify_model(*m, TState(m->target_correlations()), random_directions(32, 1000));
        EXPECT_LT(r.max_error(), 1e-10);
        EXPECT_DOUBLE_EQ(shannon_entropy(*m), 2);
        EXPECT_EQ(m->t(), 1);
    }
}

TEST(lhs_model, tetrahedron_boundary_states) {
    FiniteLhsModel m = build_tetrahedron_separable_model(DiagMat3{0.5, 0.25, 0.25});
    for (const Atom &a : m.atoms()) {
        EXPECT_NEAR(a.lambda.norm(), 1, 1e-12);
    }
    for (DiagMat3 t : {DiagMat3{0.6, 0.3, 0.1}, DiagMat3{-0.6, 0.3, 0.1}, DiagMat3{0.2, -0.5, -0.3}}) {
        FiniteLhsModel s = build_tetrahedron_separable_model(t);
        VerificationReport r = verify_model(s, TState(t));
        EXPECT_LT(r.max_error(), 1e-10);
    }
    EXPECT_THROW(build_tetrahedron_separable_model(DiagMat3{0.3, 0.3, 0.3}), BoundaryViolationError);
    EXPECT_THROW(build_tetrahedron_separable_model(DiagMat3{0.5, 0.5, 0.5}), DomainError);
}

TEST(lhs_model, shannon_entropy_cases) {
    std::vector<double> one{1.0};
    EXPECT_EQ(shannon_entropy(one), 0);
    std::vector<double> with_zero{0.5, 0.5, 0.0};
    EXPECT_DOUBLE_EQ(shannon_entropy(with_zero), 1);
}

TEST(lhs_model, constructor_validates_invariants) {
    Polyhedron p = icosahedron();
    std::vector<Atom> atoms;
    for (const Vec3 &v : p.vertices) {
        atoms.push_back({1.0 / 12, v * -1.0, v, std::nullopt});
    }
    EXPECT_NO_THROW(FiniteLhsModel(atoms, SignMixture{p, 1}, kWernerT0, 0.5));
    EXPECT_THROW(FiniteLhsModel(atoms, SignMixture{p, 1.5}, kWernerT0, 0.5), DomainError);
    auto bad_q = atoms;
    bad_q[0].q = 0.5;
    EXPECT_THROW(FiniteLhsModel(bad_q, SignMixture{p, 1}, kWernerT0, 0.5), DomainError);
    auto bad_map = atoms;
    bad_map[0].lambda = bad_map[0].lambda_prime;
    EXPECT_THROW(FiniteLhsModel(bad_map, SignMixture{p, 1}, kWernerT0, 0.5), DomainError);
    auto bad_unit = atoms;
    bad_unit[0].lambda = bad_unit[0].lambda * 1.01;
    EXPECT_THROW(FiniteLhsModel(bad_unit, SignMixture{p, 1}, kWernerT0, 0.5), DomainError);
    EXPECT_THROW(FiniteLhsModel(atoms, LinearEta{}, kWernerT0, 0.5), DomainError);
    EXPECT_THROW(verify_model(build_icosahedron_model(kWernerT0, Rotation::identity()), TState(kWernerT0),
                              std::span<const Vec3>{}),
                 DomainError);
}

TEST(lhs_model, json_round_trip) {
    auto rng = test_rng(33);
    std::vector<FiniteLhsModel> models{
        build_icosahedron_model(DiagMat3{-0.3, 0.5, -0.8}, random_rotation(rng), 0.3),
        build_generic_polyhedron_model(kWernerT0, cube()),
        build_tetrahedron_separable_model(DiagMat3{-0.6, 0.3, 0.1}),
    };
    for (const FiniteLhsModel &m : models) {
        std::string text = dump_json(model_to_json(m));
        FiniteLhsModel back = model_from_json(nlohmann::json::parse(text));
        EXPECT_EQ(back.t(), m.t());
        EXPECT_EQ(back.scale(), m.scale());
        EXPECT_EQ(back.is_sign_mixture(), m.is_sign_mixture());
        ASSERT_EQ(back.atoms().size(), m.atoms().size());
        for (size_t i = 0; i < m.atoms().size(); i++) {
            EXPECT_EQ(back.atoms()[i].q, m.atoms()[i].q);
            EXPECT_EQ(back.atoms()[i].lambda, m.atoms()[i].lambda);
        }
        for (const Vec3 &x : random_directions(34, 50)) {
            auto a = response_values(m, x);
            auto b = response_values(back, x);
            for (size_t i = 0; i < a.size(); i++) {
                EXPECT_NEAR(a[i], b[i], 1e-14);
            }
        }
        auto doc = model_to_json(m);
        std::vector<std::string> keys;
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            keys.push_back(it.key());
        }
        EXPECT_EQ(keys, (std::vector<std::string>{"t0", "t", "response_kind", "scale", "atoms"}));
    }
    EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"t0": [1, 2]})")), DomainError);
}
