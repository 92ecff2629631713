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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lhs/errors.h"

namespace lhs {

namespace {

constexpr double kWeightTolerance = 1e-12;
constexpr double kSeparableBoundaryTolerance = 1e-9;

void require_unit(const Vec3 &v, const char *what) {
    if (!is_unit(v)) {
        std::ostringstream msg;
        msg << "atom " << what << " " << v << " is not a unit vector";
        throw DomainError(msg.str());
    }
}

}  // namespace

FiniteLhsModel::FiniteLhsModel(std::vector<Atom> atoms, Response response, DiagMat3 t0, double t)
    : atoms_(std::move(atoms)), response_(std::move(response)), t0_(t0), t_(t) {
    if (atoms_.empty()) {
        throw DomainError("an LHS model needs at least one atom");
    }
    if (!(t_ >= 0) || !std::isfinite(t_)) {
        throw DomainError("model visibility t must be finite and nonnegative");
    }
    if (!t0_.is_finite()) {
        throw DomainError("model T0 must be finite");
    }
    double total = 0;
    for (const auto &a : atoms_) {
        if (!(a.q >= 0)) {
            throw DomainError("atom weights must be nonnegative");
        }
        total += a.q;
        require_unit(a.lambda, "lambda");
        require_unit(a.lambda_prime, "lambda_prime");
        if (a.eta) {
            require_unit(*a.eta, "eta");
        }
    }
    if (std::abs(total - 1) > kWeightTolerance) {
        throw DomainError("atom weights must sum to 1");
    }

    if (auto *mix = std::get_if<SignMixture>(&response_)) {
        if (!(mix->scale >= 0 && mix->scale <= 1)) {
            throw DomainError("sign-mixture response scale must lie in [0, 1]");
        }
        for (const auto &a : atoms_) {
            Vec3 image = t0_ * a.lambda_prime;
            if (image.norm() == 0 || (image.normalized() - a.lambda).norm() > 1e-12) {
                throw DomainError("sign-mixture atom violates lambda = T0 lambda' / |T0 lambda'|");
            }
        }
    } else {
        for (const auto &a : atoms_) {
            if (!a.eta) {
                throw DomainError("linear-response atoms must carry Alice's Bloch vector eta");
            }
        }
    }
}

double FiniteLhsModel::scale() const {
    if (const auto *mix = std::get_if<SignMixture>(&response_)) {
        return mix->scale;
    }
    return 1.0;
}

namespace {

double sign_mixture_value(const SignMixture &mix, const ConvexWeights &w, const Vec3 &lambda_prime) {
    const auto &vertices = mix.polyhedron.vertices;
    double f = 0;
    for (size_t i = 0; i < vertices.size(); i++) {
        f += w.weights[i] * sgn(vertices[i].dot(lambda_prime));
    }
    return mix.scale * f;
}

}  // namespace

double response_f(const FiniteLhsModel &model, const Atom &atom, const Vec3 &x) {
    if (!is_unit(x)) {
        throw InvalidMeasurementError("response direction must be a unit vector");
    }
    if (const auto *mix = std::get_if<SignMixture>(&model.response())) {
        return sign_mixture_value(*mix, convex_decompose(mix->polyhedron, x), atom.lambda_prime);
    }
    return x.dot(*atom.eta);
}

std::vector<double> response_values(const FiniteLhsModel &model, const Vec3 &x) {
    if (!is_unit(x)) {
        throw InvalidMeasurementError("response direction must be a unit vector");
    }
    std::vector<double> out;
    out.reserve(model.atoms().size());
    if (const auto *mix = std::get_if<SignMixture>(&model.response())) {
        ConvexWeights w = convex_decompose(mix->polyhedron, x);
        for (const auto &a : model.atoms()) {
            out.push_back(sign_mixture_value(*mix, w, a.lambda_prime));
        }
    } else {
        for (const auto &a : model.atoms()) {
            out.push_back(x.dot(*a.eta));
        }
    }
    return out;
}

double response_probability(const FiniteLhsModel &model, const Atom &atom, const Measurement &m) {
    return response_probability(response_f(model, atom, m.direction()), m.outcome());
}

double max_visibility(const DiagMat3 &t0, const Polyhedron &p, double sign_sum_c) {
    double total = 0;
    for (const auto &v : p.vertices) {
        total += (t0 * v).norm();
    }
    return sign_sum_c * p.inradius / total;
}

FiniteLhsModel build_generic_polyhedron_model(
    const DiagMat3 &t0, const Polyhedron &p, std::optional<double> t_requested) {
    if (t0.is_singular() || !t0.is_finite()) {
        std::ostringstream msg;
        msg << "T0 = " << t0 << " is singular; the hidden-variable mapping is undefined";
        throw SingularMappingError(msg.str());
    }
    if (!is_inversion_symmetric(p)) {
        throw UnsupportedPolyhedronError("polyhedron is not inversion symmetric");
    }
    auto c = sign_sum_constant(p);
    if (!c) {
        throw UnsupportedPolyhedronError("polyhedron has no sign-sum constant");
    }

    const double t_max = max_visibility(t0, p, *c);
    double t = t_max;
    double scale = 1;
    if (t_requested) {
        if (!(*t_requested >= 0) || *t_requested > t_max) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "requested visibility " << *t_requested << " is outside [0, " << t_max << "]";
            throw OutOfRangeError(msg.str());
        }
        t = *t_requested;
        scale = t / t_max;
    }

    double total = 0;
    for (const auto &v : p.vertices) {
        total += (t0 * v).norm();
    }
    std::vector<Atom> atoms;
    atoms.reserve(p.vertices.size());
    for (const auto &v : p.vertices) {
        Vec3 image = t0 * v;
        double len = image.norm();
        atoms.push_back(Atom{len / total, image / len, v, std::nullopt});
    }
    return FiniteLhsModel(std::move(atoms), SignMixture{p, scale}, t0, t);
}

FiniteLhsModel build_icosahedron_model(
    const DiagMat3 &t0, const Rotation &orientation, std::optional<double> t_requested) {
    return build_generic_polyhedron_model(t0, icosahedron(orientation), t_requested);
}

FiniteLhsModel build_tetrahedron_separable_model(const DiagMat3 &t) {
    if (!t.is_finite()) {
        throw DomainError("correlation matrix must be finite");
    }
    double sum = t.abs_sum();
    if (std::abs(sum - 1) > kSeparableBoundaryTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "T = " << t << " is off the separable boundary: |Tx|+|Ty|+|Tz| = " << sum;
        throw BoundaryViolationError(msg.str());
    }
    LinearEta linear;
    for (int k = 0; k < 3; k++) {
        linear.signs[k] = t[k] < 0 ? -1 : 1;
    }
    const DiagMat3 root = t.abs().sqrt() * std::sqrt(3.0);
    const Polyhedron tet = tetrahedron();
    std::vector<Atom> atoms;
    for (const auto &v : tet.vertices) {
        // |sqrt3 |T|^{1/2} v|^2 = |Tx|+|Ty|+|Tz|; normalizing absorbs the boundary tolerance.
        Vec3 lambda = (root * v).normalized();
        Vec3 eta{linear.signs[0] * lambda.x, linear.signs[1] * lambda.y, linear.signs[2] * lambda.z};
        atoms.push_back(Atom{0.25, lambda, v, eta});
    }
    return FiniteLhsModel(std::move(atoms), linear, t, 1.0);
}

double VerificationReport::max_error() const {
    return std::max({max_trace_err, max_bloch_err, mean_a_err, mean_b_err, norm_err});
}

VerificationReport verify_model(const FiniteLhsModel &model, const TState &state, std::span<const Vec3> directions) {
    if (directions.empty()) {
        throw DomainError("verify_model needs at least one direction");
    }
    VerificationReport report;
    report.n_directions = directions.size();

    Vec3 mean_lambda;
    double total = 0;
    for (const auto &a : model.atoms()) {
        mean_lambda += a.lambda * a.q;
        total += a.q;
    }
    report.mean_b_err = mean_lambda.norm();
    report.norm_err = std::abs(total - 1);

    double a_err_sum = 0;
    for (const auto &x : directions) {
        std::vector<double> f = response_values(model, x);
        double mean_f = 0;
        for (size_t i = 0; i < f.size(); i++) {
            mean_f += model.atoms()[i].q * f[i];
        }
        a_err_sum += std::abs(mean_f);

        for (int outcome : {1, -1}) {
            HalfState simulated;
            for (size_t i = 0; i < f.size(); i++) {
                const Atom &atom = model.atoms()[i];
                double weight = atom.q * response_probability(f[i], outcome);
                simulated.trace += weight;
                simulated.s += atom.lambda * weight;
            }
            HalfState expected = assemblage(state, Measurement(x, outcome));
            report.max_trace_err = std::max(report.max_trace_err, std::abs(simulated.trace - expected.trace));
            report.max_bloch_err = std::max(report.max_bloch_err, (simulated.s - expected.s).norm());
        }
    }
    report.mean_a_err = a_err_sum / (double)directions.size();
    return report;
}

VerificationReport verify_model(const FiniteLhsModel &model, const TState &state) {
    static const std::vector<Vec3> directions = fibonacci_sphere(1024);
    return verify_model(model, state, directions);
}

double shannon_entropy(std::span<const double> weights) {
    double h = 0;
    for (double q : weights) {
        if (q > 0) {
            h -= q * std::log2(q);
        }
    }
    return h;
}

double shannon_entropy(const FiniteLhsModel &model) {
    std::vector<double> q;
    q.reserve(model.atoms().size());
    for (const auto &a : model.atoms()) {
        q.push_back(a.q);
    }
    return shannon_entropy(q);
}

}  // namespace lhs
