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

#include "cli.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lhs/bell.h"
#include "lhs/boundary.h"
#include "lhs/errors.h"
#include "lhs/geometry.h"
#include "lhs/json_io.h"
#include "lhs/lhs_model.h"
#include "lhs/qstate.h"
#include "lhs/scan.h"

namespace lhs::cli {

namespace {

constexpr double kModelResidualGate = 1e-8;
constexpr double kOptimalityGate = 1e-9;
constexpr double kDecompositionGate = 1e-10;
constexpr double kBoundaryValidationGate = 1e-8;

struct RunConfig {
    std::string subcommand;
    std::string model_kind;
    std::vector<double> t0;
    std::vector<double> t_entries;
    std::optional<double> t;
    std::optional<double> t0z;
    std::string orientation = "vertex";
    std::vector<double> quaternion;
    std::string shape = "cube";
    int n_samples = 200;
    double t0z_min = kDefaultT0zMin;
    size_t n_rotations = 10000;
    size_t random_per_point = 0;
    uint64_t seed = 0;
    size_t n_directions = 1024;
    bool validate = false;
    std::string solution = "both";
    std::string out = "-";
    std::string summary;
    std::string random_out;
    std::string meta;
    std::string model_path;
};

class Outputs {
   public:
    explicit Outputs(std::ostream &stdout_stream) : stdout_(stdout_stream) {
    }

    void write(const std::string &path, const std::string &content) {
        if (path.empty()) {
            return;
        }
        if (path == "-") {
            stdout_ << content;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw DomainError("cannot open output file '" + path + "'");
        }
        f << content;
    }

   private:
    std::ostream &stdout_;
};

DiagMat3 diag_from(const std::vector<double> &v, const char *flag) {
    if (v.size() != 3) {
        throw DomainError(std::string(flag) + " needs exactly three values");
    }
    return {v[0], v[1], v[2]};
}

ordered_json config_json(const RunConfig &c) {
    ordered_json j;
    j["subcommand"] = c.subcommand;
    if (!c.model_kind.empty()) {
        j["model_kind"] = c.model_kind;
    }
    if (!c.t0.empty()) {
        j["t0"] = c.t0;
    }
    if (!c.t_entries.empty()) {
        j["t_entries"] = c.t_entries;
    }
    if (c.t) {
        j["t"] = *c.t;
    }
    if (c.t0z) {
        j["t0z"] = *c.t0z;
    }
    if (c.subcommand == "model" || c.subcommand == "optimize") {
        j["orientation"] = c.orientation;
        if (!c.quaternion.empty()) {
            j["quaternion"] = c.quaternion;
        }
    }
    if (c.model_kind == "poly") {
        j["shape"] = c.shape;
    }
    if (c.subcommand == "boundary" || c.subcommand == "scan") {
        j["n_samples"] = c.n_samples;
        j["t0z_min"] = c.t0z_min;
    }
    if (c.subcommand == "optimize") {
        j["n_rotations"] = c.n_rotations;
    }
    if (c.subcommand == "scan") {
        j["random_per_point"] = c.random_per_point;
    }
    j["seed"] = c.seed;
    if (c.subcommand == "verify" || c.subcommand == "model") {
        j["n_directions"] = c.n_directions;
    }
    if (c.subcommand == "decompose") {
        j["solution"] = c.solution;
    }
    return j;
}

ordered_json tolerances_json() {
    BoundarySolverOptions solver;
    const SphereQuadrature &quad = default_sphere_quadrature();
    ordered_json j;
    j["physicality"] = kPhysicalTolerance;
    j["unit_vector"] = kUnitTolerance;
    j["sign_dead_band"] = kSignTolerance;
    j["model_residual_gate"] = kModelResidualGate;
    j["optimality_gate"] = kOptimalityGate;
    j["decomposition_gate"] = kDecompositionGate;
    j["quadrature"] = {
        {"theta_points_per_hemisphere", quad.theta_points_per_hemisphere},
        {"phi_points", quad.phi_points},
    };
    j["boundary_solver"] = {
        {"lower", solver.lower},
        {"upper", solver.upper},
        {"bracket_tolerance", solver.tolerance},
        {"residual_tolerance", solver.residual_tolerance},
    };
    return j;
}

ordered_json envelope(const RunConfig &c) {
    ordered_json j;
    j["config"] = config_json(c);
    j["tolerances"] = tolerances_json();
    return j;
}

Rotation parse_orientation(const RunConfig &c) {
    if (!c.quaternion.empty()) {
        if (c.quaternion.size() != 4) {
            throw DomainError("--quat needs four components w x y z");
        }
        return Rotation(c.quaternion[0], c.quaternion[1], c.quaternion[2], c.quaternion[3]);
    }
    if (c.orientation == "vertex" || c.orientation == "face" || c.orientation == "edge") {
        auto special = special_orientations();
        return c.orientation == "vertex" ? special.vertex : (c.orientation == "face" ? special.face : special.edge);
    }
    if (c.orientation == "identity") {
        return Rotation::identity();
    }
    if (c.orientation == "random") {
        std::mt19937_64 rng(c.seed);
        return random_rotation(rng);
    }
    throw DomainError("unknown orientation '" + c.orientation + "'");
}

ordered_json rotation_json(const Rotation &r) {
    auto q = r.quaternion();
    return ordered_json::array({q[0], q[1], q[2], q[3]});
}

std::vector<Vec3> verification_directions(size_t n) {
    if (n == 0) {
        throw DomainError("--directions must be positive");
    }
    return fibonacci_sphere(n);
}

int finish_model(const RunConfig &c, Outputs &outputs, const FiniteLhsModel &model, ordered_json extra) {
    TState state(model.target_correlations());
    auto directions = verification_directions(c.n_directions);
    VerificationReport report = verify_model(model, state, directions);
    bool ok = report.max_error() < kModelResidualGate;

    ordered_json doc = envelope(c);
    ordered_json summary = std::move(extra);
    summary["t"] = model.t();
    summary["entropy_bits"] = shannon_entropy(model);
    summary["n_atoms"] = model.atoms().size();
    doc["summary"] = std::move(summary);
    doc["model"] = model_to_json(model);
    ordered_json rep = report_to_json(report);
    rep["passed"] = ok;
    doc["report"] = std::move(rep);
    outputs.write(c.out, dump_json(doc));
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_model(const RunConfig &c, Outputs &outputs) {
    if (c.model_kind == "tetra") {
        FiniteLhsModel model = build_tetrahedron_separable_model(diag_from(c.t_entries, "--t"));
        ordered_json extra;
        auto signs = std::get<LinearEta>(model.response()).signs;
        extra["eta_signs"] = signs;
        return finish_model(c, outputs, model, std::move(extra));
    }

    DiagMat3 t0 = diag_from(c.t0, "--t0");
    Rotation orientation = parse_orientation(c);
    Polyhedron p;
    if (c.model_kind == "icosa") {
        p = icosahedron(orientation);
    } else if (c.shape == "cube") {
        p = cube(orientation);
    } else if (c.shape == "octahedron") {
        p = octahedron(orientation);
    } else if (c.shape == "icosahedron") {
        p = icosahedron(orientation);
    } else {
        throw DomainError("unknown --shape '" + c.shape + "'");
    }
    FiniteLhsModel model = build_generic_polyhedron_model(t0, p, c.t);
    ordered_json extra;
    extra["polyhedron"] = to_string(p.kind);
    extra["orientation_quaternion"] = rotation_json(orientation);
    extra["t_max"] = max_visibility(t0, p, *sign_sum_constant(p));
    return finish_model(c, outputs, model, std::move(extra));
}

std::string sidecar_path(const std::string &explicit_path, const std::string &out, const char *suffix) {
    if (!explicit_path.empty()) {
        return explicit_path;
    }
    if (out == "-") {
        return "";
    }
    return out + suffix;
}

int cmd_boundary(const RunConfig &c, Outputs &outputs) {
    BoundaryCurve curve = sample_axial_family(c.n_samples, c.t0z_min);
    std::ostringstream csv;
    write_boundary_csv(csv, curve);
    outputs.write(c.out, csv.str());

    double worst = 0;
    if (c.validate) {
        for (const auto &s : curve.samples) {
            worst = std::max(worst, std::abs(norm_integral(DiagMat3{s.t0x, s.t0x, s.t0z}) - 1));
        }
    }
    bool ok = !c.validate || worst < kBoundaryValidationGate;
    ordered_json meta = envelope(c);
    meta["n_rows"] = curve.samples.size();
    meta["t0z_min"] = curve.t0z_min;
    if (c.validate) {
        meta["max_norm_integral_residual"] = worst;
        meta["validated"] = ok;
    }
    outputs.write(sidecar_path(c.meta, c.out, ".meta.json"), dump_json(meta));
    return ok ? kExitOk : kExitVerificationFailed;
}

ordered_json interval_json(const std::optional<std::pair<double, double>> &interval) {
    if (!interval) {
        return nullptr;
    }
    return ordered_json::array({interval->first, interval->second});
}

int cmd_scan(const RunConfig &c, Outputs &outputs) {
    std::vector<AxialPoint> scan = scan_axial_family(c.n_samples, c.t0z_min);
    ScanSummary summary = summarize_scan(scan);
    std::ostringstream csv;
    write_scan_csv(csv, scan);
    outputs.write(c.out, csv.str());

    ordered_json doc = envelope(c);
    doc["n_points"] = scan.size();
    doc["min_entropy_bits"] = summary.min_entropy_bits;
    doc["min_entropy_t0z"] = summary.min_entropy_t0z;
    doc["regime_crossovers"] = {summary.crossovers.vertex_face, summary.crossovers.face_edge};
    doc["zero_entanglement_interval"] = interval_json(summary.zero_interval);
    doc["werner_refs"] = {
        {"t", summary.werner.t},
        {"entropy", summary.werner.entropy_bits},
        {"concurrence", summary.werner.concurrence},
    };
    doc["physical_from_t0z"] = {
        {"critical_state", summary.physical.critical_t0z},
        {"model_state", summary.physical.model_t0z},
    };

    bool ok = true;
    if (c.random_per_point > 0) {
        RandomCloud cloud = random_cloud(scan, c.random_per_point, c.seed);
        ok = cloud.max_gap <= kOptimalityGate;
        doc["random_orientations"] = {
            {"per_point", c.random_per_point},
            {"total", cloud.t.size()},
            {"max_gap", cloud.max_gap},
            {"analytic_is_optimal", ok},
        };
        if (!c.random_out.empty()) {
            std::ostringstream rcsv;
            write_random_cloud_csv(rcsv, cloud);
            outputs.write(c.random_out, rcsv.str());
        }
    }
    outputs.write(sidecar_path(c.summary, c.out, ".summary.json"), dump_json(doc));
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_optimize(const RunConfig &c, Outputs &outputs) {
    DiagMat3 t0;
    if (c.t0z) {
        double t0x = axial_boundary_solve(*c.t0z);
        t0 = DiagMat3{t0x, t0x, *c.t0z} * -1.0;
    } else {
        t0 = diag_from(c.t0, "--t0");
    }
    if (t0.is_singular()) {
        throw SingularMappingError("optimize needs a nonsingular T0");
    }
    OrientationSearchResult search = random_orientation_search(t0, c.n_rotations, c.seed);

    ordered_json doc = envelope(c);
    doc["t0"] = to_json(t0);
    bool axial = std::abs(t0.dx) == std::abs(t0.dy);
    bool ok = true;
    if (axial) {
        SValues s = analytic_s(std::abs(t0.dx), std::abs(t0.dz));
        double analytic = s_to_visibility(best_s(s));
        doc["analytic_best"] = analytic;
        doc["analytic_regime"] = to_string(best_regime(s));
        doc["random_best"] = search.best_t;
        doc["gap"] = search.best_t - analytic;
        ok = search.best_t <= analytic + kOptimalityGate;
    } else {
        doc["analytic_best"] = nullptr;
        doc["random_best"] = search.best_t;
        doc["gap"] = nullptr;
    }
    doc["best_rotation_quaternion"] = rotation_json(search.best_rotation);
    doc["n"] = search.n;
    doc["seed"] = c.seed;
    outputs.write(c.out, dump_json(doc));
    return ok ? kExitOk : kExitVerificationFailed;
}

ordered_json amplitudes_json(const CVec4 &v) {
    ordered_json a = ordered_json::array();
    for (int k = 0; k < 4; k++) {
        a.push_back(ordered_json::array({v(k).real(), v(k).imag()}));
    }
    return a;
}

int cmd_decompose(const RunConfig &c, Outputs &outputs) {
    if (c.solution != "both" && c.solution != "primary" && c.solution != "mirror") {
        throw DomainError("--solution must be both, primary or mirror");
    }
    const CMat4 target = critical_separable_werner();
    const Polyhedron tet = tetrahedron();
    std::vector<Vec3> mirrored;
    for (const auto &v : tet.vertices) {
        mirrored.push_back(-v);
    }

    ordered_json doc = envelope(c);
    ordered_json solutions = ordered_json::array();
    double worst = 0;
    size_t n_states = 0;
    auto add = [&](const std::string &name, double beta, const std::array<CVec4, 4> &states,
                   const std::vector<Vec3> &expected_bob) {
        CMat4 rho = CMat4::Zero();
        ordered_json list = ordered_json::array();
        std::vector<Vec3> bobs;
        std::vector<Vec3> alices;
        double worst_schmidt = 0;
        for (const auto &s : states) {
            rho += s * s.adjoint() / 4.0;
            double second = schmidt_coefficients(s)[1];
            worst_schmidt = std::max(worst_schmidt, second);
            auto [alice, bob] = extract_local_blochs(s);
            alices.push_back(alice);
            bobs.push_back(bob);
            ordered_json entry;
            entry["amplitudes"] = amplitudes_json(s);
            entry["schmidt_second"] = second;
            entry["alice_bloch"] = to_json(alice);
            entry["bob_bloch"] = to_json(bob);
            list.push_back(std::move(entry));
            n_states++;
        }
        double reconstruction = (rho - target).cwiseAbs().maxCoeff();
        double vertex_error = point_set_distance(bobs, expected_bob);
        worst = std::max({worst, reconstruction, worst_schmidt, vertex_error});
        ordered_json sol;
        sol["name"] = name;
        sol["beta"] = beta;
        sol["states"] = std::move(list);
        sol["reconstruction_residual"] = reconstruction;
        sol["max_schmidt_second"] = worst_schmidt;
        sol["bob_vertex_set_error"] = vertex_error;
        solutions.push_back(std::move(sol));
    };
    if (c.solution != "mirror") {
        add("primary", -std::numbers::pi / 4, product_states_phi(), tet.vertices);
    }
    if (c.solution != "primary") {
        add("mirror", std::numbers::pi / 4, mirror_solution(), mirrored);
    }
    doc["solutions"] = std::move(solutions);
    doc["n_states"] = n_states;
    doc["max_residual"] = worst;
    bool ok = worst < kDecompositionGate;
    doc["passed"] = ok;
    outputs.write(c.out, dump_json(doc));
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig &c, Outputs &outputs) {
    std::ifstream f(c.model_path);
    if (!f) {
        throw DomainError("cannot read model file '" + c.model_path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("model file is not valid JSON: ") + e.what());
    }
    FiniteLhsModel model = model_from_json(doc.contains("model") ? doc.at("model") : doc);
    DiagMat3 target = c.t_entries.empty() ? model.target_correlations() : diag_from(c.t_entries, "--t");
    VerificationReport report = verify_model(model, TState(target), verification_directions(c.n_directions));
    bool ok = report.max_error() < kModelResidualGate;

    ordered_json out = envelope(c);
    out["model_file"] = c.model_path;
    out["target_t"] = to_json(target);
    ordered_json rep = report_to_json(report);
    rep["passed"] = ok;
    out["report"] = std::move(rep);
    outputs.write(c.out, dump_json(out));
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig c;
    CLI::App app{"Finite-shared-randomness LHS models for two-qubit T-states"};
    app.require_subcommand(1);

    auto add_out = [&](CLI::App *sub) { sub->add_option("--out", c.out, "Output path, '-' for stdout"); };
    auto add_seed = [&](CLI::App *sub) { sub->add_option("--seed", c.seed, "Master seed")->capture_default_str(); };

    CLI::App *model = app.add_subcommand("model", "Build and verify an LHS model");
    model->require_subcommand(1);
    auto add_polyhedral = [&](CLI::App *sub) {
        sub->add_option("--t0", c.t0, "Critical correlation matrix diagonal")->expected(3)->required();
        sub->add_option("--orientation", c.orientation, "vertex|face|edge|identity|random");
        sub->add_option("--quat", c.quaternion, "Explicit orientation quaternion w x y z")->expected(4);
        sub->add_option("--t", c.t, "Requested visibility (default: t_max)");
        sub->add_option("--directions", c.n_directions, "Verification directions");
        add_seed(sub);
        add_out(sub);
    };
    CLI::App *icosa = model->add_subcommand("icosa", "Icosahedron sign-mixture model");
    add_polyhedral(icosa);
    CLI::App *poly = model->add_subcommand("poly", "Sign-mixture model on another polyhedron");
    add_polyhedral(poly);
    poly->add_option("--shape", c.shape, "cube|octahedron|icosahedron");
    CLI::App *tetra = model->add_subcommand("tetra", "Tetrahedron separable-state model");
    tetra->add_option("--t", c.t_entries, "Correlation matrix diagonal on the separable boundary")
        ->expected(3)
        ->required();
    tetra->add_option("--directions", c.n_directions, "Verification directions");
    add_out(tetra);

    CLI::App *boundary = app.add_subcommand("boundary", "Sample the axial steerable boundary");
    boundary->add_option("--n", c.n_samples, "Number of samples")->capture_default_str();
    boundary->add_option("--t0z-min", c.t0z_min, "Smallest |T0z|")->capture_default_str();
    boundary->add_flag("--validate", c.validate, "Re-check every row against the norm integral");
    boundary->add_option("--meta", c.meta, "Metadata JSON path (default <out>.meta.json)");
    add_out(boundary);

    CLI::App *scan = app.add_subcommand("scan", "Scan the axial family");
    scan->add_option("--n", c.n_samples, "Number of boundary points")->capture_default_str();
    scan->add_option("--t0z-min", c.t0z_min, "Smallest |T0z|")->capture_default_str();
    scan->add_option("--summary", c.summary, "Summary JSON path (default <out>.summary.json)");
    scan->add_option("--random-per-point", c.random_per_point, "Random orientations per point");
    scan->add_option("--random-out", c.random_out, "CSV of random-orientation visibilities");
    add_seed(scan);
    add_out(scan);

    CLI::App *optimize = app.add_subcommand("optimize", "Random orientation search vs analytic optimum");
    auto *t0_opt = optimize->add_option("--t0", c.t0, "T0 diagonal")->expected(3);
    auto *t0z_opt = optimize->add_option("--t0z", c.t0z, "Axial boundary point given by |T0z|");
    t0_opt->excludes(t0z_opt);
    optimize->add_option("--n", c.n_rotations, "Number of random rotations")->capture_default_str();
    add_seed(optimize);
    add_out(optimize);

    CLI::App *decompose = app.add_subcommand("decompose", "Product-state decomposition of the separable Werner state");
    decompose->add_option("--solution", c.solution, "both|primary|mirror")->capture_default_str();
    add_out(decompose);

    CLI::App *verify = app.add_subcommand("verify", "Verify a serialized model");
    verify->add_option("--model", c.model_path, "Model JSON file")->required();
    verify->add_option("--t", c.t_entries, "Target correlation diagonal (default t * t0)")->expected(3);
    verify->add_option("--directions", c.n_directions, "Verification directions");
    add_out(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Outputs outputs(out);
    try {
        if (model->parsed()) {
            c.subcommand = "model";
            c.model_kind = icosa->parsed() ? "icosa" : (poly->parsed() ? "poly" : "tetra");
            return cmd_model(c, outputs);
        }
        if (boundary->parsed()) {
            c.subcommand = "boundary";
            return cmd_boundary(c, outputs);
        }
        if (scan->parsed()) {
            c.subcommand = "scan";
            return cmd_scan(c, outputs);
        }
        if (optimize->parsed()) {
            c.subcommand = "optimize";
            if (c.t0.empty() && !c.t0z) {
                throw DomainError("optimize needs --t0 or --t0z");
            }
            return cmd_optimize(c, outputs);
        }
        if (decompose->parsed()) {
            c.subcommand = "decompose";
            return cmd_decompose(c, outputs);
        }
        c.subcommand = "verify";
        return cmd_verify(c, outputs);
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace lhs::cli
