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

#include "lhs/json_io.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lhs/errors.h"

namespace lhs {

namespace {

void dump_value(std::string &out, const ordered_json &v, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent > 0) {
            out += '\n';
            out.append((size_t)(indent * d), ' ');
        }
    };
    switch (v.type()) {
        case nlohmann::json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(depth + 1);
                out += ordered_json(it.key()).dump();
                out += indent > 0 ? ": " : ":";
                dump_value(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            // Short numeric arrays (vectors) stay on one line.
            bool flat = v.size() <= 4 && std::all_of(v.begin(), v.end(), [](const ordered_json &e) {
                            return e.is_number() || e.is_null();
                        });
            out += '[';
            bool first = true;
            for (const auto &e : v) {
                if (!first) {
                    out += flat && indent > 0 ? ", " : ",";
                }
                first = false;
                if (!flat) {
                    newline(depth + 1);
                }
                dump_value(out, e, indent, depth + 1);
            }
            if (!flat) {
                newline(depth);
            }
            out += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            double d = v.get<double>();
            out += std::isfinite(d) ? fmt::format("{:.17g}", d) : "null";
            return;
        }
        default:
            out += v.dump();
            return;
    }
}

Vec3 vec_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.size() != 3) {
        throw DomainError("expected a 3-element numeric array");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

std::string dump_json(const ordered_json &doc, int indent) {
    std::string out;
    dump_value(out, doc, indent, 0);
    out += '\n';
    return out;
}

ordered_json to_json(const Vec3 &v) {
    return ordered_json::array({v.x, v.y, v.z});
}

ordered_json to_json(const DiagMat3 &m) {
    return ordered_json::array({m.dx, m.dy, m.dz});
}

ordered_json model_to_json(const FiniteLhsModel &model) {
    ordered_json doc;
    doc["t0"] = to_json(model.t0());
    doc["t"] = model.t();
    doc["response_kind"] = model.is_sign_mixture() ? "sign_mixture" : "linear_eta";
    doc["scale"] = model.scale();
    ordered_json atoms = ordered_json::array();
    for (const auto &a : model.atoms()) {
        ordered_json atom;
        atom["q"] = a.q;
        atom["lambda"] = to_json(a.lambda);
        atom["lambda_prime"] = to_json(a.lambda_prime);
        if (a.eta) {
            atom["eta"] = to_json(*a.eta);
        }
        atoms.push_back(std::move(atom));
    }
    doc["atoms"] = std::move(atoms);
    return doc;
}

FiniteLhsModel model_from_json(const nlohmann::json &doc) {
    try {
        DiagMat3 t0;
        {
            Vec3 v = vec_from_json(doc.at("t0"));
            t0 = {v.x, v.y, v.z};
        }
        double t = doc.at("t").get<double>();
        std::string kind = doc.at("response_kind").get<std::string>();
        double scale = doc.at("scale").get<double>();

        std::vector<Atom> atoms;
        for (const auto &j : doc.at("atoms")) {
            Atom a;
            a.q = j.at("q").get<double>();
            a.lambda = vec_from_json(j.at("lambda"));
            a.lambda_prime = vec_from_json(j.at("lambda_prime"));
            if (j.contains("eta")) {
                a.eta = vec_from_json(j.at("eta"));
            }
            atoms.push_back(a);
        }

        if (kind == "sign_mixture") {
            std::vector<Vec3> vertices;
            for (const auto &a : atoms) {
                vertices.push_back(a.lambda_prime);
            }
            Polyhedron p = make_polyhedron(std::move(vertices));
            return FiniteLhsModel(std::move(atoms), SignMixture{std::move(p), scale}, t0, t);
        }
        if (kind == "linear_eta") {
            LinearEta linear;
            for (int k = 0; k < 3; k++) {
                linear.signs[k] = t0[k] < 0 ? -1 : 1;
            }
            return FiniteLhsModel(std::move(atoms), linear, t0, t);
        }
        throw DomainError("unknown response_kind '" + kind + "'");
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("malformed model document: ") + e.what());
    }
}

ordered_json report_to_json(const VerificationReport &report) {
    ordered_json doc;
    doc["max_trace_err"] = report.max_trace_err;
    doc["max_bloch_err"] = report.max_bloch_err;
    doc["mean_a_err"] = report.mean_a_err;
    doc["mean_b_err"] = report.mean_b_err;
    doc["norm_err"] = report.norm_err;
    doc["n_directions"] = report.n_directions;
    return doc;
}

}  // namespace lhs
