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

#ifndef LHS_JSON_IO_H
#define LHS_JSON_IO_H

#include <string>

#include "json.hpp"
#include "lhs/lhs_model.h"
#include "lhs/vec3.h"

namespace lhs {

using ordered_json = nlohmann::ordered_json;

/// Serializes with floats at 17 significant digits; non-finite floats become null.
std::string dump_json(const ordered_json &doc, int indent = 2);

ordered_json to_json(const Vec3 &v);
ordered_json to_json(const DiagMat3 &m);

/// {t0, t, response_kind, scale, atoms: [{q, lambda, lambda_prime, eta?}]}, in that order.
ordered_json model_to_json(const FiniteLhsModel &model);

/// Inverse of model_to_json. A sign-mixture polyhedron is rebuilt from the atoms' lambda_prime
/// vectors. Throws DomainError on malformed documents.
FiniteLhsModel model_from_json(const nlohmann::json &doc);

ordered_json report_to_json(const VerificationReport &report);

}  // namespace lhs

#endif
