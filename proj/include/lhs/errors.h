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

#ifndef LHS_ERRORS_H
#define LHS_ERRORS_H

#include <stdexcept>
#include <string>

namespace lhs {

/// Precondition or domain violation on caller-supplied input.
class DomainError : public std::invalid_argument {
   public:
    explicit DomainError(const std::string &what) : std::invalid_argument(what) {
    }
};

class InvalidMeasurementError : public DomainError {
    using DomainError::DomainError;
};

class NonPhysicalStateError : public DomainError {
    using DomainError::DomainError;
};

/// T0 has a zero diagonal entry, so the hidden-variable change of variables is undefined.
class SingularMappingError : public DomainError {
    using DomainError::DomainError;
};

class OutOfRangeError : public DomainError {
    using DomainError::DomainError;
};

class BoundaryViolationError : public DomainError {
    using DomainError::DomainError;
};

class UnsupportedPolyhedronError : public DomainError {
    using DomainError::DomainError;
};

class NotProductStateError : public DomainError {
    using DomainError::DomainError;
};

/// Internal geometric inconsistency that valid input cannot produce.
class GeometryError : public std::logic_error {
   public:
    explicit GeometryError(const std::string &what) : std::logic_error(what) {
    }
};

}  // namespace lhs

#endif
