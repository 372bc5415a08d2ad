// Copyright 2026 The dspec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DSPEC_ERRORS_HPP_
#define DSPEC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dspec {

enum class ErrorKind {
  InvalidArgument,
  Range,
  Depth,
  ConstructionIntegrity,
  IndecisiveEnclosure,
  PreconditionViolation,
  CertificateRefused,
  BudgetExceeded,
  VerificationFailure,
};

const char* error_kind_name(ErrorKind kind);

// All library failures are reported through this type; the kind decides the
// CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dspec

#endif  // DSPEC_ERRORS_HPP_
