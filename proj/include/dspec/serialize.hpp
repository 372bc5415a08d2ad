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

#ifndef DSPEC_SERIALIZE_HPP_
#define DSPEC_SERIALIZE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "dspec/certificates.hpp"
#include "dspec/construction.hpp"
#include "dspec/oracle.hpp"
#include "dspec/spectrum.hpp"
#include "dspec/witnesses.hpp"

namespace dspec {

using Json = nlohmann::ordered_json;

// Significant digits of the human-readable decimal columns.
inline constexpr int kDecimalDigits = 30;

Json sequence_to_json(const Sequence& seq);
std::string dump_sequence(const Sequence& seq);

enum class LoadMode {
  Strict,     // reject any sequence that violates a structural invariant
  Unchecked,  // parse only; used to audit corrupted files
};

// Throws InvalidArgument on malformed JSON and ConstructionIntegrity when
// Strict loading finds violated invariants.
Sequence sequence_from_json(const Json& j, LoadMode mode = LoadMode::Strict);
Sequence load_sequence(const std::filesystem::path& path, LoadMode mode = LoadMode::Strict);
void save_sequence(const Sequence& seq, const std::filesystem::path& path);

Json phi_to_json(const PhiFamily& phi);
PhiFamily phi_from_json(const Json& j);

Json witness_to_json(const WitnessForm& w);
Json psi_to_json(const PsiResult& r);
Json checks_to_json(const std::vector<Check>& checks);
Json lower_cert_to_json(const LowerBoundCert& cert);
Json reducedness_to_json(const ReducednessCert& cert);

std::string spectrum_csv(const std::vector<SpectrumRecord>& records);
std::string ratio_csv(const std::vector<RatioRecord>& records);

}  // namespace dspec

#endif  // DSPEC_SERIALIZE_HPP_
