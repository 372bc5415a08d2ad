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

#ifndef DSPEC_CERTIFICATES_HPP_
#define DSPEC_CERTIFICATES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dspec/construction.hpp"
#include "dspec/numerics.hpp"
#include "dspec/witnesses.hpp"

namespace dspec {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<Check>& checks);

// S_{i,k} in lowest terms, certified to have denominator exactly a_{nk+i}.
// For k >= 1 the induction step's auxiliary integers are recomputed:
//   G_{i,k} = a_{nk} / a_{n(k-1)+i}        (i < n), with a_{nk+i} = (a_{n(k-1)+i} G)^{i M_k}
//   H_{n,k} = a_{n(k+1)} / a_{nk+n-1}      (i = n)
struct ReducednessCert {
  int i = 1;
  int k = 0;
  Integer numerator;
  Integer denominator;
  std::optional<Integer> G;
  std::optional<Integer> H;
};

ReducednessCert verify_reducedness(const Sequence& seq, int i, int k);

// Lower bound on psi*(Q) at Q = a_{nk+1} - 1:
//   lower = 1/a_{n(k+1)} - n Q (2 / a_{n(k+1)+1}).
// Valid because of the recorded preconditions (reduced partial sums, the
// divisibility chain and the height chain Q < a_{nk+1} <= a_{nk+i}/a_{nk+i-1}).
struct LowerBoundCert {
  int k = 1;
  Integer Q;
  Rational main_term;
  Rational tail_bound;
  Rational lower;
  std::vector<Check> preconditions;
};

// Throws ErrorKind::CertificateRefused naming the first failed check.
LowerBoundCert lower_bound_certificate(const Sequence& seq, int k);

struct ScheduleReport {
  std::vector<Check> checks;
  bool pass() const { return all_pass(checks); }
};

// Per-block growth conditions the upper-bound witnesses rely on, all decided
// over the integers.  Failures are report entries, never exceptions.
ScheduleReport check_schedule(const Sequence& seq);

// Closed-form identities behind b_0 of a witness.  For Case3 this includes
// b_1 S_{1,k-1} in Z, the integer U_k, and
//   N_e/a_{nk+1} - a_{ne} (S_{n,k} - 1/a_{n(k+1)}) = -a_{ne} (1/a_n + ... + 1/a_{ne}).
// Throws ErrorKind::ConstructionIntegrity when any check fails.
struct IntegrityRecord {
  std::vector<Check> checks;
  std::optional<Integer> U;
  Rational identity_value;
};

IntegrityRecord integrality_checks(const Sequence& seq, const WitnessForm& w);

}  // namespace dspec

#endif  // DSPEC_CERTIFICATES_HPP_
