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

#ifndef DSPEC_SPECTRUM_HPP_
#define DSPEC_SPECTRUM_HPP_

#include <vector>

#include "dspec/certificates.hpp"
#include "dspec/construction.hpp"
#include "dspec/oracle.hpp"
#include "dspec/phi.hpp"

namespace dspec {

// Slack allowed above c on the normalised upper ends.
Rational upper_tolerance();  // 1/10000

struct SpectrumRecord {
  int k = 1;
  Integer Q;
  Enclosure psi;
  Enclosure normalized;  // Q^n psi*(Q)
  PsiMethod method = PsiMethod::WitnessPlusCert;
};

// One record per block k in [k_min, k_max] at Q = a_{nk+1} - 1.  Blocks are
// independent and evaluated in parallel; output is sorted by k.
// Throws VerificationFailure if any normalised upper end exceeds c (1 + 1e-4).
std::vector<SpectrumRecord> theta_scan(const Sequence& seq, int k_min, int k_max,
                                       int threads = 1);

// [max normalised lower end, c (1 + 1e-4)].  A finite proxy for the
// Dirichlet constant: every scanned scale certifies it is at least lo.
Enclosure theta_estimate(const std::vector<SpectrumRecord>& records, const Rational& c);

// True iff the block-k Case1 witness at Q = a_{nk+1} has value <= Q^-N.
bool liouville_check(const Sequence& seq, int N, int k);

struct RatioRecord {
  int k = 1;
  Integer Q;
  Enclosure psi;
  Enclosure phi;
  Enclosure ratio;  // psi*(Q) / Phi(Q)
};

std::vector<RatioRecord> phi_ratio_scan(const Sequence& seq, const PhiFamily& phi,
                                        int k_min, int k_max, int threads = 1);

// Decay condition Phi(t) < t^-n checked exactly at each sample, and the
// ratios Phi(ceil(alpha t)) / Phi(t) for alpha = 1 + 2^-j, j = 1..6.  The
// ratio part is only a heuristic look at an asymptotic property.
struct AdmissibilityReport {
  std::vector<Check> decay;
  std::vector<Rational> min_ratio_by_j;  // index j-1; lower ends of the ratio enclosures
  Rational min_ratio;
  bool decay_pass() const { return all_pass(decay); }
};

AdmissibilityReport check_phi_admissible(const PhiFamily& phi, int n,
                                         const std::vector<Integer>& samples);

}  // namespace dspec

#endif  // DSPEC_SPECTRUM_HPP_
