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

#ifndef DSPEC_WITNESSES_HPP_
#define DSPEC_WITNESSES_HPP_

#include <optional>
#include <span>
#include <vector>

#include "dspec/construction.hpp"
#include "dspec/numerics.hpp"

namespace dspec {

// Which of the three height ranges of block k a height Q falls into:
//   Case1  Q in [a_{nk+1}, a_{n(k+1)})
//   Case2  Q in [a_{nk}, a_{nk+1} a_{n(k-1)} / a_{nk})
//   Case3  the remaining middle range, with e the least l such that Q >= N_l(k)
enum class ProofCase { Case1 = 1, Case2 = 2, Case3 = 3 };

struct CaseTag {
  ProofCase kase = ProofCase::Case1;
  int k = 1;
  std::optional<int> e;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

// Sparse integer form b = (b_0, ..., b_n) of height at most Q together with a
// certified enclosure of |b_0 + b_1 xi_1 + ... + b_n xi_n|.
struct WitnessForm {
  std::vector<Integer> b;
  CaseTag tag;
  Integer Q;
  Enclosure value;
  int eval_depth = 0;
};

// Block k with a_{nk} <= Q < a_{n(k+1)} and its case.  Requires
// a_n <= Q < a_{nK}; throws ErrorKind::Range otherwise.
CaseTag classify_Q(const Sequence& seq, const Integer& Q);

// N_l(k) = a_{nk+1} a_{nl} (1/a_{n(l+1)} + ... + 1/a_{nk}) for 0 <= l <= k-1.
// Asserts integrality and N_0(k) > N_1(k) > ... > N_{k-1}(k).
Integer compute_N(const Sequence& seq, int k, int l);

// Enclosure of b_1 xi_1 + ... + b_n xi_n at truncation level k (b_0 ignored).
Enclosure linear_part(const Sequence& seq, std::span<const Integer> b, int k);
// Enclosure of |b_0 + b_1 xi_1 + ... + b_n xi_n| at truncation level k.
Enclosure evaluate_form(const Sequence& seq, std::span<const Integer> b, int k);

WitnessForm build_witness(const Sequence& seq, const Integer& Q);

}  // namespace dspec

#endif  // DSPEC_WITNESSES_HPP_
