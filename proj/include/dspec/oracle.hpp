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

#ifndef DSPEC_ORACLE_HPP_
#define DSPEC_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "dspec/construction.hpp"
#include "dspec/numerics.hpp"

namespace dspec {

// The point xi given coordinate-wise as exact enclosures (degenerate for a
// rational point).
struct Target {
  std::vector<Enclosure> coords;
  int n() const { return static_cast<int>(coords.size()); }
};

Target rational_target(const std::vector<Rational>& point);
// xi_j enclosed at truncation level k (default: deepest available).
Target sequence_target(const Sequence& seq, std::optional<int> k = std::nullopt);

enum class PsiMethod { Exhaustive, WitnessOnly, WitnessPlusCert };
const char* method_name(PsiMethod method);

struct PsiResult {
  Integer Q;
  Enclosure value;                             // psi*(Q)
  std::optional<std::vector<Integer>> argmin;  // (b_0, b_1, ..., b_n)
  PsiMethod method = PsiMethod::Exhaustive;
  Enclosure normalized;                        // Q^n psi*(Q)
  bool ambiguous = false;  // another form's enclosure overlaps the argmin's
  std::uint64_t candidates = 0;
};

struct SearchOptions {
  std::uint64_t budget = 100'000'000;  // max (2Q+1)^n
  int threads = 0;                     // 0: OpenMP default
};

// (2Q+1)^n, saturating at UINT64_MAX.
std::uint64_t search_space_size(int n, long Q);

// psi*(Q) by scanning every (b_1..b_n) in [-Q,Q]^n up to sign, with b_0
// eliminated as the nearest integer(s) to -(b_1 xi_1 + ... + b_n xi_n).
// The result encloses the true minimum: [min of lower ends, min of upper
// ends].  argmin minimises (upper end, height, b_1..b_n lexicographic, b_0)
// with the first nonzero b_i positive.  OpenMP-parallel; output does not
// depend on the thread count.
PsiResult psi_star_exhaustive(const Target& target, long Q, const SearchOptions& opts = {});

// Serial reference for the kernel above: enumerates both signs and works in
// plain Rational/Enclosure arithmetic.  Same contract, same output.
PsiResult psi_star_exhaustive_reference(const Target& target, long Q,
                                        const SearchOptions& opts = {});

// Witness upper bound, plus the certified lower bound when Q = a_{nk+1} - 1.
PsiResult psi_star_enclosure(const Sequence& seq, const Integer& Q);

}  // namespace dspec

#endif  // DSPEC_ORACLE_HPP_
