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

#ifndef DSPEC_CONSTRUCTION_HPP_
#define DSPEC_CONSTRUCTION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dspec/numerics.hpp"
#include "dspec/phi.hpp"

namespace dspec {

// Exponent schedule k -> M_k for the blocks k = 1, 2, ...
struct Schedule {
  enum class Kind { Constant, Ramp, List };

  Kind kind = Kind::Constant;
  long m = 2;                 // Constant: M_k = m
  long m0 = 1;                // Ramp: M_k = m0 + k
  std::vector<long> values;   // List: M_k = values[k - 1]

  static Schedule constant(long m);
  static Schedule ramp(long m0);
  static Schedule list(std::vector<long> values);
  // "const:2", "ramp:1", "list:2,3,4".
  static Schedule parse(std::string_view text);
  std::string describe() const;

  // Throws ErrorKind::Range for k < 1 or past the end of a list.
  long at(int k) const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct Params {
  int n = 2;
  std::optional<Rational> c;  // required for the c-driven recursion
  Schedule schedule;
  int depth = 1;              // K: blocks built after the initial one
};

// TargetConstant closes each block with ceil(a_{nk+1}/c); PhiDriven with L*_k.
enum class Variant { TargetConstant, PhiDriven };

// The integer sequence a_1, ..., a_{n(K+1)}.  Stored as plain data so that
// corrupted sequences can be represented and rejected by the checkers;
// build_sequence / build_sequence_phi only ever return valid ones.
struct Sequence {
  Params params;
  Variant variant = Variant::TargetConstant;
  std::optional<PhiFamily> phi;
  std::vector<Integer> a;  // a[i - 1] holds a_i

  int n() const { return params.n; }
  // Number of built blocks K.
  int depth() const { return static_cast<int>(a.size()) / params.n - 1; }
  // a_i for 1 <= i <= a.size(); a_0 is 1.
  const Integer& term(long i) const;
  long length() const { return static_cast<long>(a.size()); }
};

Sequence build_sequence(const Params& params);
Sequence build_sequence_phi(const Params& params, const PhiFamily& phi);

// Multiplier closing block k >= 1 under Phi: the least z with
// (z * a_{nk+n-1})^{-1} < Phi(a_{nk+1}).
Integer phi_block_multiplier(const Integer& leading, const Integer& penultimate,
                             int n, const PhiFamily& phi, int k);

// Every violated structural invariant, in index order; empty means valid.
std::vector<std::string> sequence_violations(const Sequence& seq);

// Exact partial sums S_{j,k} for j = 0..n (S_{0,k} = 1).
struct TruncVector {
  int k = 0;
  std::vector<Rational> S;
};

Rational partial_sum(const Sequence& seq, int j, int k);
TruncVector partial_sums(const Sequence& seq, int k);

// Deepest truncation level at which the tails are enclosed: K - 1.
int max_eval_depth(const Sequence& seq);

// [1/a_{n(k+1)+j}, 2/a_{n(k+1)+j}] for the tail R_{j,k}; [0, 0] for j = 0.
Enclosure tail_enclosure(const Sequence& seq, int j, int k);
// S_{j,k} + tail_enclosure(j, k): an enclosure of xi_j.
Enclosure coordinate_enclosure(const Sequence& seq, int j, int k);

}  // namespace dspec

#endif  // DSPEC_CONSTRUCTION_HPP_
