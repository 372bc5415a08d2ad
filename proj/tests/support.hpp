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

// Shared fixtures and a brute-force psi* used as an independent oracle.
#ifndef DSPEC_TESTS_SUPPORT_HPP_
#define DSPEC_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "dspec/construction.hpp"
#include "dspec/numerics.hpp"

namespace dspec::testing {

inline Sequence golden(int depth = 3, int n = 2, Rational c = Rational::make(1, 2),
                       Schedule schedule = Schedule::constant(2)) {
  Params p;
  p.n = n;
  p.c = c;
  p.schedule = schedule;
  p.depth = depth;
  return build_sequence(p);
}

inline Integer pow2(unsigned long e) { return ipow(Integer(2), e); }

struct NaiveResult {
  Rational value;
  std::int64_t forms = 0;
};

// Loops over every (b_0, b_1, ..., b_n) with |b_i| <= Q and
// |b_0| <= 1 + Q * sum |xi_i|, in plain 64-bit integer arithmetic over a
// common denominator. No symmetry, no b_0 elimination.
inline NaiveResult naive_psi(const std::vector<std::pair<long, long>>& xi, long Q) {
  const int n = static_cast<int>(xi.size());
  long D = 1;
  for (const auto& [p, q] : xi) D = std::lcm(D, q);
  std::vector<long> x(static_cast<std::size_t>(n));
  long bound = 1;
  long sum_abs = 0;
  for (int i = 0; i < n; ++i) {
    x[i] = xi[i].first * (D / xi[i].second);
    sum_abs += std::labs(x[i]);
  }
  bound += (Q * sum_abs + D - 1) / D;
  std::vector<long> b(static_cast<std::size_t>(n), -Q);
  std::optional<long> best;
  NaiveResult out;
  while (true) {
    for (long b0 = -bound; b0 <= bound; ++b0) {
      bool zero = b0 == 0;
      long acc = b0 * D;
      for (int i = 0; i < n; ++i) {
        acc += b[i] * x[i];
        zero = zero && b[i] == 0;
      }
      if (zero) continue;
      ++out.forms;
      const long v = std::labs(acc);
      if (!best || v < *best) best = v;
    }
    int i = 0;
    while (i < n && b[i] == Q) b[i++] = -Q;
    if (i == n) break;
    ++b[i];
  }
  out.value = Rational::make(*best, D);
  return out;
}

}  // namespace dspec::testing

#endif  // DSPEC_TESTS_SUPPORT_HPP_
