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

// Serial reference scan.  Kept deliberately plain: full sign enumeration and
// Rational/Enclosure arithmetic, no shared-denominator tricks.

#include <cstdlib>

#include "dspec/oracle.hpp"
#include "search_accumulator.hpp"

namespace dspec {

PsiResult psi_star_exhaustive_reference(const Target& target, long Q,
                                        const SearchOptions& opts) {
  detail::check_search_request(target, Q, opts);
  const int n = target.n();
  const Rational half = Rational::make(1, 2);

  detail::Accumulator<Rational> acc;
  std::vector<long> b(static_cast<std::size_t>(n), -Q);
  std::uint64_t scanned = 0;
  for (;;) {
    bool nonzero = false;
    for (long x : b) nonzero = nonzero || x != 0;
    if (nonzero) {
      ++scanned;
      Enclosure s(Rational(0));
      for (int j = 0; j < n; ++j) {
        s = s + target.coords[static_cast<std::size_t>(j)].scale(Rational(b[static_cast<std::size_t>(j)]));
      }
      const Integer first = ceil(-s.hi() - half);
      const Integer last = floor(-s.lo() + half);
      for (Integer m = first; m <= last; ++m) {
        const Enclosure v = (s + Rational(m)).abs();
        detail::Candidate<Rational> c{v.lo(), v.hi(), 0, b, m};
        long sign = 0;
        for (long x : c.b) {
          if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
          }
        }
        if (sign < 0) {
          for (long& x : c.b) x = -x;
          c.b0 = -c.b0;
        }
        for (long x : c.b) c.height = std::max(c.height, std::labs(x));
        acc.offer(c);
      }
    }
    int pos = n - 1;
    while (pos >= 0 && b[static_cast<std::size_t>(pos)] == Q) {
      b[static_cast<std::size_t>(pos)] = -Q;
      --pos;
    }
    if (pos < 0) break;
    ++b[static_cast<std::size_t>(pos)];
  }

  const auto& best = acc.best();
  return detail::make_exhaustive_result(Q, n, Enclosure(acc.min_lo(), best.hi), best.b,
                                        best.b0, acc.ambiguous(), scanned / 2);
}

}  // namespace dspec
