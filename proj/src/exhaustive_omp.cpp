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

#include <omp.h>

#include <cstdlib>

#include "dspec/oracle.hpp"
#include "search_accumulator.hpp"

namespace dspec {
namespace {

// Target endpoints as integer numerators over one shared denominator.
struct ScaledTarget {
  Integer den;
  std::vector<Integer> lo;
  std::vector<Integer> hi;
  bool exact = true;
};

ScaledTarget scale(const Target& target) {
  ScaledTarget st;
  st.den = 1;
  for (const Enclosure& e : target.coords) {
    mpz_lcm(st.den.get_mpz_t(), st.den.get_mpz_t(), e.lo().den().get_mpz_t());
    mpz_lcm(st.den.get_mpz_t(), st.den.get_mpz_t(), e.hi().den().get_mpz_t());
    st.exact = st.exact && e.is_point();
  }
  for (const Enclosure& e : target.coords) {
    st.lo.push_back(e.lo().num() * (st.den / e.lo().den()));
    st.hi.push_back(e.hi().num() * (st.den / e.hi().den()));
  }
  return st;
}

// Scratch integers reused across the inner loop of one thread.
struct Workspace {
  Integer sum_lo, sum_hi, first, last, m, t_lo, t_hi, v_lo, v_hi, tmp;
};

void scan_form(const ScaledTarget& st, const std::vector<long>& b, Workspace& w,
               detail::Accumulator<Integer>& acc) {
  const std::size_t n = b.size();
  w.sum_lo = 0;
  w.sum_hi = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const long x = b[j];
    if (x == 0) continue;
    const Integer& down = x > 0 ? st.lo[j] : st.hi[j];
    const Integer& up = x > 0 ? st.hi[j] : st.lo[j];
    const auto mag = static_cast<unsigned long>(std::labs(x));
    if (x > 0) {
      mpz_addmul_ui(w.sum_lo.get_mpz_t(), down.get_mpz_t(), mag);
      if (!st.exact) mpz_addmul_ui(w.sum_hi.get_mpz_t(), up.get_mpz_t(), mag);
    } else {
      mpz_submul_ui(w.sum_lo.get_mpz_t(), down.get_mpz_t(), mag);
      if (!st.exact) mpz_submul_ui(w.sum_hi.get_mpz_t(), up.get_mpz_t(), mag);
    }
  }
  if (st.exact) w.sum_hi = w.sum_lo;

  // b_0 ranges over the integers within 1/2 of some point of -[sum_lo, sum_hi]/den:
  //   ceil((-2 sum_hi - den) / (2 den)) .. floor((den - 2 sum_lo) / (2 den)).
  const Integer two_den = 2 * st.den;
  w.tmp = -2 * w.sum_hi - st.den;
  mpz_cdiv_q(w.first.get_mpz_t(), w.tmp.get_mpz_t(), two_den.get_mpz_t());
  w.tmp = st.den - 2 * w.sum_lo;
  mpz_fdiv_q(w.last.get_mpz_t(), w.tmp.get_mpz_t(), two_den.get_mpz_t());

  for (w.m = w.first; w.m <= w.last; ++w.m) {
    w.t_lo = w.m * st.den + w.sum_lo;
    w.t_hi = w.m * st.den + w.sum_hi;
    if (sgn(w.t_lo) >= 0) {
      w.v_lo = w.t_lo;
      w.v_hi = w.t_hi;
    } else if (sgn(w.t_hi) <= 0) {
      w.v_lo = -w.t_hi;
      w.v_hi = -w.t_lo;
    } else {
      w.v_lo = 0;
      w.v_hi = -w.t_lo > w.t_hi ? Integer(-w.t_lo) : w.t_hi;
    }
    if (!acc.interesting(w.v_lo, w.v_hi)) continue;
    detail::Candidate<Integer> c{w.v_lo, w.v_hi, 0, b, w.m};
    for (long x : b) c.height = std::max(c.height, std::labs(x));
    acc.offer(c);
  }
}

}  // namespace

PsiResult psi_star_exhaustive(const Target& target, long Q, const SearchOptions& opts) {
  detail::check_search_request(target, Q, opts);
  const int n = target.n();
  const ScaledTarget st = scale(target);
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

  std::vector<detail::Accumulator<Integer>> partial(static_cast<std::size_t>(threads));
  std::uint64_t scanned = 0;

#pragma omp parallel num_threads(threads) reduction(+ : scanned)
  {
    auto& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
    Workspace w;
    std::vector<long> b(static_cast<std::size_t>(n), 0);

    // Representatives have their first nonzero coordinate positive, so b_1
    // runs over [0, Q] and the tail over [-Q, Q]^(n-1).
#pragma omp for schedule(dynamic, 1)
    for (long lead = 0; lead <= Q; ++lead) {
      b[0] = lead;
      for (std::size_t j = 1; j < b.size(); ++j) b[j] = -Q;
      for (;;) {
        bool representative = lead > 0;
        if (!representative) {
          for (std::size_t j = 1; j < b.size(); ++j) {
            if (b[j] != 0) {
              representative = b[j] > 0;
              break;
            }
          }
        }
        if (representative) {
          ++scanned;
          scan_form(st, b, w, acc);
        }
        std::size_t pos = b.size() - 1;
        while (pos >= 1 && b[pos] == Q) {
          b[pos] = -Q;
          --pos;
        }
        if (pos < 1) break;
        ++b[pos];
      }
    }
  }

  detail::Accumulator<Integer> total;
  for (const auto& acc : partial) {
    if (!acc.empty()) total.merge(acc);
  }
  const auto& best = total.best();
  const Enclosure value(Rational::make(total.min_lo(), st.den), Rational::make(best.hi, st.den));
  return detail::make_exhaustive_result(Q, n, value, best.b, best.b0, total.ambiguous(),
                                        scanned);
}

}  // namespace dspec
