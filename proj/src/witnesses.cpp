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

#include "dspec/witnesses.hpp"

#include <algorithm>
#include <string>

#include "dspec/errors.hpp"

namespace dspec {
namespace {

const Integer& block_term(const Sequence& seq, int k, int i) {
  return seq.term(static_cast<long>(seq.n()) * k + i);
}

Rational exact_N(const Sequence& seq, int k, int l) {
  Rational sum(0);
  for (int h = l + 1; h <= k; ++h) sum += Rational::make(1, block_term(seq, h, 0));
  return Rational(block_term(seq, k, 1) * block_term(seq, l, 0)) * sum;
}

}  // namespace

CaseTag classify_Q(const Sequence& seq, const Integer& Q) {
  const int K = seq.depth();
  if (Q < block_term(seq, 1, 0) || Q >= block_term(seq, K, 0)) {
    throw Error(ErrorKind::Range,
                "Q = " + Q.get_str() + " outside the classification range [a_n, a_{nK}); " +
                    "rebuild with a larger depth (Q < a_{nK} needs K large enough)");
  }
  int k = 1;
  while (Q >= block_term(seq, k + 1, 0)) ++k;

  CaseTag tag;
  tag.k = k;
  if (Q >= block_term(seq, k, 1)) {
    tag.kase = ProofCase::Case1;
  } else if (Q * block_term(seq, k, 0) < block_term(seq, k, 1) * block_term(seq, k - 1, 0)) {
    tag.kase = ProofCase::Case2;
  } else {
    tag.kase = ProofCase::Case3;
    for (int l = 0; l <= k - 1; ++l) {
      if (Q >= compute_N(seq, k, l)) {
        tag.e = l;
        break;
      }
    }
    if (!tag.e) {
      throw Error(ErrorKind::ConstructionIntegrity,
                  "no index e with Q >= N_e(k) for Q = " + Q.get_str());
    }
  }
  return tag;
}

Integer compute_N(const Sequence& seq, int k, int l) {
  if (k < 1 || k > seq.depth() || l < 0 || l > k - 1) {
    throw Error(ErrorKind::Range, "compute_N needs 1 <= k <= K and 0 <= l <= k-1");
  }
  Rational previous;
  Rational wanted;
  for (int i = 0; i <= k - 1; ++i) {
    const Rational value = exact_N(seq, k, i);
    if (!value.is_integer()) {
      throw Error(ErrorKind::ConstructionIntegrity,
                  "N_" + std::to_string(i) + "(" + std::to_string(k) + ") is not an integer");
    }
    if (i > 0 && !(value < previous)) {
      throw Error(ErrorKind::ConstructionIntegrity,
                  "N_l(" + std::to_string(k) + ") is not strictly decreasing at l = " +
                      std::to_string(i));
    }
    if (i == l) wanted = value;
    previous = value;
  }
  return wanted.num();
}

Enclosure linear_part(const Sequence& seq, std::span<const Integer> b, int k) {
  if (b.size() != static_cast<std::size_t>(seq.n()) + 1) {
    throw Error(ErrorKind::InvalidArgument, "form must have n+1 coefficients");
  }
  Enclosure sum(Rational(0));
  for (int j = 1; j <= seq.n(); ++j) {
    if (b[j] == 0) continue;
    sum = sum + coordinate_enclosure(seq, j, k).scale(Rational(b[j]));
  }
  return sum;
}

Enclosure evaluate_form(const Sequence& seq, std::span<const Integer> b, int k) {
  if (std::all_of(b.begin(), b.end(), [](const Integer& x) { return x == 0; })) {
    throw Error(ErrorKind::InvalidArgument, "the zero form has no value");
  }
  return (linear_part(seq, b, k) + Rational(b[0])).abs();
}

WitnessForm build_witness(const Sequence& seq, const Integer& Q) {
  const int n = seq.n();
  WitnessForm w;
  w.Q = Q;
  w.tag = classify_Q(seq, Q);
  const int k = w.tag.k;
  w.b.assign(static_cast<std::size_t>(n) + 1, Integer(0));
  switch (w.tag.kase) {
    case ProofCase::Case1:
      w.b[1] = block_term(seq, k, 1);
      break;
    case ProofCase::Case2:
      w.b[n] = block_term(seq, k, 0);
      break;
    case ProofCase::Case3:
      w.b[1] = compute_N(seq, k, *w.tag.e);
      w.b[n] = -block_term(seq, *w.tag.e, 0);
      break;
  }
  for (int j = 1; j <= n; ++j) {
    if (abs(w.b[j]) > Q) {
      throw Error(ErrorKind::ConstructionIntegrity,
                  "witness coefficient b_" + std::to_string(j) + " exceeds Q");
    }
  }

  // b_0 is the nearest integer to -(b_1 xi_1 + ... + b_n xi_n); deepen the
  // truncation until the whole enclosure rounds to one integer.
  const Rational half = Rational::make(1, 2);
  bool decided = false;
  for (int d = k; d <= max_eval_depth(seq) && !decided; ++d) {
    const Enclosure target = -linear_part(seq, w.b, d);
    const Integer m = nearest_integer(target.mid());
    const Rational mr(m);
    if (target.is_point() ||
        (abs(target.lo() - mr) < half && abs(target.hi() - mr) < half)) {
      w.b[0] = m;
      decided = true;
    }
  }
  if (!decided) {
    throw Error(ErrorKind::IndecisiveEnclosure,
                "b_0 undecided at every available depth for Q = " + Q.get_str());
  }
  w.eval_depth = max_eval_depth(seq);
  w.value = evaluate_form(seq, w.b, w.eval_depth);
  return w;
}

}  // namespace dspec
