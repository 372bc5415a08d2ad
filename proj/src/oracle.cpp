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

#include "dspec/oracle.hpp"

#include <limits>
#include <string>

#include "dspec/certificates.hpp"
#include "dspec/errors.hpp"
#include "dspec/witnesses.hpp"
#include "search_accumulator.hpp"

namespace dspec {

Target rational_target(const std::vector<Rational>& point) {
  Target t;
  for (const Rational& x : point) t.coords.emplace_back(x);
  return t;
}

Target sequence_target(const Sequence& seq, std::optional<int> k) {
  const int depth = k.value_or(max_eval_depth(seq));
  Target t;
  for (int j = 1; j <= seq.n(); ++j) t.coords.push_back(coordinate_enclosure(seq, j, depth));
  return t;
}

const char* method_name(PsiMethod method) {
  switch (method) {
    case PsiMethod::Exhaustive: return "exhaustive";
    case PsiMethod::WitnessOnly: return "witness";
    case PsiMethod::WitnessPlusCert: return "witness+cert";
  }
  return "";
}

std::uint64_t search_space_size(int n, long Q) {
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(Q) + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / side) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= side;
  }
  return total;
}

namespace detail {

void check_search_request(const Target& target, long Q, const SearchOptions& opts) {
  if (target.n() < 1) throw Error(ErrorKind::InvalidArgument, "empty target");
  if (Q < 1) throw Error(ErrorKind::InvalidArgument, "search height Q must be >= 1");
  const std::uint64_t need = search_space_size(target.n(), Q);
  if (need > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "search over (2Q+1)^n = " + std::to_string(need) +
                    " forms exceeds budget " + std::to_string(opts.budget) +
                    "; rerun with budget >= " + std::to_string(need));
  }
}

PsiResult make_exhaustive_result(long Q, int n, const Enclosure& value,
                                 const std::vector<long>& b, const Integer& b0,
                                 bool ambiguous, std::uint64_t candidates) {
  PsiResult r;
  r.Q = Q;
  r.value = value;
  std::vector<Integer> form{b0};
  for (long x : b) form.emplace_back(x);
  r.argmin = std::move(form);
  r.method = PsiMethod::Exhaustive;
  r.normalized = value.scale(Rational(ipow(Integer(Q), static_cast<unsigned long>(n))));
  r.ambiguous = ambiguous;
  r.candidates = candidates;
  return r;
}

}  // namespace detail

PsiResult psi_star_enclosure(const Sequence& seq, const Integer& Q) {
  const WitnessForm w = build_witness(seq, Q);
  PsiResult r;
  r.Q = Q;
  r.method = PsiMethod::WitnessOnly;
  Rational lower(0);
  const int k = w.tag.k;
  const Integer& leading = seq.term(static_cast<long>(seq.n()) * k + 1);
  if (Q == leading - 1) {
    const LowerBoundCert cert = lower_bound_certificate(seq, k);
    lower = cert.lower;
    r.method = PsiMethod::WitnessPlusCert;
  }
  if (lower > w.value.hi()) {
    throw Error(ErrorKind::ConstructionIntegrity,
                "certified lower bound exceeds the witness upper bound at Q = " + Q.get_str());
  }
  r.value = Enclosure(lower, w.value.hi());
  r.normalized = r.value.scale(Rational(ipow(Q, static_cast<unsigned long>(seq.n()))));
  return r;
}

}  // namespace dspec
