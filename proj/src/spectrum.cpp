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

#include "dspec/spectrum.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "dspec/errors.hpp"
#include "dspec/witnesses.hpp"

namespace dspec {
namespace {

void check_range(const Sequence& seq, int k_min, int k_max) {
  if (k_min < 1 || k_min > k_max) {
    throw Error(ErrorKind::Range, "empty or invalid block range [" + std::to_string(k_min) +
                                      ", " + std::to_string(k_max) + "]");
  }
  if (k_max > max_eval_depth(seq)) {
    throw Error(ErrorKind::Depth, "block " + std::to_string(k_max) +
                                      " needs a sequence of depth >= " +
                                      std::to_string(k_max + 1));
  }
}

const Integer& leading_term(const Sequence& seq, int k) {
  return seq.term(static_cast<long>(seq.n()) * k + 1);
}

// Runs body(i) for i in [0, count) in parallel and rethrows the first failure
// by index so errors are as deterministic as results.
template <typename Body>
void parallel_blocks(int count, int threads, Body body) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Rational upper_tolerance() { return Rational::make(1, 10000); }

std::vector<SpectrumRecord> theta_scan(const Sequence& seq, int k_min, int k_max,
                                       int threads) {
  check_range(seq, k_min, k_max);
  if (!seq.params.c) {
    throw Error(ErrorKind::InvalidArgument, "theta scan needs a sequence built for a target c");
  }
  const Rational ceiling = *seq.params.c * (Rational(1) + upper_tolerance());
  const int count = k_max - k_min + 1;
  std::vector<SpectrumRecord> records(static_cast<std::size_t>(count));
  parallel_blocks(count, threads, [&](int i) {
    const int k = k_min + i;
    const Integer Q = leading_term(seq, k) - 1;
    const PsiResult r = psi_star_enclosure(seq, Q);
    SpectrumRecord& rec = records[static_cast<std::size_t>(i)];
    rec.k = k;
    rec.Q = Q;
    rec.psi = r.value;
    rec.normalized = r.normalized;
    rec.method = r.method;
    if (rec.normalized.hi() > ceiling) {
      throw Error(ErrorKind::VerificationFailure,
                  "normalised upper end exceeds c(1+1e-4) at k = " + std::to_string(k));
    }
  });
  return records;
}

Enclosure theta_estimate(const std::vector<SpectrumRecord>& records, const Rational& c) {
  if (records.empty()) throw Error(ErrorKind::Range, "theta estimate needs at least one record");
  Rational lo = records.front().normalized.lo();
  for (const auto& r : records) lo = max(lo, r.normalized.lo());
  return Enclosure(lo, c * (Rational(1) + upper_tolerance()));
}

bool liouville_check(const Sequence& seq, int N, int k) {
  check_range(seq, k, k);
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "N must be >= 0");
  const Integer Q = leading_term(seq, k);
  const WitnessForm w = build_witness(seq, Q);
  if (w.tag.kase != ProofCase::Case1 || w.tag.k != k) {
    throw Error(ErrorKind::ConstructionIntegrity,
                "Q = a_{nk+1} did not classify as Case1 of block " + std::to_string(k));
  }
  return w.value.hi() <= Rational::make(1, ipow(Q, static_cast<unsigned long>(N)));
}

std::vector<RatioRecord> phi_ratio_scan(const Sequence& seq, const PhiFamily& phi,
                                        int k_min, int k_max, int threads) {
  check_range(seq, k_min, k_max);
  if (seq.variant != Variant::PhiDriven || !seq.phi || !(*seq.phi == phi)) {
    throw Error(ErrorKind::InvalidArgument, "ratio scan needs a sequence built for this phi");
  }
  const int count = k_max - k_min + 1;
  std::vector<RatioRecord> records(static_cast<std::size_t>(count));
  parallel_blocks(count, threads, [&](int i) {
    const int k = k_min + i;
    RatioRecord& rec = records[static_cast<std::size_t>(i)];
    rec.k = k;
    rec.Q = leading_term(seq, k) - 1;
    rec.psi = psi_star_enclosure(seq, rec.Q).value;
    rec.phi = phi.eval(rec.Q);
    rec.ratio = rec.psi / rec.phi;
  });
  return records;
}

AdmissibilityReport check_phi_admissible(const PhiFamily& phi, int n,
                                         const std::vector<Integer>& samples) {
  AdmissibilityReport report;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] <= samples[i - 1]) {
      throw Error(ErrorKind::InvalidArgument, "sample points must be increasing");
    }
  }
  for (const Integer& t : samples) {
    const Rational limit = Rational::make(1, ipow(t, static_cast<unsigned long>(n)));
    std::string name = "decay[t=" + t.get_str() + "]";
    try {
      const Enclosure v = phi.eval(t);
      const bool pass = v.hi() < limit;
      const std::string detail = pass ? "Phi(t) < t^-n"
                                      : (v.lo() >= limit ? "Phi(t) >= t^-n"
                                                         : "enclosure undecided");
      report.decay.push_back(Check{name, pass, detail});
    } catch (const Error& e) {
      report.decay.push_back(Check{name, false, e.what()});
    }
  }
  bool first = true;
  for (int j = 1; j <= 6; ++j) {
    std::optional<Rational> worst;
    for (const Integer& t : samples) {
      Integer step;
      mpz_cdiv_q_2exp(step.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(j));
      const Integer moved = t + step;
      try {
        const Enclosure ratio = phi.eval(moved) / phi.eval(t);
        if (!worst || ratio.lo() < *worst) worst = ratio.lo();
      } catch (const Error&) {
        continue;
      }
    }
    const Rational value = worst.value_or(Rational(0));
    report.min_ratio_by_j.push_back(value);
    if (first || value < report.min_ratio) report.min_ratio = value;
    first = false;
  }
  return report;
}

}  // namespace dspec
