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

#include "dspec/certificates.hpp"

#include <algorithm>
#include <string>

#include "dspec/errors.hpp"

namespace dspec {
namespace {

const Integer& block_term(const Sequence& seq, int k, int i) {
  return seq.term(static_cast<long>(seq.n()) * k + i);
}

std::string tag(const char* name, const char* var, int value) {
  return std::string(name) + "[" + var + "=" + std::to_string(value) + "]";
}

// Short human-readable rendering for possibly huge integers.
std::string show(const Integer& x) {
  const std::size_t digits = mpz_sizeinbase(x.get_mpz_t(), 10);
  if (digits <= 24) return x.get_str();
  return "~2^" + std::to_string(mpz_sizeinbase(x.get_mpz_t(), 2) - 1);
}

std::string compare_detail(const Integer& lhs, const char* op, const Integer& rhs) {
  return show(lhs) + " " + op + " " + show(rhs);
}

Check make_check(std::string name, bool pass, std::string detail) {
  return Check{std::move(name), pass, std::move(detail)};
}

}  // namespace

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

ReducednessCert verify_reducedness(const Sequence& seq, int i, int k) {
  const int n = seq.n();
  if (i < 1 || i > n || k < 0 || k > seq.depth()) {
    throw Error(ErrorKind::Range, "reducedness needs 1 <= i <= n and 0 <= k <= K");
  }
  const Rational s = partial_sum(seq, i, k);
  ReducednessCert cert;
  cert.i = i;
  cert.k = k;
  cert.numerator = s.num();
  cert.denominator = s.den();
  const std::string where =
      "S_{" + std::to_string(i) + "," + std::to_string(k) + "}";
  if (cert.denominator != block_term(seq, k, i)) {
    throw Error(ErrorKind::ConstructionIntegrity,
                where + " reduces to denominator " + show(cert.denominator) +
                    " instead of a_{nk+i} = " + show(block_term(seq, k, i)));
  }
  if (k == 0) return cert;

  const long m = seq.params.schedule.at(k);
  if (i < n) {
    const Integer& v = block_term(seq, k - 1, i);
    const Integer& top = block_term(seq, k, 0);
    if (!mpz_divisible_p(top.get_mpz_t(), v.get_mpz_t())) {
      throw Error(ErrorKind::ConstructionIntegrity, where + ": G is not an integer");
    }
    cert.G = top / v;
    if (ipow(v * *cert.G, static_cast<unsigned long>(i * m)) != block_term(seq, k, i)) {
      throw Error(ErrorKind::ConstructionIntegrity,
                  where + ": a_{nk+i} != (a_{n(k-1)+i} G)^(i M_k)");
    }
    if (seq.variant == Variant::TargetConstant && k >= 2 && seq.params.c) {
      const Integer& lead = block_term(seq, k - 1, 1);
      const Integer closed = ipow(lead, static_cast<unsigned long>(n - 1 - i)) *
                             ceil(Rational(lead) / *seq.params.c);
      if (closed != *cert.G) {
        throw Error(ErrorKind::ConstructionIntegrity, where + ": G differs from closed form");
      }
    }
  } else {
    const Integer& last = block_term(seq, k, n);
    const Integer& penultimate = block_term(seq, k, n - 1);
    if (!mpz_divisible_p(last.get_mpz_t(), penultimate.get_mpz_t())) {
      throw Error(ErrorKind::ConstructionIntegrity, where + ": H is not an integer");
    }
    cert.H = last / penultimate;
    const Integer& v = block_term(seq, k, 0);
    if (*cert.H * ipow(v, static_cast<unsigned long>(m * (n - 1))) != last) {
      throw Error(ErrorKind::ConstructionIntegrity,
                  where + ": a_{n(k+1)} != H v^(M_k (n-1))");
    }
    if (seq.variant == Variant::TargetConstant && seq.params.c &&
        *cert.H != ceil(Rational(block_term(seq, k, 1)) / *seq.params.c)) {
      throw Error(ErrorKind::ConstructionIntegrity, where + ": H != ceil(a_{nk+1}/c)");
    }
  }
  return cert;
}

LowerBoundCert lower_bound_certificate(const Sequence& seq, int k) {
  const int n = seq.n();
  if (k < 1 || k > max_eval_depth(seq)) {
    throw Error(ErrorKind::Depth, "lower-bound certificate at k = " + std::to_string(k) +
                                      " needs 1 <= k <= K-1; rebuild with depth >= " +
                                      std::to_string(k + 1));
  }
  LowerBoundCert cert;
  cert.k = k;
  const Integer& leading = block_term(seq, k, 1);
  cert.Q = leading - 1;

  for (int i = 1; i <= n; ++i) {
    try {
      verify_reducedness(seq, i, k);
      cert.preconditions.push_back(make_check(tag("reduced", "i", i), true,
                                              "denominator equals a_{nk+i}"));
    } catch (const Error& e) {
      cert.preconditions.push_back(make_check(tag("reduced", "i", i), false, e.what()));
    }
  }
  const long top = static_cast<long>(n) * (k + 1) + 1;
  long broken = 0;
  for (long i = 1; i < top && broken == 0; ++i) {
    if (!mpz_divisible_p(seq.term(i + 1).get_mpz_t(), seq.term(i).get_mpz_t())) broken = i;
  }
  cert.preconditions.push_back(make_check(
      "divisibility", broken == 0,
      broken == 0 ? "a_i | a_{i+1} for i < " + std::to_string(top)
                  : "a_" + std::to_string(broken) + " does not divide a_" +
                        std::to_string(broken + 1)));
  cert.preconditions.push_back(
      make_check("height_below_leading", cert.Q < leading, "Q = a_{nk+1} - 1"));
  for (int i = 2; i <= n; ++i) {
    const Integer lhs = leading * block_term(seq, k, i - 1);
    const Integer& rhs = block_term(seq, k, i);
    cert.preconditions.push_back(make_check(tag("height_chain", "i", i), lhs <= rhs,
                                            "a_{nk+1} a_{nk+i-1} " +
                                                compare_detail(lhs, "<=", rhs)));
  }

  cert.main_term = Rational::make(1, block_term(seq, k + 1, 0));
  cert.tail_bound = Rational::make(Integer(2 * n) * cert.Q, block_term(seq, k + 1, 1));
  cert.lower = cert.main_term - cert.tail_bound;
  cert.preconditions.push_back(
      make_check("lower_positive", cert.lower.sign() > 0, "main term exceeds tail bound"));

  for (const Check& c : cert.preconditions) {
    if (!c.pass) {
      throw Error(ErrorKind::CertificateRefused,
                  "block k = " + std::to_string(k) + ": check " + c.name + " failed (" +
                      c.detail + ")");
    }
  }
  return cert;
}

ScheduleReport check_schedule(const Sequence& seq) {
  ScheduleReport report;
  auto& out = report.checks;
  const int n = seq.n();
  const int K = seq.depth();

  const auto violations = sequence_violations(seq);
  {
    std::string detail = violations.empty() ? "all structural invariants hold" : "";
    for (std::size_t i = 0; i < violations.size() && i < 3; ++i) {
      detail += (i ? "; " : "") + violations[i];
    }
    out.push_back(make_check("sequence_invariants", violations.empty(), detail));
  }

  for (int k = 1; k <= K; ++k) {
    long m = 0;
    std::string detail;
    try {
      m = seq.params.schedule.at(k);
      detail = "M_" + std::to_string(k) + " = " + std::to_string(m);
    } catch (const Error& e) {
      detail = e.what();
    }
    out.push_back(make_check(tag("m_at_least_2", "k", k), m >= 2, detail));
  }

  for (int k = 0; k <= K; ++k) {
    long broken = 0;
    const long first = static_cast<long>(n) * k + 1;
    const long last = std::min<long>(static_cast<long>(n) * (k + 1), seq.length() - 1);
    for (long i = first; i <= last && broken == 0; ++i) {
      if (!mpz_divisible_p(seq.term(i + 1).get_mpz_t(), seq.term(i).get_mpz_t())) broken = i;
    }
    out.push_back(make_check(tag("divisibility", "k", k), broken == 0,
                             broken == 0 ? "a_i | a_{i+1} across the block"
                                         : "a_" + std::to_string(broken) +
                                               " does not divide a_" +
                                               std::to_string(broken + 1)));
  }

  // (2 a_{n(k-1)})^n < a_{nk}^(n-1)
  for (int k = 1; k <= K; ++k) {
    const Integer lhs = ipow(2 * block_term(seq, k - 1, 0), static_cast<unsigned long>(n));
    const Integer rhs = ipow(block_term(seq, k, 0), static_cast<unsigned long>(n - 1));
    out.push_back(make_check(tag("case2_growth", "k", k), lhs < rhs,
                             "(2 a_{n(k-1)})^n " + compare_detail(lhs, "<", rhs)));
  }

  // 16 a_{n(e-1)}^2 <= a_{ne}
  for (int e = 1; e <= K; ++e) {
    const Integer& prev = block_term(seq, e - 1, 0);
    const Integer lhs = 16 * prev * prev;
    const Integer& rhs = block_term(seq, e, 0);
    out.push_back(make_check(tag("case3_growth", "e", e), lhs <= rhs,
                             "16 a_{n(e-1)}^2 " + compare_detail(lhs, "<=", rhs)));
  }

  for (int k = 1; k <= K; ++k) {
    try {
      compute_N(seq, k, 0);
      out.push_back(make_check(tag("n_monotone", "k", k), true,
                               "N_0 > ... > N_{k-1}, all integral"));
    } catch (const Error& e) {
      out.push_back(make_check(tag("n_monotone", "k", k), false, e.what()));
    }
  }

  // 2 a_{nk+1} / a_{n(k+1)+1} < c a_{n(k+1)}^{-n}  (Phi(a_{n(k+1)}) for the
  // phi-driven variant).
  for (int k = 1; k <= K - 1; ++k) {
    const Integer& leading = block_term(seq, k, 1);
    const Integer& next_top = block_term(seq, k + 1, 0);
    const Integer& next_leading = block_term(seq, k + 1, 1);
    const Rational lhs = Rational::make(2 * leading, next_leading);
    Rational rhs;
    bool available = true;
    try {
      if (seq.variant == Variant::TargetConstant && seq.params.c) {
        rhs = *seq.params.c / Rational(ipow(next_top, static_cast<unsigned long>(n)));
      } else if (seq.phi) {
        rhs = seq.phi->eval(next_top).lo();
      } else {
        available = false;
      }
    } catch (const Error&) {
      available = false;
    }
    const bool pass = available && lhs < rhs;
    std::string detail = "available";
    if (available) {
      // Compare in log2 scale for readability.
      detail = "lhs ~2^" +
               std::to_string(static_cast<long>(mpz_sizeinbase(lhs.num().get_mpz_t(), 2)) -
                              static_cast<long>(mpz_sizeinbase(lhs.den().get_mpz_t(), 2))) +
               ", rhs ~2^" +
               std::to_string(static_cast<long>(mpz_sizeinbase(rhs.num().get_mpz_t(), 2)) -
                              static_cast<long>(mpz_sizeinbase(rhs.den().get_mpz_t(), 2)));
    } else {
      detail = "target bound unavailable";
    }
    out.push_back(make_check(tag("case1_tail", "k", k), pass, detail));
  }
  return report;
}

IntegrityRecord integrality_checks(const Sequence& seq, const WitnessForm& w) {
  const int n = seq.n();
  const int k = w.tag.k;
  IntegrityRecord rec;
  auto& out = rec.checks;
  const Rational b0(w.b[0]);
  const Rational b1(w.b[1]);

  switch (w.tag.kase) {
    case ProofCase::Case1: {
      const Rational closed = -(b1 * partial_sum(seq, 1, k));
      out.push_back(make_check("b0_closed_form", closed.is_integer() && closed == b0,
                               "b_0 = -b_1 S_{1,k}"));
      break;
    }
    case ProofCase::Case2: {
      const Rational closed = -(Rational(w.b[n]) * partial_sum(seq, n, k - 1));
      out.push_back(make_check("b0_closed_form", closed.is_integer() && closed == b0,
                               "b_0 = -b_n S_{n,k-1}"));
      break;
    }
    case ProofCase::Case3: {
      const int e = *w.tag.e;
      const Integer& a_ne = block_term(seq, e, 0);
      const Integer& a_nk = block_term(seq, k, 0);
      const Integer& leading = block_term(seq, k, 1);
      const Integer& prev_leading = block_term(seq, k - 1, 1);

      const Rational head = b1 * partial_sum(seq, 1, k - 1);
      out.push_back(make_check("b1_S1_integer", head.is_integer(),
                               "b_1 S_{1,k-1} = " + head.str()));

      Rational u(0);
      for (int h = e + 1; h <= k; ++h) u += Rational::make(a_nk, block_term(seq, h, 0));
      out.push_back(make_check("U_integer", u.is_integer(), "U_k = " + u.str()));
      if (u.is_integer()) rec.U = u.num();
      // S_{1,k-1} = s / a_{n(k-1)+1}; the numerator s rides along with U_k.
      const Rational s = partial_sum(seq, 1, k - 1) * Rational(prev_leading);
      const Rational via_u =
          u * s * Rational(a_ne) * Rational::make(leading, prev_leading * a_nk);
      out.push_back(make_check("U_decomposition", s.is_integer() && via_u == head,
                               "b_1 S_{1,k-1} = U_k s a_{ne} a_{nk+1} / (a_{n(k-1)+1} a_{nk}), "
                               "s = a_{n(k-1)+1} S_{1,k-1}"));

      const Integer lead_div = prev_leading * a_nk;
      out.push_back(make_check("leading_divisibility",
                               mpz_divisible_p(leading.get_mpz_t(), lead_div.get_mpz_t()) != 0,
                               "a_{n(k-1)+1} a_{nk} | a_{nk+1}"));

      const Rational increment = b1 * (partial_sum(seq, 1, k) - partial_sum(seq, 1, k - 1));
      out.push_back(make_check("b1_increment", increment == Rational::make(w.b[1], leading),
                               "b_1 (S_{1,k} - S_{1,k-1}) = N_e / a_{nk+1}"));

      const Rational adjusted =
          Rational::make(w.b[1], leading) -
          Rational(a_ne) * (partial_sum(seq, n, k) - Rational::make(1, block_term(seq, k + 1, 0)));
      Rational expected(0);
      for (int h = 1; h <= e; ++h) expected -= Rational::make(a_ne, block_term(seq, h, 0));
      rec.identity_value = adjusted;
      out.push_back(make_check("adjusted_identity",
                               adjusted.is_integer() && adjusted == expected,
                               "value " + adjusted.str()));

      out.push_back(make_check("b0_closed_form", b0 == -(head + adjusted),
                               "b_0 = -(b_1 S_{1,k-1} + identity value)"));
      break;
    }
  }
  for (const Check& c : out) {
    if (!c.pass) {
      throw Error(ErrorKind::ConstructionIntegrity,
                  "integrality check " + c.name + " failed for Q = " + w.Q.get_str() +
                      " (" + c.detail + ")");
    }
  }
  return rec;
}

}  // namespace dspec
