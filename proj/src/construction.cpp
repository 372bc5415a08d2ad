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

#include "dspec/construction.hpp"

#include <algorithm>

#include "dspec/errors.hpp"

namespace dspec {
namespace {

Integer initial_term(int j) {
  Integer f = 8;
  for (int i = 2; i <= j; ++i) f *= i;
  return f;
}

void validate_params(const Params& p, bool needs_c) {
  if (p.n < 2) {
    throw Error(ErrorKind::InvalidArgument, "dimension n must be at least 2");
  }
  if (p.depth < 1) {
    throw Error(ErrorKind::InvalidArgument, "depth K must be at least 1");
  }
  if (needs_c) {
    if (!p.c) throw Error(ErrorKind::InvalidArgument, "target constant c is required");
    if (p.c->sign() <= 0 || *p.c >= Rational(1)) {
      throw Error(ErrorKind::InvalidArgument,
                  "c must lie strictly inside (0,1); the endpoints 0 and 1 are "
                  "attained by singular and by almost all vectors and are not "
                  "constructed here");
    }
  }
  for (int k = 1; k <= p.depth; ++k) {
    if (p.schedule.at(k) < 2) {
      throw Error(ErrorKind::InvalidArgument,
                  "schedule must satisfy M_k >= 2; M_" + std::to_string(k) + " = " +
                      std::to_string(p.schedule.at(k)));
    }
  }
}

// Exponentiations on corrupted input are refused beyond this many bits.
constexpr double kMaxPowerBits = 5.0e7;

bool power_too_large(const Integer& base, long exponent) {
  const double bits = static_cast<double>(mpz_sizeinbase(base.get_mpz_t(), 2));
  return exponent < 0 || bits * static_cast<double>(exponent) > kMaxPowerBits;
}

template <typename CloseBlock>
Sequence build(const Params& p, Variant variant, CloseBlock close_block) {
  const int n = p.n;
  Sequence seq;
  seq.params = p;
  seq.variant = variant;
  seq.a.reserve(static_cast<std::size_t>(n) * (p.depth + 1));
  for (int j = 1; j <= n; ++j) seq.a.push_back(initial_term(j));
  for (int k = 1; k <= p.depth; ++k) {
    const Integer leading =
        ipow(seq.a.back(), static_cast<unsigned long>(p.schedule.at(k)));
    for (int i = 1; i <= n - 1; ++i) {
      seq.a.push_back(ipow(leading, static_cast<unsigned long>(i)));
    }
    const Integer penultimate = seq.a.back();
    seq.a.push_back(penultimate * close_block(leading, penultimate, k));
  }
  return seq;
}

void require_valid(const Sequence& seq) {
  const auto bad = sequence_violations(seq);
  if (!bad.empty()) {
    throw Error(ErrorKind::ConstructionIntegrity, "built sequence fails: " + bad.front());
  }
}

}  // namespace

Schedule Schedule::constant(long m) {
  Schedule s;
  s.kind = Kind::Constant;
  s.m = m;
  return s;
}

Schedule Schedule::ramp(long m0) {
  Schedule s;
  s.kind = Kind::Ramp;
  s.m0 = m0;
  return s;
}

Schedule Schedule::list(std::vector<long> values) {
  Schedule s;
  s.kind = Kind::List;
  s.values = std::move(values);
  return s;
}

Schedule Schedule::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument,
                "schedule must be const:m, ramp:m0 or list:m1,m2,...");
  }
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  auto to_long = [](std::string_view s) {
    const Integer v = parse_integer(s);
    if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "schedule value too large");
    return v.get_si();
  };
  if (kind == "const") return constant(to_long(rest));
  if (kind == "ramp") return ramp(to_long(rest));
  if (kind == "list") {
    std::vector<long> values;
    std::size_t start = 0;
    for (;;) {
      const auto comma = rest.find(',', start);
      values.push_back(to_long(rest.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return list(std::move(values));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown schedule kind '" + std::string(kind) + "'");
}

std::string Schedule::describe() const {
  switch (kind) {
    case Kind::Constant: return "const:" + std::to_string(m);
    case Kind::Ramp: return "ramp:" + std::to_string(m0);
    case Kind::List: {
      std::string out = "list:";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
      }
      return out;
    }
  }
  return {};
}

long Schedule::at(int k) const {
  if (k < 1) throw Error(ErrorKind::Range, "schedule index k must be >= 1");
  switch (kind) {
    case Kind::Constant: return m;
    case Kind::Ramp: return m0 + k;
    case Kind::List:
      if (static_cast<std::size_t>(k) > values.size()) {
        throw Error(ErrorKind::Range, "schedule list has no entry for k = " +
                                          std::to_string(k));
      }
      return values[static_cast<std::size_t>(k) - 1];
  }
  return 0;
}

const Integer& Sequence::term(long i) const {
  static const Integer kOne = 1;
  if (i == 0) return kOne;
  if (i < 0 || i > length()) {
    throw Error(ErrorKind::Depth, "term a_" + std::to_string(i) +
                                      " is outside the built range (length " +
                                      std::to_string(length()) + ")");
  }
  return a[static_cast<std::size_t>(i) - 1];
}

Sequence build_sequence(const Params& params) {
  validate_params(params, /*needs_c=*/true);
  const Rational inv_c = Rational(1) / *params.c;
  Sequence seq = build(params, Variant::TargetConstant,
                       [&](const Integer& leading, const Integer&, int) {
                         return ceil(inv_c * Rational(leading));
                       });
  require_valid(seq);
  return seq;
}

Integer phi_block_multiplier(const Integer& leading, const Integer& penultimate,
                             int n, const PhiFamily& phi, int k) {
  const Rational limit = Rational(1) / Rational(ipow(leading, n));
  const unsigned long size = mpz_sizeinbase(leading.get_mpz_t(), 2);
  unsigned precision = static_cast<unsigned>(
      64 + size * (static_cast<unsigned long>(ceil(phi.exponent).get_ui()) + n));
  for (int attempt = 0; attempt < 4; ++attempt, precision *= 2) {
    const Enclosure value = phi.eval(leading, precision);
    if (value.lo() >= limit) {
      throw Error(ErrorKind::PreconditionViolation,
                  "Phi(t) >= t^-n at t = a_{nk+1} for block k = " + std::to_string(k));
    }
    if (value.hi() >= limit) continue;
    // z > 1 / (penultimate * Phi); least such integer is floor(.) + 1.
    const Rational p(penultimate);
    const Integer z_lo = floor(Rational(1) / (p * value.hi())) + 1;
    const Integer z_hi = floor(Rational(1) / (p * value.lo())) + 1;
    if (z_lo == z_hi) return z_lo;
  }
  throw Error(ErrorKind::IndecisiveEnclosure,
              "Phi enclosure too wide to fix the block multiplier at k = " +
                  std::to_string(k));
}

Sequence build_sequence_phi(const Params& params, const PhiFamily& phi) {
  validate_params(params, /*needs_c=*/false);
  Params p = params;
  p.c.reset();
  Sequence seq = build(p, Variant::PhiDriven,
                       [&](const Integer& leading, const Integer& penultimate, int k) {
                         return phi_block_multiplier(leading, penultimate, p.n, phi, k);
                       });
  seq.phi = phi;
  require_valid(seq);
  return seq;
}

std::vector<std::string> sequence_violations(const Sequence& seq) {
  std::vector<std::string> bad;
  const int n = seq.n();
  if (n < 2) {
    bad.push_back("dimension n < 2");
    return bad;
  }
  if (seq.length() < 2L * n || seq.length() % n != 0) {
    bad.push_back("length " + std::to_string(seq.length()) +
                  " is not n*(K+1) with K >= 1");
    return bad;
  }
  if (seq.variant == Variant::TargetConstant) {
    if (!seq.params.c || seq.params.c->sign() <= 0 || *seq.params.c >= Rational(1)) {
      bad.push_back("c missing or outside (0,1)");
    }
  } else if (!seq.phi) {
    bad.push_back("phi-driven sequence without a phi descriptor");
  }
  for (long i = 1; i <= seq.length(); ++i) {
    if (seq.term(i) <= 0) {
      bad.push_back("a_" + std::to_string(i) + " is not positive");
      return bad;
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (seq.term(j) != initial_term(j)) {
      bad.push_back("a_" + std::to_string(j) + " != 8*" + std::to_string(j) + "!");
    }
  }
  for (long i = 1; i < seq.length(); ++i) {
    const Integer& cur = seq.term(i);
    const Integer& next = seq.term(i + 1);
    if (!mpz_divisible_p(next.get_mpz_t(), cur.get_mpz_t())) {
      bad.push_back("a_" + std::to_string(i) + " does not divide a_" + std::to_string(i + 1));
    }
    if (next < 2 * cur) {
      bad.push_back("a_" + std::to_string(i + 1) + " < 2*a_" + std::to_string(i));
    }
  }
  const int depth = seq.depth();
  for (int k = 1; k <= depth; ++k) {
    const long base = static_cast<long>(n) * k;
    const std::string blk = " (block k=" + std::to_string(k) + ")";
    long m = 0;
    try {
      m = seq.params.schedule.at(k);
    } catch (const Error& e) {
      bad.push_back(std::string(e.what()) + blk);
      continue;
    }
    if (m < 2) bad.push_back("M_" + std::to_string(k) + " < 2" + blk);
    const Integer& prev = seq.term(base);
    const Integer& leading = seq.term(base + 1);
    if (power_too_large(prev, m)) {
      bad.push_back("M_" + std::to_string(k) + " out of range" + blk);
    } else if (leading != ipow(prev, static_cast<unsigned long>(m))) {
      bad.push_back("a_" + std::to_string(base + 1) + " != a_" + std::to_string(base) +
                    "^M_" + std::to_string(k) + blk);
    }
    for (int i = 2; i <= n - 1; ++i) {
      if (power_too_large(leading, i) ||
          seq.term(base + i) != ipow(leading, static_cast<unsigned long>(i))) {
        bad.push_back("a_" + std::to_string(base + i) + " != a_" +
                      std::to_string(base + 1) + "^" + std::to_string(i) + blk);
      }
    }
    const Integer& penultimate = seq.term(base + n - 1);
    const Integer& last = seq.term(base + n);
    if (seq.variant == Variant::TargetConstant && seq.params.c && seq.params.c->sign() > 0) {
      const Integer mult = ceil(Rational(leading) / *seq.params.c);
      if (last != mult * penultimate) {
        bad.push_back("a_" + std::to_string(base + n) +
                      " != ceil(a_{nk+1}/c) * a_{nk+n-1}" + blk);
      }
    } else if (seq.variant == Variant::PhiDriven && seq.phi) {
      try {
        const Integer mult = phi_block_multiplier(leading, penultimate, n, *seq.phi, k);
        if (last != mult * penultimate) {
          bad.push_back("a_" + std::to_string(base + n) +
                        " != L*_k * a_{nk+n-1}" + blk);
        }
      } catch (const Error& e) {
        bad.push_back(std::string(e.what()) + blk);
      }
    }
    if (!power_too_large(leading, n) && last <= ipow(leading, static_cast<unsigned long>(n))) {
      bad.push_back("a_" + std::to_string(base + n) + " <= a_{nk+1}^n" + blk);
    }
  }
  return bad;
}

Rational partial_sum(const Sequence& seq, int j, int k) {
  const int n = seq.n();
  if (j < 0 || j > n) throw Error(ErrorKind::Range, "coordinate index j out of range");
  if (k < 0 || k > seq.depth()) {
    throw Error(ErrorKind::Range, "partial sum level k = " + std::to_string(k) +
                                      " outside [0, " + std::to_string(seq.depth()) + "]");
  }
  if (j == 0) return Rational(1);
  Rational sum(0);
  for (int h = 0; h <= k; ++h) {
    sum += Rational::make(1, seq.term(static_cast<long>(n) * h + j));
  }
  return sum;
}

TruncVector partial_sums(const Sequence& seq, int k) {
  TruncVector out;
  out.k = k;
  for (int j = 0; j <= seq.n(); ++j) out.S.push_back(partial_sum(seq, j, k));
  return out;
}

int max_eval_depth(const Sequence& seq) { return seq.depth() - 1; }

Enclosure tail_enclosure(const Sequence& seq, int j, int k) {
  if (j < 0 || j > seq.n()) throw Error(ErrorKind::Range, "coordinate index j out of range");
  if (k < 0) throw Error(ErrorKind::Range, "truncation level k must be >= 0");
  if (j == 0) return Enclosure(Rational(0));
  if (k > max_eval_depth(seq)) {
    throw Error(ErrorKind::Depth,
                "tail R_{j,k} at k = " + std::to_string(k) +
                    " needs more terms; rebuild with depth >= " + std::to_string(k + 1));
  }
  const Integer& first = seq.term(static_cast<long>(seq.n()) * (k + 1) + j);
  return Enclosure(Rational::make(1, first), Rational::make(2, first));
}

Enclosure coordinate_enclosure(const Sequence& seq, int j, int k) {
  return tail_enclosure(seq, j, k) + partial_sum(seq, j, k);
}

}  // namespace dspec
