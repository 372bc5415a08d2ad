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

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: dspec_acceptance <path-to-dspec-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "dspec/certificates.hpp"
#include "dspec/oracle.hpp"
#include "dspec/serialize.hpp"
#include "dspec/spectrum.hpp"
#include "dspec/witnesses.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace dspec;
using testing::golden;
using testing::pow2;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Tolerances and limits, pinned.
const Rational kHalf = Rational::make(1, 2);
const Rational kUpperSlack = Rational::make(10001, 10000);  // 1 + 1e-4
constexpr double kLimitGolden = 1.0;
constexpr double kLimitSchedule = 5.0;
constexpr double kLimitWitness = 30.0;
constexpr double kLimitSandwich = 10.0;
constexpr double kLimitConvergence = 5.0;

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body,
            double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(limit_seconds) + " s limit";
  }
  if (!o.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.3f s", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " ("
            << time << ") " << o.detail << std::endl;
}

void note(const std::string& text) { std::cout << "      info: " << text << std::endl; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o;
  std::ostringstream e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

std::string in_range(const Enclosure& e, int digits = 12) {
  return "[" + to_scientific(e.lo(), digits, Rounding::Down) + ", " +
         to_scientific(e.hi(), digits, Rounding::Up) + "]";
}

std::vector<Integer> log_uniform(const Integer& lo, const Integer& hi, int count,
                                 unsigned long seed) {
  std::mt19937_64 rng(seed);
  gmp_randclass g(gmp_randinit_default);
  g.seed(seed);
  const double lb = static_cast<double>(mpz_sizeinbase(lo.get_mpz_t(), 2));
  const double hb = static_cast<double>(mpz_sizeinbase(hi.get_mpz_t(), 2));
  std::uniform_real_distribution<double> bits(lb - 1, hb);
  std::vector<Integer> out;
  while (static_cast<int>(out.size()) < count) {
    const auto b = static_cast<unsigned long>(bits(rng));
    const Integer q = pow2(b) + g.get_z_bits(b);
    if (q >= lo && q < hi) out.push_back(q);
  }
  return out;
}

struct WitnessTally {
  int samples = 0;
  int over_slack = 0;
  int strict_broken = 0;
  Integer first_bad;
};

WitnessTally witness_tally(const Sequence& s, const std::vector<Integer>& qs) {
  WitnessTally t;
  for (const Integer& Q : qs) {
    const WitnessForm w = build_witness(s, Q);
    const Rational bound = kHalf / Rational(Q * Q);
    const bool slack_ok = w.value.hi() <= bound * kUpperSlack;
    const bool strict_ok = w.tag.kase == ProofCase::Case3 || w.value.hi() < bound;
    ++t.samples;
    if (!slack_ok) ++t.over_slack;
    if (!strict_ok) ++t.strict_broken;
    if ((!slack_ok || !strict_ok) && t.first_bad == 0) t.first_bad = Q;
  }
  return t;
}

struct RandomTarget {
  std::vector<std::pair<long, long>> xi;
  long Q = 1;
};

std::vector<RandomTarget> random_targets() {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long> den(1, 100);
  std::uniform_int_distribution<long> height(1, 20);
  std::vector<RandomTarget> out;
  for (int i = 0; i < 50; ++i) {
    RandomTarget t;
    t.Q = height(rng);
    for (int j = 0; j < 2; ++j) {
      // The first ten targets keep a denominator within reach of Q, so the
      // point is annihilated exactly.
      const long d = i < 10 && j == 0 ? std::uniform_int_distribution<long>(1, t.Q)(rng) : den(rng);
      const long p = std::uniform_int_distribution<long>(-d, d)(rng);
      t.xi.emplace_back(p, d);
    }
    out.push_back(t);
  }
  return out;
}

Target as_target(const RandomTarget& t) {
  std::vector<Rational> p;
  for (const auto& [a, b] : t.xi) p.push_back(Rational::make(a, b));
  return rational_target(p);
}

std::string criterion5_json(const Sequence& s, int threads) {
  const PsiResult r = psi_star_exhaustive(sequence_target(s), 255, {100'000'000, threads});
  return psi_to_json(r).dump();
}

std::string criterion9_json(const std::vector<RandomTarget>& targets, int threads) {
  Json all = Json::array();
  for (const RandomTarget& t : targets) {
    all.push_back(psi_to_json(psi_star_exhaustive(as_target(t), t.Q, {100'000'000, threads})));
  }
  return all.dump();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: dspec_acceptance <path-to-dspec>\n";
    return 2;
  }
  const std::string tool = argv[1];
  const fs::path dir = fs::temp_directory_path() / "dspec_acceptance";
  fs::create_directories(dir);

  report(1, "golden sequence via the command line", [&] {
    const fs::path out = dir / "golden.json";
    const std::string cmd = "\"" + tool +
                            "\" construct --n 2 --c 1/2 --schedule const:2 --depth 3 --out \"" +
                            out.string() + "\"";
    if (std::system(cmd.c_str()) != 0) return Outcome{false, "command failed"};
    const Json j = Json::parse(slurp(out));
    const std::vector<Integer> want{8, 16, 256, 131072, pow2(34), pow2(69), pow2(138), pow2(277)};
    std::vector<Integer> got;
    for (const auto& v : j.at("a")) got.push_back(parse_integer(v.get<std::string>()));
    return Outcome{got == want, "a has " + std::to_string(got.size()) + " terms"};
  }, kLimitGolden);

  const std::vector<int> dims{2, 3};
  const std::vector<Rational> constants{Rational::make(1, 2), Rational::make(1, 3),
                                        Rational::make(9, 10)};

  report(2, "verify passes for n in {2,3}, c in {1/2,1/3,9/10}, M=2, depth 3", [&] {
    std::string failed;
    int combos = 0;
    for (int n : dims) {
      for (const Rational& c : constants) {
        const fs::path p = dir / ("verify_" + std::to_string(n) + "_" +
                                  c.num().get_str() + "_" + c.den().get_str() + ".json");
        save_sequence(golden(3, n, c), p);
        std::string out;
        const int code = run_cli({"verify", "--seq", p.string()}, &out);
        ++combos;
        if (code != 0) {
          std::string names;
          const Json parsed = Json::parse(out);
          for (const auto& ch : parsed["checks"]) {
            if (!ch["pass"].get<bool>()) names += (names.empty() ? "" : ",") + ch["name"].get<std::string>();
          }
          failed += " (n=" + std::to_string(n) + ",c=" + c.str() + ": " + names + ")";
        }
      }
    }
    return Outcome{failed.empty(), std::to_string(combos) + " combinations" +
                                       (failed.empty() ? "" : "; failing:" + failed)};
  }, kLimitSchedule);
  {
    bool all = true;
    for (int n : dims) {
      for (const Rational& c : constants) {
        all = all && check_schedule(golden(3, n, c, Schedule::constant(n + 1))).pass();
      }
    }
    note(std::string("same six combinations with M = n+1: schedule report ") +
         (all ? "passes" : "FAILS"));
  }

  report(3, "S_{i,k} reduced with denominator a_{nk+i}, i<=n, k<=2", [&] {
    int count = 0;
    for (int n : dims) {
      for (const Rational& c : constants) {
        const Sequence s = golden(3, n, c);
        for (int k = 0; k <= 2; ++k) {
          for (int i = 1; i <= n; ++i) {
            const ReducednessCert cert = verify_reducedness(s, i, k);
            if (cert.denominator != s.term(static_cast<long>(n) * k + i) ||
                gcd(cert.numerator, cert.denominator) != 1) {
              return Outcome{false, "fails at n=" + std::to_string(n) + " c=" + c.str()};
            }
            ++count;
          }
        }
      }
    }
    return Outcome{true, std::to_string(count) + " certificates"};
  });

  report(4, "witness upper bound on 200 log-uniform Q in [a_2, a_5), n=2, c=1/2", [&] {
    const Sequence s = golden(3);
    const WitnessTally t = witness_tally(s, log_uniform(s.term(2), s.term(5), 200, 4));
    const bool ok = t.over_slack == 0 && t.strict_broken == 0;
    return Outcome{ok, std::to_string(t.samples) + " samples, " + std::to_string(t.over_slack) +
                           " above c Q^-2 (1+1e-4), " + std::to_string(t.strict_broken) +
                           " Case 1/2 not strictly below" +
                           (ok ? "" : "; first offender Q = " + t.first_bad.get_str())};
  }, kLimitWitness);
  {
    const Sequence s3 = golden(3, 2, kHalf, Schedule::constant(3));
    const WitnessTally t = witness_tally(s3, log_uniform(s3.term(2), s3.term(5), 200, 4));
    note("same sampling with M = 3: " + std::to_string(t.over_slack + t.strict_broken) +
         " violations in " + std::to_string(t.samples) + " samples");
  }

  const Sequence s3 = golden(3);
  report(5, "exhaustive psi*(255) inside [certificate, witness], normalised in [0.49, 0.497]",
         [&] {
    const PsiResult bounds = psi_star_enclosure(s3, Integer(255));
    const PsiResult four = psi_star_exhaustive(sequence_target(s3), 255, {100'000'000, 4});
    const PsiResult one = psi_star_exhaustive(sequence_target(s3), 255, {100'000'000, 1});
    const bool inside = bounds.value.contains(four.value);
    const bool normal = Enclosure(Rational::make(49, 100), Rational::make(497, 1000))
                            .contains(four.normalized);
    const bool same = psi_to_json(four).dump() == psi_to_json(one).dump();
    return Outcome{inside && normal && same && !four.ambiguous,
                   "normalised " + in_range(four.normalized) + " within " +
                       in_range(bounds.normalized) + ", " + std::to_string(four.candidates) +
                       " forms" + (same ? ", 1 and 4 workers agree" : ", WORKERS DISAGREE")};
  }, kLimitSandwich);

  report(6, "certificate+witness enclosures at k=2,3 converge to 1/2", [&] {
    const Sequence s = golden(4);
    const PsiResult k2 = psi_star_enclosure(s, s.term(5) - 1);
    const PsiResult k3 = psi_star_enclosure(s, s.term(7) - 1);
    const Rational eps = Rational::make(1, 100000000);
    const bool ok2 = Enclosure(Rational::make(4999, 10000), Rational::make(50001, 100000))
                         .contains(k2.normalized);
    const bool ok3 = Enclosure(kHalf - eps, kHalf + eps).contains(k3.normalized);
    return Outcome{ok2 && ok3 && k2.method == PsiMethod::WitnessPlusCert &&
                       k3.method == PsiMethod::WitnessPlusCert,
                   "k=2 " + in_range(k2.normalized) + ", k=3 " + in_range(k3.normalized)};
  }, kLimitConvergence);

  report(7, "phi-driven ratios psi*/Phi at the critical heights", [&] {
    Params p;
    p.n = 2;
    p.schedule = Schedule::constant(2);
    p.depth = 3;
    const Sequence half = build_sequence_phi(p, PhiFamily::parse("power:1/2:2"));
    const Sequence cube = build_sequence_phi(p, PhiFamily::parse("power:1:3"));
    const auto rh = phi_ratio_scan(half, *half.phi, 1, 2);
    const auto rc = phi_ratio_scan(cube, *cube.phi, 2, 2);
    const bool ok =
        Enclosure(Rational::make(98, 100), Rational::make(1001, 1000)).contains(rh[0].ratio) &&
        Enclosure(Rational::make(9999, 10000), Rational::make(10001, 10000))
            .contains(rh[1].ratio) &&
        Enclosure(Rational::make(999, 1000), Rational::make(1001, 1000)).contains(rc[0].ratio);
    return Outcome{ok, "(1/2)t^-2: k=1 " + in_range(rh[0].ratio, 8) + ", k=2 " +
                           in_range(rh[1].ratio, 8) + "; t^-3: k=2 " + in_range(rc[0].ratio, 8)};
  });

  report(8, "Liouville: ramp schedule passes every N<=5, constant M=2 fails N=4", [&] {
    const Sequence ramp = golden(4, 2, kHalf, Schedule::ramp(1));
    const Sequence flat = golden(4);
    // Blocks whose Case 1 witness can be evaluated: k <= K-1.
    const int k_max = max_eval_depth(ramp);
    std::string where;
    bool ramp_ok = true;
    for (int N = 0; N <= 5; ++N) {
      int hit = 0;
      for (int k = 1; k <= k_max && hit == 0; ++k) {
        if (liouville_check(ramp, N, k)) hit = k;
      }
      ramp_ok = ramp_ok && hit != 0;
      where += (where.empty() ? "" : ",") + std::string("N=") + std::to_string(N) + "@k=" +
               (hit ? std::to_string(hit) : "none");
    }
    bool flat_fails = true;
    for (int k = 1; k <= max_eval_depth(flat); ++k) {
      flat_fails = flat_fails && !liouville_check(flat, 4, k);
    }
    return Outcome{ramp_ok && flat_fails,
                   where + "; M=2, N=4 " + (flat_fails ? "fails at every k" : "PASSES somewhere")};
  });

  const std::vector<RandomTarget> targets = random_targets();
  report(9, "optimised search equals naive enumeration on 50 random rational 2-vectors", [&] {
    int zeros = 0;
    for (const RandomTarget& t : targets) {
      const PsiResult fast = psi_star_exhaustive(as_target(t), t.Q, {100'000'000, 0});
      const auto naive = testing::naive_psi(t.xi, t.Q);
      if (!(fast.value == Enclosure(naive.value))) {
        return Outcome{false, "mismatch at (" + std::to_string(t.xi[0].first) + "/" +
                                  std::to_string(t.xi[0].second) + ", " +
                                  std::to_string(t.xi[1].first) + "/" +
                                  std::to_string(t.xi[1].second) + "), Q=" +
                                  std::to_string(t.Q)};
      }
      if (naive.value.sign() == 0) ++zeros;
    }
    return Outcome{zeros > 0, "50 targets agree, " + std::to_string(zeros) + " exact zeros"};
  });

  report(10, "criteria 5 and 9 byte-identical across 1, 2 and 8 workers", [&] {
    const std::string a5 = criterion5_json(s3, 1);
    const std::string a9 = criterion9_json(targets, 1);
    for (int threads : {2, 8}) {
      if (criterion5_json(s3, threads) != a5) {
        return Outcome{false, "criterion 5 differs at " + std::to_string(threads) + " workers"};
      }
      if (criterion9_json(targets, threads) != a9) {
        return Outcome{false, "criterion 9 differs at " + std::to_string(threads) + " workers"};
      }
    }
    return Outcome{true, std::to_string(a5.size() + a9.size()) + " bytes compared per run"};
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
