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

#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "dspec/certificates.hpp"
#include "dspec/construction.hpp"
#include "dspec/errors.hpp"
#include "dspec/oracle.hpp"
#include "dspec/serialize.hpp"
#include "dspec/spectrum.hpp"
#include "dspec/witnesses.hpp"

namespace dspec::cli {
namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::PreconditionViolation:
      return kUsageError;
    case ErrorKind::Range:
    case ErrorKind::Depth:
    case ErrorKind::IndecisiveEnclosure:
    case ErrorKind::BudgetExceeded:
      return kRefused;
    case ErrorKind::ConstructionIntegrity:
    case ErrorKind::CertificateRefused:
    case ErrorKind::VerificationFailure:
      return kVerificationFailure;
  }
  return kVerificationFailure;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  file << text;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) point.push_back(parse_rational(item));
  return point;
}

long to_search_height(const Integer& Q) {
  if (!Q.fits_slong_p()) throw Error(ErrorKind::BudgetExceeded, "Q too large for search");
  return Q.get_si();
}

Check guarded(const std::string& name, const auto& body) {
  try {
    return body();
  } catch (const Error& e) {
    return Check{name, false, e.what()};
  }
}

// Every certificate-style audit of a sequence file, in a fixed order.
std::vector<Check> audit(const Sequence& seq, std::uint64_t budget, int threads) {
  std::vector<Check> checks = check_schedule(seq).checks;
  const int n = seq.n();
  const int K = seq.depth();
  if (n < 2 || K < 1) return checks;

  for (int k = 0; k <= K; ++k) {
    for (int i = 1; i <= n; ++i) {
      const std::string name =
          "reduced[i=" + std::to_string(i) + ",k=" + std::to_string(k) + "]";
      checks.push_back(guarded(name, [&] {
        const ReducednessCert c = verify_reducedness(seq, i, k);
        return Check{name, true, c.numerator.get_str().size() < 40
                                     ? c.numerator.get_str() + "/" + c.denominator.get_str()
                                     : "denominator equals a_{nk+i}"};
      }));
    }
  }

  for (int k = 1; k <= K - 1; ++k) {
    const std::string name = "lower_bound[k=" + std::to_string(k) + "]";
    checks.push_back(guarded(name, [&] {
      const LowerBoundCert c = lower_bound_certificate(seq, k);
      return Check{name, true,
                   "normalised lower end " +
                       to_scientific(c.lower * Rational(ipow(c.Q, static_cast<unsigned long>(n))),
                                     8, Rounding::Down)};
    }));
  }

  // Integrality on witnesses sampled at the case boundaries of every block.
  for (int k = 1; k <= K - 1; ++k) {
    std::vector<Integer> heights;
    const long base = static_cast<long>(n) * k;
    heights.push_back(seq.term(base));
    heights.push_back(seq.term(base + 1) - 1);
    heights.push_back(seq.term(base + 1));
    for (int e = 0; e <= k - 1; ++e) {
      try {
        heights.push_back(compute_N(seq, k, e));
      } catch (const Error&) {
      }
    }
    for (const Integer& Q : heights) {
      const std::string name = "integrality[k=" + std::to_string(k) + ",Q=" +
                               (Q.get_str().size() < 30 ? Q.get_str() : "~2^" +
                                    std::to_string(mpz_sizeinbase(Q.get_mpz_t(), 2) - 1)) +
                               "]";
      checks.push_back(guarded(name, [&] {
        const WitnessForm w = build_witness(seq, Q);
        const IntegrityRecord rec = integrality_checks(seq, w);  // throws on failure
        return Check{name, true,
                     "case " + std::to_string(static_cast<int>(w.tag.kase)) + ", " +
                         std::to_string(rec.checks.size()) + " identities"};
      }));
    }
  }

  // Exhaustive search sandwiched between certificate and witness where affordable.
  for (int k = 1; k <= K - 1; ++k) {
    const Integer Q = seq.term(static_cast<long>(n) * k + 1) - 1;
    if (!Q.fits_slong_p() || search_space_size(n, Q.get_si()) > budget) continue;
    const std::string name = "sandwich[k=" + std::to_string(k) + "]";
    checks.push_back(guarded(name, [&] {
      const PsiResult bounds = psi_star_enclosure(seq, Q);
      const PsiResult exact =
          psi_star_exhaustive(sequence_target(seq), Q.get_si(), {budget, threads});
      const bool inside = bounds.value.contains(exact.value);
      return Check{name, inside,
                   "search " + to_scientific(exact.normalized.lo(), 8, Rounding::Down) + ".." +
                       to_scientific(exact.normalized.hi(), 8, Rounding::Up) +
                       " within bounds " +
                       to_scientific(bounds.normalized.lo(), 8, Rounding::Down) + ".." +
                       to_scientific(bounds.normalized.hi(), 8, Rounding::Up)};
    }));
  }
  return checks;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet spectrum toolkit: sequences, witnesses and certified psi* bounds",
               "dspec"};
  app.require_subcommand(1, 1);

  int n = 2;
  std::string c_text;
  std::string schedule_text = "const:2";
  std::string phi_text;
  int depth = 3;
  std::string out_path;
  std::string seq_path;
  std::string q_text;
  std::string mode = "enclosure";
  std::string point_text;
  std::optional<int> eval_depth;
  std::uint64_t budget = 100'000'000;
  std::uint64_t verify_budget = 1'000'000;
  int threads = 0;
  int k_min = 1;
  int k_max = 1;
  int big_n = 1;
  std::string samples_text = "4,16,256,65536,4294967296";

  auto* construct = app.add_subcommand("construct", "build a sequence for a target constant c");
  construct->add_option("--n", n, "dimension n >= 2")->required();
  construct->add_option("--c", c_text, "target constant p/q in (0,1)")->required();
  construct->add_option("--schedule", schedule_text, "const:m | ramp:m0 | list:m1,m2,...");
  construct->add_option("--depth", depth, "number of blocks K >= 1")->required();
  construct->add_option("--out", out_path, "output JSON file (default stdout)");

  auto* phi_build = app.add_subcommand("phi-build", "build a sequence driven by Phi");
  phi_build->add_option("--n", n, "dimension n >= 2")->required();
  phi_build->add_option("--phi", phi_text, "power:A:s | powerlog:A:s:r")->required();
  phi_build->add_option("--schedule", schedule_text, "const:m | ramp:m0 | list:m1,m2,...");
  phi_build->add_option("--depth", depth, "number of blocks K >= 1")->required();
  phi_build->add_option("--out", out_path, "output JSON file (default stdout)");

  auto* witness = app.add_subcommand("witness", "explicit upper-bound form at height Q");
  witness->add_option("--seq", seq_path, "sequence JSON")->required();
  witness->add_option("--Q", q_text, "height Q")->required();

  auto* psi = app.add_subcommand("psi", "psi*(Q) by exhaustive search or certified bounds");
  psi->add_option("--seq", seq_path, "sequence JSON");
  psi->add_option("--point", point_text, "rational target p/q,p/q,... (exhaustive only)");
  psi->add_option("--Q", q_text, "height Q")->required();
  psi->add_option("--mode", mode, "exhaustive | enclosure")
      ->check(CLI::IsMember({"exhaustive", "enclosure"}));
  psi->add_option("--k", eval_depth, "truncation level for the search target");
  psi->add_option("--budget", budget, "maximum (2Q+1)^n");
  psi->add_option("--threads", threads, "worker threads (0: default)");

  auto* scan = app.add_subcommand("scan", "normalised psi* at the critical heights (CSV)");
  scan->add_option("--seq", seq_path, "sequence JSON")->required();
  scan->add_option("--k-min", k_min, "first block")->required();
  scan->add_option("--k-max", k_max, "last block")->required();
  scan->add_option("--threads", threads, "worker threads");
  scan->add_option("--out", out_path, "output CSV file (default stdout)");

  auto* verify = app.add_subcommand("verify", "audit a sequence file; exit 0 iff all checks pass");
  verify->add_option("--seq", seq_path, "sequence JSON")->required();
  verify->add_option("--budget", verify_budget, "search budget for sandwich checks");
  verify->add_option("--threads", threads, "worker threads");

  auto* liouville = app.add_subcommand("liouville", "Case1 witness against Q^-N");
  liouville->add_option("--seq", seq_path, "sequence JSON")->required();
  liouville->add_option("--N", big_n, "exponent N")->required();
  liouville->add_option("--k-max", k_max, "last block to try")->required();

  auto* phi_scan = app.add_subcommand("phi-scan", "psi*(Q)/Phi(Q) at the critical heights (CSV)");
  phi_scan->add_option("--seq", seq_path, "phi-driven sequence JSON")->required();
  phi_scan->add_option("--k-min", k_min, "first block")->required();
  phi_scan->add_option("--k-max", k_max, "last block")->required();
  phi_scan->add_option("--threads", threads, "worker threads");
  phi_scan->add_option("--out", out_path, "output CSV file (default stdout)");

  auto* phi_check = app.add_subcommand("phi-check", "decay check and heuristic ratio scan for Phi");
  phi_check->add_option("--phi", phi_text, "power:A:s | powerlog:A:s:r")->required();
  phi_check->add_option("--n", n, "dimension n")->required();
  phi_check->add_option("--samples", samples_text, "increasing integers t, comma separated");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*construct) {
      Params p;
      p.n = n;
      p.c = parse_rational(c_text);
      p.schedule = Schedule::parse(schedule_text);
      p.depth = depth;
      emit(dump_sequence(build_sequence(p)), out_path, out);
      return kSuccess;
    }
    if (*phi_build) {
      Params p;
      p.n = n;
      p.schedule = Schedule::parse(schedule_text);
      p.depth = depth;
      emit(dump_sequence(build_sequence_phi(p, PhiFamily::parse(phi_text))), out_path, out);
      return kSuccess;
    }
    if (*witness) {
      const Sequence seq = load_sequence(seq_path);
      out << witness_to_json(build_witness(seq, parse_integer(q_text))).dump(2) << "\n";
      return kSuccess;
    }
    if (*psi) {
      const Integer Q = parse_integer(q_text);
      if (seq_path.empty() == point_text.empty()) {
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --seq or --point");
      }
      PsiResult r;
      if (mode == "enclosure") {
        if (seq_path.empty()) {
          throw Error(ErrorKind::InvalidArgument, "enclosure mode needs --seq");
        }
        r = psi_star_enclosure(load_sequence(seq_path), Q);
      } else {
        const Target target = seq_path.empty()
                                  ? rational_target(parse_point(point_text))
                                  : sequence_target(load_sequence(seq_path), eval_depth);
        r = psi_star_exhaustive(target, to_search_height(Q), {budget, threads});
      }
      out << psi_to_json(r).dump(2) << "\n";
      return kSuccess;
    }
    if (*scan) {
      const Sequence seq = load_sequence(seq_path);
      emit(spectrum_csv(theta_scan(seq, k_min, k_max, std::max(threads, 1))), out_path, out);
      return kSuccess;
    }
    if (*verify) {
      const Sequence seq = load_sequence(seq_path, LoadMode::Unchecked);
      const std::vector<Check> checks = audit(seq, verify_budget, threads);
      Json report;
      report["sequence"] = seq_path;
      report["pass"] = all_pass(checks);
      report["checks"] = checks_to_json(checks);
      out << report.dump(2) << "\n";
      return all_pass(checks) ? kSuccess : kVerificationFailure;
    }
    if (*liouville) {
      const Sequence seq = load_sequence(seq_path);
      Json report;
      report["N"] = big_n;
      Json rows = Json::array();
      bool any = false;
      for (int k = 1; k <= k_max; ++k) {
        const bool ok = liouville_check(seq, big_n, k);
        any = any || ok;
        Json row;
        row["k"] = k;
        row["pass"] = ok;
        rows.push_back(std::move(row));
      }
      report["blocks"] = std::move(rows);
      report["pass"] = any;
      out << report.dump(2) << "\n";
      return any ? kSuccess : kVerificationFailure;
    }
    if (*phi_scan) {
      const Sequence seq = load_sequence(seq_path);
      if (!seq.phi) throw Error(ErrorKind::InvalidArgument, "sequence has no phi descriptor");
      emit(ratio_csv(phi_ratio_scan(seq, *seq.phi, k_min, k_max, std::max(threads, 1))),
           out_path, out);
      return kSuccess;
    }
    if (*phi_check) {
      std::vector<Integer> samples;
      std::stringstream ss(samples_text);
      std::string item;
      while (std::getline(ss, item, ',')) samples.push_back(parse_integer(item));
      const PhiFamily phi = PhiFamily::parse(phi_text);
      const AdmissibilityReport rep = check_phi_admissible(phi, n, samples);
      Json report;
      report["phi"] = phi.describe();
      report["decay_pass"] = rep.decay_pass();
      report["decay"] = checks_to_json(rep.decay);
      Json ratios = Json::array();
      for (std::size_t j = 0; j < rep.min_ratio_by_j.size(); ++j) {
        Json row;
        row["alpha"] = "1+2^-" + std::to_string(j + 1);
        row["min_ratio"] = to_scientific(rep.min_ratio_by_j[j], kDecimalDigits, Rounding::Down);
        ratios.push_back(std::move(row));
      }
      report["heuristic_ratio_scan"] = std::move(ratios);
      report["note"] = "ratio scan is heuristic; the liminf condition is asymptotic";
      out << report.dump(2) << "\n";
      return rep.decay_pass() ? kSuccess : kVerificationFailure;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsageError;
}

}  // namespace dspec::cli
