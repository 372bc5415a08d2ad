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

#include "dspec/serialize.hpp"

#include <fstream>
#include <sstream>

#include "dspec/errors.hpp"

namespace dspec {
namespace {

std::string get_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorKind::InvalidArgument, std::string("missing string field '") + key + "'");
  }
  return j.at(key).get<std::string>();
}

long get_long(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorKind::InvalidArgument, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<long>();
}

Json schedule_to_json(const Schedule& s) {
  Json j;
  switch (s.kind) {
    case Schedule::Kind::Constant:
      j["kind"] = "const";
      j["m"] = s.m;
      break;
    case Schedule::Kind::Ramp:
      j["kind"] = "ramp";
      j["m0"] = s.m0;
      break;
    case Schedule::Kind::List:
      j["kind"] = "list";
      j["values"] = s.values;
      break;
  }
  return j;
}

Schedule schedule_from_json(const Json& j) {
  const std::string kind = get_string(j, "kind");
  if (kind == "const") return Schedule::constant(get_long(j, "m"));
  if (kind == "ramp") return Schedule::ramp(get_long(j, "m0"));
  if (kind == "list") {
    if (!j.contains("values") || !j.at("values").is_array()) {
      throw Error(ErrorKind::InvalidArgument, "list schedule without values");
    }
    std::vector<long> values;
    for (const auto& v : j.at("values")) {
      if (!v.is_number_integer()) throw Error(ErrorKind::InvalidArgument, "bad schedule value");
      values.push_back(v.get<long>());
    }
    return Schedule::list(std::move(values));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown schedule kind '" + kind + "'");
}

std::string decimal(const Rational& x, Rounding mode) {
  return to_scientific(x, kDecimalDigits, mode);
}

}  // namespace

Json phi_to_json(const PhiFamily& phi) {
  Json j;
  j["kind"] = phi.kind == PhiFamily::Kind::Power ? "power" : "powerlog";
  j["coeff"] = phi.coeff.str();
  j["exponent"] = phi.exponent.str();
  if (phi.kind == PhiFamily::Kind::PowerLog) j["log_power"] = phi.log_power;
  return j;
}

PhiFamily phi_from_json(const Json& j) {
  const std::string kind = get_string(j, "kind");
  const Rational coeff = parse_rational(get_string(j, "coeff"));
  const Rational exponent = parse_rational(get_string(j, "exponent"));
  if (kind == "power") return PhiFamily::power(coeff, exponent);
  if (kind == "powerlog") {
    const long r = get_long(j, "log_power");
    if (r < 0) throw Error(ErrorKind::InvalidArgument, "log_power must be >= 0");
    return PhiFamily::powerlog(coeff, exponent, static_cast<unsigned long>(r));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown phi kind '" + kind + "'");
}

Json sequence_to_json(const Sequence& seq) {
  Json j;
  j["version"] = 1;
  j["variant"] = seq.variant == Variant::TargetConstant ? "theorem1" : "theorem2";
  j["n"] = seq.n();
  if (seq.params.c) j["c"] = seq.params.c->str();
  j["schedule"] = schedule_to_json(seq.params.schedule);
  if (seq.phi) j["phi"] = phi_to_json(*seq.phi);
  Json terms = Json::array();
  for (const Integer& x : seq.a) terms.push_back(to_decimal_string(x));
  j["a"] = std::move(terms);
  return j;
}

std::string dump_sequence(const Sequence& seq) { return sequence_to_json(seq).dump(2) + "\n"; }

Sequence sequence_from_json(const Json& j, LoadMode mode) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "sequence file is not an object");
  if (get_long(j, "version") != 1) {
    throw Error(ErrorKind::InvalidArgument, "unsupported sequence file version");
  }
  Sequence seq;
  const std::string variant = get_string(j, "variant");
  if (variant == "theorem1") {
    seq.variant = Variant::TargetConstant;
  } else if (variant == "theorem2") {
    seq.variant = Variant::PhiDriven;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown variant '" + variant + "'");
  }
  seq.params.n = static_cast<int>(get_long(j, "n"));
  if (seq.params.n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (j.contains("c")) seq.params.c = parse_rational(get_string(j, "c"));
  if (!j.contains("schedule")) throw Error(ErrorKind::InvalidArgument, "missing schedule");
  seq.params.schedule = schedule_from_json(j.at("schedule"));
  if (j.contains("phi")) seq.phi = phi_from_json(j.at("phi"));
  if (!j.contains("a") || !j.at("a").is_array()) {
    throw Error(ErrorKind::InvalidArgument, "missing term array 'a'");
  }
  for (const auto& v : j.at("a")) {
    if (!v.is_string()) {
      throw Error(ErrorKind::InvalidArgument, "terms must be decimal strings");
    }
    seq.a.push_back(parse_integer(v.get<std::string>()));
  }
  seq.params.depth = seq.depth();
  if (mode == LoadMode::Strict) {
    const auto bad = sequence_violations(seq);
    if (!bad.empty()) {
      throw Error(ErrorKind::ConstructionIntegrity, "sequence file rejected: " + bad.front());
    }
  }
  return seq;
}

Sequence load_sequence(const std::filesystem::path& path, LoadMode mode) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "malformed JSON in " + path.string() + ": " + e.what());
  }
  return sequence_from_json(j, mode);
}

void save_sequence(const Sequence& seq, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << dump_sequence(seq);
}

Json witness_to_json(const WitnessForm& w) {
  Json j;
  j["Q"] = w.Q.get_str();
  j["case"] = std::to_string(static_cast<int>(w.tag.kase));
  j["k"] = w.tag.k;
  j["e"] = w.tag.e ? Json(*w.tag.e) : Json(nullptr);
  Json b = Json::array();
  for (const Integer& x : w.b) b.push_back(x.get_str());
  j["b"] = std::move(b);
  j["value_lo"] = w.value.lo().str();
  j["value_hi"] = w.value.hi().str();
  return j;
}

Json psi_to_json(const PsiResult& r) {
  Json j;
  j["Q"] = r.Q.get_str();
  j["method"] = method_name(r.method);
  j["value_lo"] = r.value.lo().str();
  j["value_hi"] = r.value.hi().str();
  j["normalized_lo"] = r.normalized.lo().str();
  j["normalized_hi"] = r.normalized.hi().str();
  j["normalized_lo_dec"] = decimal(r.normalized.lo(), Rounding::Down);
  j["normalized_hi_dec"] = decimal(r.normalized.hi(), Rounding::Up);
  if (r.argmin) {
    Json b = Json::array();
    for (const Integer& x : *r.argmin) b.push_back(x.get_str());
    j["argmin"] = std::move(b);
  } else {
    j["argmin"] = nullptr;
  }
  j["ambiguous"] = r.ambiguous;
  if (r.method == PsiMethod::Exhaustive) j["candidates"] = r.candidates;
  return j;
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const Check& c : checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json lower_cert_to_json(const LowerBoundCert& cert) {
  Json j;
  j["k"] = cert.k;
  j["Q"] = cert.Q.get_str();
  j["main_term"] = cert.main_term.str();
  j["tail_bound"] = cert.tail_bound.str();
  j["lower"] = cert.lower.str();
  j["preconditions"] = checks_to_json(cert.preconditions);
  return j;
}

Json reducedness_to_json(const ReducednessCert& cert) {
  Json j;
  j["i"] = cert.i;
  j["k"] = cert.k;
  j["numerator"] = cert.numerator.get_str();
  j["denominator"] = cert.denominator.get_str();
  if (cert.G) j["G"] = cert.G->get_str();
  if (cert.H) j["H"] = cert.H->get_str();
  return j;
}

std::string spectrum_csv(const std::vector<SpectrumRecord>& records) {
  std::ostringstream out;
  out << "k,Q,psi_lo,psi_hi,norm_lo,norm_hi,method,norm_lo_dec,norm_hi_dec\n";
  for (const auto& r : records) {
    out << r.k << ',' << r.Q.get_str() << ',' << r.psi.lo().str() << ',' << r.psi.hi().str()
        << ',' << r.normalized.lo().str() << ',' << r.normalized.hi().str() << ','
        << method_name(r.method) << ',' << decimal(r.normalized.lo(), Rounding::Down) << ','
        << decimal(r.normalized.hi(), Rounding::Up) << '\n';
  }
  return out.str();
}

std::string ratio_csv(const std::vector<RatioRecord>& records) {
  std::ostringstream out;
  out << "k,Q,psi_lo,psi_hi,phi_lo,phi_hi,ratio_lo,ratio_hi,ratio_lo_dec,ratio_hi_dec\n";
  for (const auto& r : records) {
    out << r.k << ',' << r.Q.get_str() << ',' << r.psi.lo().str() << ',' << r.psi.hi().str()
        << ',' << r.phi.lo().str() << ',' << r.phi.hi().str() << ',' << r.ratio.lo().str()
        << ',' << r.ratio.hi().str() << ',' << decimal(r.ratio.lo(), Rounding::Down) << ','
        << decimal(r.ratio.hi(), Rounding::Up) << '\n';
  }
  return out.str();
}

}  // namespace dspec
