/* Copyright 2026 The stabpoly Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// stab: command-line front end.
//
//   stab field  --field F [--op OP --a X [--b Y] [--exp N]]
//   stab test   --field F --poly P [--depth N] [--degree-cap N]
//   stab orbit  --field F --poly P
//   stab census --field F --degree D [--monic] [--depth N] [--jobs N] [--zero I]...
//   stab verify SUITE [--field F] [suite options]
//
// Exit status: 0 success, 1 domain error or property violation, 2 usage error.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "stabpoly/stabpoly.hpp"

namespace {

using namespace stabpoly;
using Json = nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string field;
  std::string poly;
  int depth = 5;
  int degree = -1;  // -1: suite default
  bool monic = false;
  bool all = false;
  bool tsv = false;
  bool timing = false;
  unsigned jobs = 0;
  std::uint64_t seed = 1;
  std::size_t degree_cap = kDefaultDegreeCap;
  int max_degree = 4;
  int min_degree = 2;
  int count = -1;
  int n = 2;
  int max_witness = 3;
  std::uint64_t max_population = kDefaultMaxPopulation;
  std::vector<int> zero;
  std::string op;
  std::string a;
  std::string b;
  std::int64_t exp = 0;
  std::string a0 = "1";
  std::string suite;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_field(const Options& o) {
  const FieldRef F = text::parse_field_spec(o.field);
  if (o.op.empty()) {
    if (o.tsv) {
      std::cout << text::format_field_spec(*F) << '\t' << F->characteristic() << '\t' << F->order() << '\n';
    } else {
      emit(json::field_info(F));
    }
    return 0;
  }
  static const std::map<std::string, ArithOp> ops = {{"add", ArithOp::Add}, {"sub", ArithOp::Sub}, {"mul", ArithOp::Mul},
                                                     {"div", ArithOp::Div}, {"neg", ArithOp::Neg}, {"inv", ArithOp::Inv},
                                                     {"pow", ArithOp::Pow}};
  if (o.a.empty()) throw Error(ErrorKind::ParseError, "--op needs --a");
  const FieldElement a = text::parse_field_element(F, o.a);
  Json out = json::document("field_op");
  out["field"] = text::format_field_spec(*F);
  out["op"] = o.op;
  out["a"] = json::element(a);
  if (o.op == "char") {
    out["result"] = a.quadratic_character();
  } else if (o.op == "sqrt") {
    const auto s = F->sqrt(a.raw());
    out["result"] = s ? json::element(*F, *s) : Json(nullptr);
  } else if (o.op == "trace" || o.op == "norm") {
    const FieldRef base = F->is_prime_field() ? F : F->base();
    const FieldElement r = o.op == "trace" ? trace_to_subfield(a, base) : norm_to_subfield(a, base);
    out["subfield"] = text::format_field_spec(*base);
    out["result"] = json::element(r);
  } else {
    const auto it = ops.find(o.op);
    if (it == ops.end()) throw Error(ErrorKind::ParseError, "unknown --op '" + o.op + "'");
    std::optional<FieldElement> b;
    if (!o.b.empty()) b = text::parse_field_element(F, o.b);
    out["b"] = b ? json::element(*b) : Json(nullptr);
    if (it->second == ArithOp::Pow) out["exp"] = o.exp;
    out["result"] = json::element(elem_arith(F, it->second, a, b, o.exp));
  }
  emit(out);
  return 0;
}

Polynomial parse_poly(const Options& o, const FieldRef& F) {
  if (o.poly.empty()) throw Error(ErrorKind::ParseError, "--poly is required");
  return text::parse_polynomial(F, o.poly);
}

int cmd_test(const Options& o) {
  const FieldRef F = text::parse_field_spec(o.field);
  const Polynomial f = parse_poly(o, F);
  const StabilityReport r = stability_report(f, o.depth, o.degree_cap);
  if (o.tsv) {
    std::cout << text::format_field_spec(*F) << '\t' << text::format_polynomial(f) << '\t' << to_string(r.verdict) << '\t'
              << to_string(r.criterion_verdict) << '\t' << (r.witness ? std::to_string(r.witness->n) : "-") << '\t'
              << r.depth_verified << '\n';
  } else {
    emit(json::stability_report(r));
  }
  return 0;
}

int cmd_orbit(const Options& o) {
  const FieldRef F = text::parse_field_spec(o.field);
  const Polynomial f = parse_poly(o, F);
  if (f.degree() < 2) throw Error(ErrorKind::WrongDegree, "orbit needs degree >= 2");
  const CriticalOrbit orbit = critical_residue_orbit(f);
  const OrbitSets sets = orbit_sets(f);
  if (o.tsv) {
    for (const auto& rec : orbit.records()) {
      std::cout << rec.n << '\t' << text::format_polynomial(rec.residue) << '\t' << text::format_element(rec.value) << '\n';
    }
  } else {
    emit(json::orbit(orbit, sets));
  }
  return 0;
}

int cmd_census(const Options& o) {
  const FieldRef F = text::parse_field_spec(o.field);
  CensusOptions opts;
  opts.depth = o.depth;
  opts.jobs = o.jobs;
  opts.degree_cap = o.degree_cap;
  opts.max_population = o.max_population;
  opts.zero_coefficients = o.zero;
  const CensusResult res = stability_census(F, o.degree, o.monic, opts);
  if (o.tsv) {
    std::cout << json::census_tsv_header() << '\n' << json::census_tsv_row(res) << '\n';
  } else {
    emit(json::census(res, o.timing));
  }
  return 0;
}

int cmd_verify(const Options& o) {
  auto field_or = [&](const char* def) { return text::parse_field_spec(o.field.empty() ? def : o.field); };
  verify::SuiteResult r;
  const std::string& s = o.suite;
  if (s == "stickelberger") {
    r = verify::stickelberger(field_or("5"), o.max_degree, o.min_degree);
  } else if (s == "cubic-char3") {
    r = verify::cubic_char3(field_or("3^2"));
  } else if (s == "lemma42") {
    r = verify::lemma42(field_or("3^3"));
  } else if (s == "resultant-identities") {
    r = verify::resultant_identities(field_or("5"), o.seed, o.count < 0 ? 200 : o.count);
  } else if (s == "norm-identity") {
    r = verify::norm_identity(field_or("3"), o.degree < 0 ? 2 : o.degree, o.n);
  } else if (s == "counterexample") {
    const FieldRef F = field_or("3^2");
    r = verify::counterexample(F, o.degree < 0 ? 5 : o.degree, text::parse_field_element(F, o.a0));
  } else if (s == "quadratic-iff") {
    r = verify::quadratic_iff(field_or("3"), !o.all, o.depth);
  } else if (s == "soundness") {
    r = verify::soundness(field_or("3"), o.min_degree, o.max_degree, o.max_witness);
  } else if (s == "orbit-equivalence") {
    r = verify::orbit_equivalence(field_or("5"), o.seed, o.count < 0 ? 500 : o.count);
  } else {
    throw Error(ErrorKind::ParseError, "unknown suite '" + s + "'");
  }
  if (o.tsv) {
    std::cout << r.suite << '\t' << r.field << '\t' << r.checked << '\t' << r.violations << '\t' << r.skipped << '\n';
  } else {
    emit(verify::to_json(r, o.timing));
  }
  return r.ok() ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability of iterated polynomials over finite fields of odd characteristic"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--field", o.field, "field spec: p, p^s, p^s:c0,...,1, optionally /k[:e0,...,1]");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--tsv", o.tsv, "tab-separated output");
    sub->add_option("--degree-cap", o.degree_cap, "maximum degree of explicit iterates")->capture_default_str();
  };

  auto* field = app.add_subcommand("field", "describe a field or evaluate one operation");
  add_field(field, true);
  add_common(field);
  field->add_option("--op", o.op, "add, sub, mul, div, neg, inv, pow, char, sqrt, trace, norm");
  field->add_option("--a", o.a, "first operand");
  field->add_option("--b", o.b, "second operand");
  field->add_option("--exp", o.exp, "exponent for pow");

  auto* test = app.add_subcommand("test", "stability verdict with witness and direct check");
  add_field(test, true);
  add_common(test);
  test->add_option("--poly", o.poly, "coefficients c0,c1,... (low to high)")->required();
  test->add_option("--depth", o.depth, "direct iterate check depth")->capture_default_str();

  auto* orbit = app.add_subcommand("orbit", "critical residue orbit and criterion set");
  add_field(orbit, true);
  add_common(orbit);
  orbit->add_option("--poly", o.poly, "coefficients c0,c1,... (low to high)")->required();

  auto* census = app.add_subcommand("census", "exhaustive sweep over degree-d polynomials");
  add_field(census, true);
  add_common(census);
  census->add_option("--degree", o.degree, "degree d >= 2")->required();
  census->add_flag("--monic", o.monic, "monic polynomials only");
  census->add_option("--depth", o.depth, "direct iterate check depth")->capture_default_str();
  census->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");
  census->add_option("--zero", o.zero, "coefficient index pinned to zero (repeatable)");
  census->add_option("--max-population", o.max_population, "refuse larger sweeps")->capture_default_str();
  census->add_flag("--timing", o.timing, "include wall time in JSON");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", o.suite,
                     "stickelberger | cubic-char3 | lemma42 | resultant-identities | norm-identity | counterexample | "
                     "quadratic-iff | soundness | orbit-equivalence")
      ->required();
  add_field(verify, false);
  add_common(verify);
  verify->add_option("--max-degree", o.max_degree, "largest degree")->capture_default_str();
  verify->add_option("--min-degree", o.min_degree, "smallest degree")->capture_default_str();
  verify->add_option("--degree", o.degree, "degree d");
  verify->add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();
  verify->add_option("--count", o.count, "instances per identity for randomized suites");
  verify->add_option("--n", o.n, "iterate index for norm-identity")->capture_default_str();
  verify->add_option("--max-witness", o.max_witness, "largest witness index for soundness")->capture_default_str();
  verify->add_option("--a0", o.a0, "constant for the counterexample family")->capture_default_str();
  verify->add_option("--depth", o.depth, "direct check depth for quadratic-iff")->capture_default_str();
  verify->add_flag("--all", o.all, "quadratic-iff over all (not only monic) quadratics");
  verify->add_flag("--timing", o.timing, "include wall time in JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*field) return cmd_field(o);
    if (*test) return cmd_test(o);
    if (*orbit) return cmd_orbit(o);
    if (*census) return cmd_census(o);
    if (*verify) return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
