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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "stabpoly/stabpoly.hpp"

namespace {

using namespace stabpoly;

constexpr double kStickelbergerSeconds = 60.0;
constexpr double kCubicSeconds = 120.0;
constexpr double kCensusSeconds = 600.0;
constexpr double kBoundRelTol = 1e-12;
constexpr std::uint64_t kF3MonicStableQuadratics = 1;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void merge(Outcome& o, const verify::SuiteResult& r) {
  if (!r.ok() || r.checked == 0) {
    o.pass = false;
    o.detail += " " + r.suite + "/" + r.field + ": " + std::to_string(r.violations) + " violations";
    if (!r.failures.empty()) o.detail += " (" + r.failures.front() + ")";
  } else {
    o.detail += " " + r.field + ":" + std::to_string(r.checked);
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void time_limit(Outcome& o, double secs, double limit) {
  char buf[96];
  std::snprintf(buf, sizeof buf, " [%.2fs, limit %.0fs]", secs, limit);
  o.detail += buf;
  if (secs >= limit) o.pass = false;
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto F : {build_prime_field(3), build_prime_field(5), build_prime_field(7), build_field(3, 2)}) {
    merge(o, verify::stickelberger(F, 4, 2));
  }
  time_limit(o, seconds_since(t0), kStickelbergerSeconds);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<FieldRef, std::uint64_t> runs[] = {{build_prime_field(3), 18}, {build_field(3, 2), 648}};
  for (const auto& [F, expected] : runs) {
    const auto r = verify::cubic_char3(F);
    merge(o, r);
    if (r.checked != expected) {
      o.pass = false;
      o.detail += " expected " + std::to_string(expected) + " polynomials";
    }
  }
  time_limit(o, seconds_since(t0), kCubicSeconds);
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (unsigned s : {1u, 2u, 3u}) merge(o, verify::lemma42(build_field(3, s)));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto F9 = build_field(3, 2);
  const auto r = verify::counterexample(F9, 5, FieldElement(F9, 1));
  merge(o, r);
  const auto c = converse_counterexample(F9, 5, FieldElement(F9, 1));
  const Polynomial expected = compose(Polynomial::monomial(F9, 1, 5), Polynomial::from_ints(F9, {-1, 1})) + Polynomial::constant(F9, 1);
  if (!(c.f == expected) || !c.root.is_zero() || !c.root_verified || !c.s2_all_squares) {
    o.pass = false;
    o.detail += " certificate mismatch";
  }
  o.detail += " root " + text::format_element(c.root) + ", S2 size " + std::to_string(c.s2.size());
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (auto F : {build_prime_field(3), build_prime_field(5)}) merge(o, verify::soundness(F, 2, 4, 3));
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto r = verify::quadratic_iff(build_prime_field(p), true, 5);
    merge(o, r);
    if (p == 3) {
      const auto stable = r.tallies.count("stable") ? r.tallies.at("stable") : 0;
      o.detail += " F_3 stable=" + std::to_string(stable);
      if (stable != kF3MonicStableQuadratics) o.pass = false;
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (auto F : {build_prime_field(3), build_prime_field(5), build_field(3, 2)}) {
    const auto r = verify::resultant_identities(F, 20260101, 200, 5);
    merge(o, r);
    if (r.checked < 200) o.pass = false;
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (std::uint64_t p : {3u, 5u}) {
    for (int d : {2, 3}) merge(o, verify::norm_identity(build_prime_field(p), d, 2));
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (auto F : {build_prime_field(5), build_field(3, 2)}) {
    const auto r = verify::orbit_equivalence(F, 9, 500, 5);
    merge(o, r);
    if (r.checked != 500) o.pass = false;
  }
  const std::pair<FieldRef, int> censuses[] = {{build_prime_field(5), 3}, {build_field(3, 2), 2}};
  for (const auto& [F, d] : censuses) {
    std::vector<std::string> dumps;
    for (unsigned jobs : {1u, 1u, 4u, 0u}) {
      CensusOptions opts;
      opts.jobs = jobs;
      opts.depth = 3;
      opts.collect_survivors = true;
      const auto res = stability_census(F, d, false, opts);
      nlohmann::json j = json::census(res, false);
      nlohmann::json surv = nlohmann::json::array();
      for (const auto& f : res.survivors) surv.push_back(json::polynomial(f));
      j["survivors"] = surv;
      dumps.push_back(j.dump());
    }
    for (const auto& s : dumps) {
      if (s != dumps.front()) {
        o.pass = false;
        o.detail += " census dumps differ for " + text::format_field_spec(*F);
      }
    }
  }
  o.detail += " census dumps identical across 4 runs";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<std::uint64_t, int> sweep[] = {{3, 2}, {5, 2}, {7, 2}, {9, 2}, {3, 3}};
  std::string table = json::census_tsv_header() + "\n";
  for (const auto& [q, d] : sweep) {
    const auto F = q == 9 ? build_field(3, 2) : build_prime_field(q);
    CensusOptions opts;
    const auto res = stability_census(F, d, false, opts);
    const double expected = std::pow(static_cast<double>(q), d + 1.0 - 1.0 / std::log(2.0 * d * d));
    if (std::abs(res.bound_reference - expected) > kBoundRelTol * expected) o.pass = false;
    table += json::census_tsv_row(res) + "\n";
    if (json::census(res, false)["bound_reference"].get<double>() != res.bound_reference) o.pass = false;
  }
  std::fputs(table.c_str(), stdout);
  time_limit(o, seconds_since(t0), kCensusSeconds);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"stickelberger parity", criterion1},        {"char-3 cubic theorem", criterion2},
      {"char-3 cubic irreducibility", criterion3}, {"converse counterexample", criterion4},
      {"criterion soundness", criterion5},         {"quadratic iff", criterion6},
      {"resultant identities", criterion7},        {"norm identity", criterion8},
      {"orbit equivalence + determinism", criterion9}, {"bound report", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string(" exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu (%s):%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
