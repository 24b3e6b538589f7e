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

#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive and seeded-random property suites.
 *
 * Every suite reports how many cases it checked and how many violated the
 * property; a correct build reports zero violations everywhere. Randomized
 * suites draw from std::mt19937_64 and reduce with %, so a seed fixes the
 * instance list on every platform.
 */

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stabpoly/census.hpp"
#include "stabpoly/dynamics.hpp"
#include "stabpoly/factor.hpp"
#include "stabpoly/oracle.hpp"
#include "stabpoly/report_json.hpp"
#include "stabpoly/text_format.hpp"

namespace stabpoly::verify {

inline constexpr std::size_t kMaxListedFailures = 10;

struct SuiteResult {
  std::string suite;
  std::string field;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t skipped = 0;
  std::map<std::string, std::uint64_t> tallies;
  std::vector<std::string> failures;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0.0;

  bool ok() const noexcept { return violations == 0; }

  void fail(const std::string& what) {
    ++violations;
    if (failures.size() < kMaxListedFailures) failures.push_back(what);
  }
};

namespace detail {

inline std::chrono::steady_clock::time_point now() { return std::chrono::steady_clock::now(); }

inline double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(now() - t0).count();
}

inline SuiteResult start(const char* name, const FieldRef& F) {
  SuiteResult r;
  r.suite = name;
  r.field = text::format_field_spec(*F);
  return r;
}

inline std::string show(const Polynomial& f) { return "[" + text::format_polynomial(f) + "]"; }

inline void for_each_polynomial(const FieldRef& F, int d, bool monic, const std::function<void(const Polynomial&)>& fn) {
  const PolynomialSpace space(F, d, monic);
  for (std::uint64_t i = 0; i < space.size(); ++i) fn(space.at(i));
}

}  // namespace detail

/// Squarefree monic f with min_degree <= deg f <= max_degree: the number of
/// irreducible factors r satisfies r = deg f (mod 2) iff Disc(f) is a square.
inline SuiteResult stickelberger(const FieldRef& F, int max_degree = 4, int min_degree = 2) {
  SuiteResult r = detail::start("stickelberger", F);
  const auto t0 = detail::now();
  for (int d = min_degree; d <= max_degree; ++d) {
    detail::for_each_polynomial(F, d, true, [&](const Polynomial& f) {
      const StickelbergerResult s = stickelberger_check(f);
      if (!s.applicable) {
        ++r.skipped;
        return;
      }
      ++r.checked;
      ++r.tallies[s.disc_char == 1 ? "disc_square" : "disc_nonsquare"];
      if (!s.consistent) r.fail(detail::show(f) + ": r = " + std::to_string(s.factor_count));
    });
  }
  r.details["min_degree"] = min_degree;
  r.details["max_degree"] = max_degree;
  r.seconds = detail::elapsed(t0);
  return r;
}

/// Every f = a_3 X^3 - a_1 X - a_0 over F_{3^s} has a reducible f, f^(2) or f^(3).
inline SuiteResult cubic_char3(const FieldRef& F) {
  SuiteResult r = detail::start("cubic-char3", F);
  const auto t0 = detail::now();
  const PolynomialSpace space(F, 3, false, {2});
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Polynomial f = space.at(i);
    const CubicTheoremCheck c = cubic_char3_theorem_check(f);
    ++r.checked;
    if (c.reducible_at.empty()) {
      r.fail(detail::show(f) + ": f, f^(2), f^(3) all irreducible");
    } else {
      ++r.tallies["first_reducible_" + std::to_string(c.reducible_at.front())];
    }
  }
  r.seconds = detail::elapsed(t0);
  return r;
}

/// The trace/square-root cubic criterion against two irreducibility oracles
/// (Rabin and trial division) over all monic cubics.
inline SuiteResult lemma42(const FieldRef& F) {
  SuiteResult r = detail::start("lemma42", F);
  const auto t0 = detail::now();
  const FieldCtx& K = *F;
  detail::for_each_polynomial(F, 3, true, [&](const Polynomial& f) {
    const bool fast = cubic_char3_irreducible(f);
    const bool rabin = is_irreducible(f);
    const bool trial = oracle::trial_division_irreducible(f);
    ++r.checked;
    const Elem a2 = K.neg(f.coeff(2));
    const Elem a1 = K.neg(f.coeff(1));
    if (a2 == 0) {
      ++r.tallies[a1 == 0 ? "branch_a2_a1_zero" : "branch_a2_zero"];
    } else {
      ++r.tallies["branch_a2_nonzero"];
    }
    if (trial) ++r.tallies["irreducible"];
    if (fast != trial || rabin != trial) {
      r.fail(detail::show(f) + ": criterion " + std::to_string(fast) + ", oracle " + std::to_string(trial));
    }
  });
  r.seconds = detail::elapsed(t0);
  return r;
}

/// Random instances of: Euclidean = Sylvester = root-product resultant;
/// Res(ab, c) = Res(a, c) Res(b, c); Disc(f) = C_f Res(f, f') against the
/// root-difference product; v_n by residues = v_n by evaluation at the
/// critical points. `count` instances per identity.
inline SuiteResult resultant_identities(const FieldRef& F, std::uint64_t seed, int count = 200, int max_degree = 5) {
  SuiteResult r = detail::start("resultant-identities", F);
  const auto t0 = detail::now();
  std::mt19937_64 rng(seed);
  auto rand_deg = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const FieldCtx& K = *F;

  for (int i = 0; i < count; ++i) {
    const Polynomial a = oracle::random_polynomial(F, rand_deg(0, max_degree), rng);
    const Polynomial b = oracle::random_polynomial(F, rand_deg(0, max_degree), rng);
    const FieldElement euclid = resultant(a, b);
    const FieldElement syl = oracle::sylvester_resultant(a, b);
    const FieldElement roots = oracle::root_product_resultant(a, b);
    ++r.tallies["resultant_three_way"];
    ++r.checked;
    if (!(euclid == syl) || !(euclid == roots)) {
      r.fail("Res(" + detail::show(a) + ", " + detail::show(b) + "): euclid " + text::format_element(euclid) +
             " sylvester " + text::format_element(syl) + " roots " + text::format_element(roots));
    }
  }
  for (int i = 0; i < count; ++i) {
    const Polynomial a = oracle::random_polynomial(F, rand_deg(0, 3), rng);
    const Polynomial b = oracle::random_polynomial(F, rand_deg(0, 3), rng);
    const Polynomial c = oracle::random_polynomial(F, rand_deg(0, 4), rng);
    ++r.tallies["resultant_multiplicative"];
    ++r.checked;
    if (!(resultant(a * b, c) == resultant(a, c) * resultant(b, c))) {
      r.fail("Res(ab, c) != Res(a, c) Res(b, c) for " + detail::show(a) + ", " + detail::show(b) + ", " + detail::show(c));
    }
  }
  for (int i = 0; i < count; ++i) {
    const Polynomial f = oracle::random_polynomial(F, rand_deg(2, max_degree), rng);
    const Discriminant disc = discriminant(f);
    const FieldElement by_roots = oracle::root_product_discriminant(f);
    const Polynomial fp = derivative(f);
    FieldElement by_identity(F, 0);
    if (!fp.is_zero()) {
      const int d = f.degree();
      const int k = fp.degree();
      Elem cf = K.pow_signed(f.leading(), d - k - 2);
      if ((d * (d - 1) / 2) % 2 != 0) cf = K.neg(cf);
      by_identity = FieldElement(F, cf) * oracle::sylvester_resultant(f, fp);
    }
    ++r.tallies["discriminant"];
    ++r.checked;
    if (!(disc.value == by_roots) || !(by_identity == by_roots) || (disc.inseparable && !fp.is_zero())) {
      r.fail("Disc(" + detail::show(f) + "): euclid " + text::format_element(disc.value) + " roots " +
             text::format_element(by_roots) + " C_f Res " + text::format_element(by_identity));
    }
  }
  for (int i = 0; i < count; ++i) {
    Polynomial f = oracle::random_polynomial(F, rand_deg(2, max_degree), rng);
    while (derivative(f).degree() < 1) f = oracle::random_polynomial(F, rand_deg(2, max_degree), rng);
    const auto n = 1 + rng() % 4;
    const CriticalOrbit orbit = critical_residue_orbit(f);
    const FieldElement by_eval = oracle::critical_product_by_evaluation(f, n);
    ++r.tallies["critical_product"];
    ++r.checked;
    if (!(orbit.at(n).value == by_eval)) {
      r.fail("v_" + std::to_string(n) + " of " + detail::show(f) + ": residue " + text::format_element(orbit.at(n).value) +
             " evaluation " + text::format_element(by_eval));
    }
  }
  r.details["seed"] = seed;
  r.details["instances_per_identity"] = count;
  r.seconds = detail::elapsed(t0);
  return r;
}

/// prod_{f^(n-1)(alpha)=0} Disc(f - alpha) = A^{-k} C_f^{d^{n-1}} Res(f^(n), f')
/// over every f of degree d (not only monic) with f^(n-1) irreducible.
inline SuiteResult norm_identity(const FieldRef& F, int d, int n = 2) {
  SuiteResult r = detail::start("norm-identity", F);
  const auto t0 = detail::now();
  detail::for_each_polynomial(F, d, false, [&](const Polynomial& f) {
    if (derivative(f).is_zero()) {
      ++r.skipped;
      return;
    }
    NormIdentity ni;
    try {
      ni = norm_identity_check(f, n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ReducibleIterate) throw;
      ++r.skipped;
      return;
    }
    ++r.checked;
    if (!ni.holds) {
      r.fail(detail::show(f) + ": lhs " + text::format_element(ni.lhs) + " rhs " + text::format_element(ni.rhs));
    }
  });
  r.details["d"] = d;
  r.details["n"] = n;
  r.seconds = detail::elapsed(t0);
  return r;
}

/// The family (X - a0)^d + a0: root a0 - a0^e and an all-square S2.
inline SuiteResult counterexample(const FieldRef& F, int d, const FieldElement& a0) {
  SuiteResult r = detail::start("counterexample", F);
  const auto t0 = detail::now();
  const ConverseCertificate c = converse_counterexample(F, d, a0);
  const StabilityReport rep = necessary_condition_test(c.f);
  r.checked = 1;
  if (!c.root_verified) r.fail("claimed root does not vanish");
  if (!c.s2_all_squares) r.fail("S2 contains a nonsquare");
  if (!c.f_reducible) r.fail("f is irreducible");
  if (rep.verdict != Verdict::CandidateStable) r.fail("criterion verdict is not CandidateStable");
  auto& det = r.details;
  det["poly"] = json::polynomial(c.f);
  det["d"] = d;
  det["a0"] = json::element(a0);
  det["inverse_exponent"] = c.inverse_exponent;
  det["root"] = json::element(c.root);
  det["root_verified"] = c.root_verified;
  det["s2"] = json::criterion_values(c.s2);
  det["s2_all_squares"] = c.s2_all_squares;
  det["f_reducible"] = c.f_reducible;
  det["criterion_verdict"] = std::string(to_string(rep.verdict));
  r.seconds = detail::elapsed(t0);
  return r;
}

/// Quadratics: the criterion verdict against direct irreducibility of
/// f^(1..depth). A witness n <= depth must be exactly the first reducible
/// iterate; a Stable verdict must see no reducible iterate.
inline SuiteResult quadratic_iff(const FieldRef& F, bool monic = true, int depth = 5) {
  SuiteResult r = detail::start("quadratic-iff", F);
  const auto t0 = detail::now();
  nlohmann::json stable = nlohmann::json::array();
  detail::for_each_polynomial(F, 2, monic, [&](const Polynomial& f) {
    const StabilityReport rep = necessary_condition_test(f);
    const StabilityReport alt = quadratic_stability_test(f);
    const DirectCheck dc = direct_iterate_check(f, depth);
    ++r.checked;
    if (rep.verdict != alt.verdict || (rep.witness && alt.witness && rep.witness->n != alt.witness->n)) {
      r.fail(detail::show(f) + ": residue and critical-point routes disagree");
      return;
    }
    if (rep.verdict == Verdict::Stable) {
      stable.push_back(text::format_polynomial(f));
      if (dc.first_reducible) r.fail(detail::show(f) + ": Stable but f^(" + std::to_string(*dc.first_reducible) + ") reducible");
      return;
    }
    if (rep.verdict != Verdict::NotStable || !rep.witness) {
      r.fail(detail::show(f) + ": unexpected verdict " + std::string(to_string(rep.verdict)));
      return;
    }
    const auto w = static_cast<int>(rep.witness->n);
    if (w <= depth) {
      if (dc.first_reducible != w) r.fail(detail::show(f) + ": witness " + std::to_string(w) + " but first reducible differs");
    } else {
      ++r.tallies["witness_beyond_depth"];
      if (dc.first_reducible) r.fail(detail::show(f) + ": reducible before the witness index");
    }
  });
  r.tallies["stable"] = stable.size();
  r.details["stable"] = stable;
  r.details["monic"] = monic;
  r.details["depth"] = depth;
  r.seconds = detail::elapsed(t0);
  return r;
}

/// A criterion failure at witness n <= max_witness implies some f^(m),
/// m <= max(n, max_witness), is reducible. Runs over all polynomials of each degree.
inline SuiteResult soundness(const FieldRef& F, int min_degree = 2, int max_degree = 4, int max_witness = 3) {
  SuiteResult r = detail::start("soundness", F);
  const auto t0 = detail::now();
  for (int d = min_degree; d <= max_degree; ++d) {
    detail::for_each_polynomial(F, d, false, [&](const Polynomial& f) {
      const StabilityReport rep = necessary_condition_test(f);
      if (rep.verdict != Verdict::NotStable || rep.witness->n > static_cast<std::uint64_t>(max_witness)) {
        ++r.skipped;
        return;
      }
      ++r.checked;
      const auto n = static_cast<int>(rep.witness->n);
      const int m = std::max(n, max_witness);
      const DirectCheck dc = direct_iterate_check(f, m);
      if (!dc.first_reducible) {
        r.fail(detail::show(f) + ": witness " + std::to_string(n) + " but f^(1.." + std::to_string(m) + ") irreducible");
      } else {
        ++r.tallies[*dc.first_reducible <= n ? "reducible_by_witness" : "reducible_after_witness"];
      }
    });
  }
  r.details["max_witness"] = max_witness;
  r.details["min_degree"] = min_degree;
  r.details["max_degree"] = max_degree;
  r.seconds = detail::elapsed(t0);
  return r;
}

/// adjusted_resultant by explicit iterates against the residue-orbit route.
inline SuiteResult orbit_equivalence(const FieldRef& F, std::uint64_t seed, int count = 500, int max_degree = 5) {
  SuiteResult r = detail::start("orbit-equivalence", F);
  const auto t0 = detail::now();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    Polynomial f(F);
    do {
      const int d = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree - 1));
      f = oracle::random_polynomial(F, d, rng);
    } while (derivative(f).degree() < 1);
    const auto n = 1 + rng() % 3;
    const FieldElement a = adjusted_resultant(f, n, ResultantMethod::Explicit);
    const FieldElement b = adjusted_resultant(f, n, ResultantMethod::Orbit);
    ++r.checked;
    if (!(a == b)) {
      r.fail(detail::show(f) + ", n = " + std::to_string(n) + ": explicit " + text::format_element(a) + " orbit " +
             text::format_element(b));
    }
  }
  r.details["seed"] = seed;
  r.seconds = detail::elapsed(t0);
  return r;
}

inline nlohmann::json to_json(const SuiteResult& r, bool timing) {
  nlohmann::json j = json::document("verify");
  j["suite"] = r.suite;
  j["field"] = r.field;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  j["skipped"] = r.skipped;
  j["tallies"] = r.tallies;
  j["failures"] = r.failures;
  j["details"] = r.details;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace stabpoly::verify
